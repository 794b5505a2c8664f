#pragma once

// Text rendering of SymbolicValue. Hurwitz zeta values are displayed in
// polygamma notation, zeta(w, q) = (-1)^w psi^{(w-1)}(q) / (w-1)!.
//
// Values built only from 1, pi^k and zeta(m) are put over a common
// denominator, "(8*sqrt(3)*pi^3 + 351*zeta(3))/486"; anything involving a
// special-function symbol is rendered term by term with parenthesized
// fractional coefficients, "2*pi^2/9 - (1/3)*psi'(1/3)".

#include <string>
#include <vector>

#include "logint/symbolic.hpp"

namespace logint {

enum class RenderStyle { ascii, unicode, latex };

namespace detail {

inline std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

inline std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

class Renderer {
 public:
  explicit Renderer(RenderStyle style) : style_(style) {}

  std::string render(const SymbolicValue& v) const {
    if (v.empty()) return "0";
    std::vector<SymbolicTerm> terms = v.terms();
    bool elementary = true;
    for (const auto& t : terms) elementary = elementary && is_elementary(t.symbol);
    if (elementary && terms.size() >= 2) return common_denominator(terms);
    std::string out;
    for (const auto& t : terms) append_signed(out, single_term(t));
    return out;
  }

 private:
  struct Signed {
    bool negative;
    std::string magnitude;
  };

  static bool is_elementary(const ConstantSymbol& s) {
    return std::holds_alternative<symbol::One>(s) || std::holds_alternative<symbol::PiPow>(s) ||
           std::holds_alternative<symbol::Zeta>(s);
  }

  void append_signed(std::string& out, const Signed& t) const {
    const char* minus = style_ == RenderStyle::unicode ? "−" : "-";
    if (out.empty()) {
      out = (t.negative ? std::string(minus) : std::string()) + t.magnitude;
    } else {
      out += t.negative ? std::string(" ") + minus + " " : std::string(" + ");
      out += t.magnitude;
    }
  }

  std::string mul() const {
    switch (style_) {
      case RenderStyle::ascii: return "*";
      case RenderStyle::unicode: return "";
      case RenderStyle::latex: return " ";
    }
    return "*";
  }

  std::string sqrt_of(int d) const {
    switch (style_) {
      case RenderStyle::ascii: return "sqrt(" + std::to_string(d) + ")";
      case RenderStyle::unicode: return "√" + std::to_string(d);
      case RenderStyle::latex: return "\\sqrt{" + std::to_string(d) + "}";
    }
    return {};
  }

  std::string rational_arg(const Rational& q) const {
    if (style_ == RenderStyle::latex && !q.is_integer()) {
      std::string sign = q.sign() < 0 ? "-" : "";
      return sign + "\\tfrac{" + q.abs().numerator().str() + "}{" + q.denominator().str() + "}";
    }
    if (style_ == RenderStyle::unicode && q.sign() < 0) return "−" + q.abs().str();
    return q.str();
  }

  std::string symbol_text(const ConstantSymbol& s) const {
    struct Visitor {
      const Renderer& r;
      std::string operator()(const symbol::One&) const { return ""; }
      std::string operator()(const symbol::PiPow& p) const {
        switch (r.style_) {
          case RenderStyle::ascii: return p.power == 1 ? "pi" : "pi^" + std::to_string(p.power);
          case RenderStyle::unicode: return p.power == 1 ? "π" : "π" + superscript(p.power);
          case RenderStyle::latex: return p.power == 1 ? "\\pi" : "\\pi^{" + std::to_string(p.power) + "}";
        }
        return {};
      }
      std::string operator()(const symbol::Zeta& z) const {
        switch (r.style_) {
          case RenderStyle::ascii: return "zeta(" + std::to_string(z.weight) + ")";
          case RenderStyle::unicode: return "ζ(" + std::to_string(z.weight) + ")";
          case RenderStyle::latex: return "\\zeta(" + std::to_string(z.weight) + ")";
        }
        return {};
      }
      std::string operator()(const symbol::HurwitzZeta& h) const {
        const int order = h.weight - 1;
        std::string name;
        switch (r.style_) {
          case RenderStyle::ascii:
            name = order <= 3 ? "psi" + std::string(static_cast<std::size_t>(order), '\'') : "psi^(" + std::to_string(order) + ")";
            break;
          case RenderStyle::unicode: {
            static const char* primes[] = {"", "′", "″", "‴"};
            name = order <= 3 ? std::string("ψ") + primes[order] : "ψ⁽" + superscript(order) + "⁾";
            break;
          }
          case RenderStyle::latex:
            name = order <= 3 ? "\\psi" + std::string(static_cast<std::size_t>(order), '\'')
                              : "\\psi^{(" + std::to_string(order) + ")}";
            break;
        }
        return name + "(" + r.rational_arg(h.q) + ")";
      }
      std::string operator()(const symbol::PolyLogRational& l) const {
        switch (r.style_) {
          case RenderStyle::ascii: return "Li(" + std::to_string(l.weight) + "," + l.arg.str() + ")";
          case RenderStyle::unicode: return "Li" + subscript(l.weight) + "(" + r.rational_arg(l.arg) + ")";
          case RenderStyle::latex: return "\\operatorname{Li}_{" + std::to_string(l.weight) + "}(" + r.rational_arg(l.arg) + ")";
        }
        return {};
      }
      std::string unit_circle(const char* part, int weight, const Rational& a) const {
        switch (r.style_) {
          case RenderStyle::ascii: return std::string(part) + "Li(" + std::to_string(weight) + "," + a.str() + ")";
          case RenderStyle::unicode:
            return std::string(part) + " Li" + subscript(weight) + "(e^{i·arccos(" + r.rational_arg(a) + ")})";
          case RenderStyle::latex:
            return std::string("\\operatorname{") + part + "}\\operatorname{Li}_{" + std::to_string(weight) +
                   "}(e^{i\\arccos(" + r.rational_arg(a) + ")})";
        }
        return {};
      }
      std::string operator()(const symbol::UnitCircleLiIm& l) const { return unit_circle("Im", l.weight, l.a); }
      std::string operator()(const symbol::UnitCircleLiRe& l) const { return unit_circle("Re", l.weight, l.a); }
    };
    return std::visit(Visitor{*this}, s);
  }

  std::string join_factors(const std::vector<std::string>& parts) const {
    std::string out;
    for (const auto& p : parts) {
      if (p.empty()) continue;
      if (!out.empty()) out += mul();
      out += p;
    }
    return out;
  }

  std::string fraction(const std::string& num, const BigInt& den, bool num_is_sum) const {
    if (den == 1) return num;
    if (style_ == RenderStyle::latex) return "\\frac{" + num + "}{" + den.str() + "}";
    return (num_is_sum ? "(" + num + ")" : num) + "/" + den.str();
  }

  /// |n| * sqrt(d) * symbol
  std::string elementary_numerator(const BigInt& n, int d, const ConstantSymbol& s) const {
    std::string sym = symbol_text(s);
    std::string rad = d == 1 ? "" : sqrt_of(d);
    std::string count = (n == 1 && !(sym.empty() && rad.empty())) ? "" : n.str();
    return join_factors({count, rad, sym});
  }

  Signed single_term(const SymbolicTerm& t) const {
    Rational q = t.coeff.rational();
    if (const auto* h = std::get_if<symbol::HurwitzZeta>(&t.symbol)) {
      // zeta(w,q) = (-1)^w psi^{(w-1)}(q) / (w-1)!
      q = q / Rational(factorial(static_cast<unsigned>(h->weight - 1)));
      if (h->weight % 2 == 1) q = -q;
    }
    const bool negative = q.sign() < 0;
    q = q.abs();
    const int d = t.coeff.radicand();
    if (is_elementary(t.symbol))
      return {negative, fraction(elementary_numerator(q.numerator(), d, t.symbol), q.denominator(), false)};
    std::string coeff;
    if (!(q == Rational(1))) {
      if (q.is_integer()) {
        coeff = q.str();
      } else if (style_ == RenderStyle::latex) {
        coeff = "\\frac{" + q.numerator().str() + "}{" + q.denominator().str() + "}";
      } else {
        coeff = "(" + q.str() + ")";
      }
    }
    return {negative, join_factors({coeff, d == 1 ? "" : sqrt_of(d), symbol_text(t.symbol)})};
  }

  std::string common_denominator(const std::vector<SymbolicTerm>& terms) const {
    BigInt den = 1;
    for (const auto& t : terms) den = lcm(den, t.coeff.rational().denominator());
    std::string num;
    for (const auto& t : terms) {
      Rational scaled = t.coeff.rational() * Rational(den);
      append_signed(num, {scaled.sign() < 0, elementary_numerator(scaled.abs().numerator(), t.coeff.radicand(), t.symbol)});
    }
    return fraction(num, den, true);
  }

  RenderStyle style_;
};

}  // namespace detail

inline std::string render(const SymbolicValue& v, RenderStyle style = RenderStyle::ascii) {
  return detail::Renderer(style).render(v);
}

}  // namespace logint
