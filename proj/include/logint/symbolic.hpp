#pragma once

// Exact linear combinations of named constants, and their numeric values.

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logint/algebraic_scalar.hpp"
#include "logint/specfun.hpp"

namespace logint {

namespace symbol {

struct One {
  friend auto operator<=>(const One&, const One&) = default;
};
/// pi^power
struct PiPow {
  int power;
  friend auto operator<=>(const PiPow&, const PiPow&) = default;
};
/// zeta(weight)
struct Zeta {
  int weight;
  friend auto operator<=>(const Zeta&, const Zeta&) = default;
};
/// zeta(weight, q)
struct HurwitzZeta {
  int weight;
  Rational q;
  friend auto operator<=>(const HurwitzZeta&, const HurwitzZeta&) = default;
};
/// Li_weight(arg), -1 <= arg < 0
struct PolyLogRational {
  int weight;
  Rational arg;
  friend auto operator<=>(const PolyLogRational&, const PolyLogRational&) = default;
};
/// Im Li_weight(e^{i t}), t = arccos a
struct UnitCircleLiIm {
  int weight;
  Rational a;
  friend auto operator<=>(const UnitCircleLiIm&, const UnitCircleLiIm&) = default;
};
/// Re Li_weight(e^{i t}), t = arccos a
struct UnitCircleLiRe {
  int weight;
  Rational a;
  friend auto operator<=>(const UnitCircleLiRe&, const UnitCircleLiRe&) = default;
};

}  // namespace symbol

/// Variant order is the canonical display order of symbol kinds.
using ConstantSymbol = std::variant<symbol::One, symbol::PiPow, symbol::Zeta, symbol::HurwitzZeta,
                                    symbol::PolyLogRational, symbol::UnitCircleLiIm, symbol::UnitCircleLiRe>;

inline double numeric_value(const ConstantSymbol& s) {
  using specfun::Complex;
  struct Visitor {
    double operator()(const symbol::One&) const { return 1.0; }
    double operator()(const symbol::PiPow& p) const { return std::pow(specfun::kPi, p.power); }
    double operator()(const symbol::Zeta& z) const { return specfun::zeta(z.weight); }
    double operator()(const symbol::HurwitzZeta& h) const { return specfun::hurwitz_zeta(h.weight, h.q); }
    double operator()(const symbol::PolyLogRational& l) const {
      return specfun::polylog(l.weight, Complex(l.arg.to_double(), 0.0)).real();
    }
    double operator()(const symbol::UnitCircleLiIm& l) const {
      return specfun::polylog(l.weight, std::polar(1.0, std::acos(l.a.to_double()))).imag();
    }
    double operator()(const symbol::UnitCircleLiRe& l) const {
      return specfun::polylog(l.weight, std::polar(1.0, std::acos(l.a.to_double()))).real();
    }
  };
  return std::visit(Visitor{}, s);
}

struct SymbolicTerm {
  AlgebraicScalar coeff;
  ConstantSymbol symbol;
};

/// Sum of coeff * symbol. Terms are keyed by (symbol, radicand of coeff), so
/// a symbol may carry one rational and one sqrt(d) coefficient at once.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  SymbolicValue(const AlgebraicScalar& c, const ConstantSymbol& s) { add(c, s); }  // NOLINT
  static SymbolicValue rational(const Rational& q) { return {AlgebraicScalar(q), symbol::One{}}; }

  void add(const AlgebraicScalar& c, const ConstantSymbol& s) {
    if (c.is_zero()) return;
    Key key{s, c.radicand()};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c.rational());
      return;
    }
    it->second += c.rational();
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms in canonical order: symbol kind, weight, argument, radicand.
  std::vector<SymbolicTerm> terms() const {
    std::vector<SymbolicTerm> out;
    for (const auto& [key, q] : terms_) out.push_back({AlgebraicScalar(q, key.second), key.first});
    return out;
  }

  SymbolicValue& operator+=(const SymbolicValue& o) {
    for (const auto& [key, q] : o.terms_) add(AlgebraicScalar(q, key.second), key.first);
    return *this;
  }
  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a += b * AlgebraicScalar(-1); }
  friend SymbolicValue operator*(const SymbolicValue& v, const AlgebraicScalar& c) {
    SymbolicValue out;
    for (const auto& [key, q] : v.terms_) out.add(AlgebraicScalar(q, key.second) * c, key.first);
    return out;
  }
  friend SymbolicValue operator*(const AlgebraicScalar& c, const SymbolicValue& v) { return v * c; }

  friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;

 private:
  using Key = std::pair<ConstantSymbol, int>;
  std::map<Key, Rational> terms_;
};

inline double numeric_value(const SymbolicValue& v) {
  specfun::CompensatedSum sum;
  for (const auto& t : v.terms()) sum += t.coeff.to_double() * numeric_value(t.symbol);
  return sum.value();
}

}  // namespace logint
