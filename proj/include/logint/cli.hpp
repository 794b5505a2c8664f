#pragma once

// Command implementations behind the logint executable. Each writes to the given
// streams and returns the process exit code.

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "logint/corpus.hpp"
#include "logint/engine.hpp"
#include "logint/parser.hpp"
#include "logint/render.hpp"

namespace logint::cli {

enum ExitCode : int {
  kOk = 0,
  kCorpusFailure = 1,
  kParseError = 2,
  kNotIntegrable = 3,
  kMismatch = 4,
};

inline constexpr double kEvalAgreementTol = 1e-8;

struct EvalOutcome {
  std::string expr;
  int power = 0;
  std::optional<std::string> closed_form;
  std::optional<double> numeric;
  std::optional<double> oracle;
  std::optional<double> abs_disagreement;
  std::string status = "error";  // ok, oracle_only, error
  std::optional<std::string> error;
  int exit_code = kOk;
};

inline EvalOutcome evaluate_command(const std::string& expr, int power, double rel_tol) {
  EvalOutcome out;
  out.expr = expr;
  out.power = power;
  auto fail = [&](int code, const std::string& msg) {
    out.status = "error";
    out.error = msg;
    out.exit_code = code;
    return out;
  };

  RationalFunction f;
  try {
    f = parse_expression(expr);
  } catch (const SyntaxError& e) {
    return fail(kParseError, e.what());
  } catch (const DivisionByZeroPoly& e) {
    return fail(kParseError, e.what());
  }
  if (power < 0) return fail(kParseError, "power must be >= 0");

  std::optional<double> closed_numeric;
  try {
    SymbolicValue v = integrate_closed_form(f, power);
    out.closed_form = render(v);
    closed_numeric = numeric_value(v);
  } catch (const PoleInUnitInterval& e) {
    return fail(kNotIntegrable, e.what());
  } catch (const UnsupportedQuadratic& e) {
    closed_numeric = e.numeric();  // direct summation, no closed form
  } catch (const Error&) {
    // outside the closed-form family; the oracle alone answers
  }

  try {
    out.oracle = integrate_log_power(f, power, rel_tol).value;
  } catch (const PoleDetected& e) {
    return fail(kNotIntegrable, e.what());
  } catch (const NoConvergence& e) {
    return fail(kNotIntegrable, e.what());
  } catch (const DomainError& e) {
    return fail(kParseError, e.what());
  }

  out.numeric = closed_numeric.value_or(*out.oracle);
  out.abs_disagreement = std::abs(*out.numeric - *out.oracle);
  out.status = out.closed_form ? "ok" : "oracle_only";
  if (*out.abs_disagreement > kEvalAgreementTol * (1 + std::abs(*out.oracle))) {
    out.error = "closed form and quadrature disagree";
    out.exit_code = kMismatch;
  }
  return out;
}

inline nlohmann::json to_json(const EvalOutcome& o) {
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"expr", o.expr},
          {"power", o.power},
          {"closed_form", opt(o.closed_form)},
          {"numeric", opt(o.numeric)},
          {"oracle", opt(o.oracle)},
          {"abs_disagreement", opt(o.abs_disagreement)},
          {"status", o.status},
          {"error", opt(o.error)}};
}

inline std::string format_double(double x, int digits = 16) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

inline int cmd_eval(const std::string& expr, int power, bool json, double rel_tol, std::ostream& out,
                    std::ostream& err) {
  EvalOutcome o = evaluate_command(expr, power, rel_tol);
  if (json) {
    out << to_json(o).dump(2) << "\n";
  } else {
    if (o.oracle) {
      out << "closed form:  " << o.closed_form.value_or("(none)") << "\n";
      out << "numeric:      " << format_double(*o.numeric) << "\n";
      out << "oracle:       " << format_double(*o.oracle) << "\n";
      out << "disagreement: " << format_double(*o.abs_disagreement, 3) << "\n";
    }
    if (o.error) err << "error: " << *o.error << "\n";
  }
  return o.exit_code;
}

inline int cmd_corpus(const std::vector<CorpusEntry>& entries, bool json, std::ostream& out, std::ostream& err) {
  std::vector<CorpusOutcome> results = run_corpus(entries);
  std::vector<std::string> failing;
  for (const auto& r : results)
    if (!r.passed()) failing.push_back(r.entry.id);

  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(18) << r.entry.id << (r.passed() ? "pass  " : "FAIL  ");
      if (r.error) {
        out << "error: " << *r.error << "\n";
        continue;
      }
      out << std::setw(44) << *r.render << " " << format_double(r.oracle);
      if (!r.render_match) out << "  expected render " << r.entry.expected_render;
      if (!r.numeric_match) out << "  disagreement " << format_double(r.disagreement, 6);
      out << "\n";
    }
    out << (results.size() - failing.size()) << "/" << results.size() << " pass\n";
  }
  if (failing.empty()) return kOk;
  err << "failing:";
  for (const auto& id : failing) err << " " << id;
  err << "\n";
  return kCorpusFailure;
}

inline int cmd_constants(std::ostream& out) {
  using namespace specfun;
  const std::pair<const char*, double> rows[] = {
      {"pi", kPi},
      {"psi'(1/3)", hurwitz_zeta(2, Rational(1, 3))},
      {"zeta(3)", zeta(3)},
      {"zeta(5)", zeta(5)},
      {"zeta(7)", zeta(7)},
      {"Catalan", catalan()},
      {"Cl2(pi/3)", clausen2_pi(Rational(1, 3))},
      {"Cl2(2pi/3)", clausen2_pi(Rational(2, 3))},
  };
  for (const auto& [name, value] : rows) out << std::left << std::setw(12) << name << format_double(value, 15) << "\n";
  return kOk;
}

}  // namespace logint::cli
