// Acceptance checks, one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "logint/corpus.hpp"
#include "logint/engine.hpp"
#include "logint/parser.hpp"
#include "logint/render.hpp"
#include "support/generators.hpp"
#include "support/raw_assembly.hpp"

using namespace logint;
using specfun::Complex;
using specfun::kPi;

namespace {

constexpr double kCatalan = 0.915965594177219015;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Check corpus_numeric() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  auto results = run_corpus(embedded_corpus());
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(results.size() == 12, "expected 12 entries");
  for (const auto& r : results) c.require(!r.error && r.numeric_match, r.entry.id + " numeric mismatch");
  c.require(seconds < 10, "runtime " + std::to_string(seconds) + " s");
  if (c.ok) c.detail << results.size() << " entries, " << seconds << " s";
  return c;
}

Check corpus_symbolic() {
  Check c;
  for (const auto& r : run_corpus(embedded_corpus())) {
    c.require(r.render_match, r.entry.id + " renders " + r.render.value_or("(error)"));
    SymbolicValue v = integrate_closed_form(parse_expression(r.entry.expr), r.entry.power);
    for (const auto& t : v.terms()) {
      bool allowed = std::holds_alternative<symbol::PiPow>(t.symbol) || std::holds_alternative<symbol::Zeta>(t.symbol);
      if (const auto* h = std::get_if<symbol::HurwitzZeta>(&t.symbol)) allowed = h->weight == 2 && h->q == Rational(1, 3);
      c.require(allowed, r.entry.id + " has stray symbol");
    }
  }
  if (c.ok) c.detail << "renders use only pi^k, zeta(m), psi'(1/3)";
  return c;
}

Check route_equivalence() {
  Check c;
  for (Rational a : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1, 4), Rational(-1, 4), Rational(3, 5),
                     Rational(-3, 5)}) {
    const double ad = a.to_double();
    const double t = std::acos(ad), s = std::sin(t);
    const double clausen = -specfun::clausen2(t) / s;
    const Complex r1(-ad, s), r2(-ad, -s);
    const double dilog = ((specfun::dilog(-1.0 / r1) - specfun::dilog(-1.0 / r2)) / (r2 - r1)).real();
    c.require(std::abs(dilog - clausen) <= 1e-10, "dilog vs Clausen at a = " + a.str());
    if (auto angle = rational_angle(a)) {
      const double hurwitz = numeric_value(quadratic_term(a, 0, 1));
      const double raw = -periodic_sum(sine_profile(*angle), 2, 1).evaluate() / s;
      c.require(std::abs(hurwitz - clausen) <= 1e-10, "Hurwitz vs Clausen at a = " + a.str());
      c.require(std::abs(hurwitz - dilog) <= 1e-10, "Hurwitz vs dilog at a = " + a.str());
      c.require(std::abs(raw - clausen) <= 1e-10, "raw residue sum vs Clausen at a = " + a.str());
    }
  }
  if (c.ok) c.detail << "7 values of a";
  return c;
}

Check clausen_identities() {
  Check c;
  const double sqrt3 = std::sqrt(3.0), z2 = specfun::zeta(2);
  const double h13 = specfun::hurwitz_zeta(2, Rational(1, 3)), h16 = specfun::hurwitz_zeta(2, Rational(1, 6));
  c.require(std::abs(specfun::clausen2(kPi / 2) - kCatalan) <= 1e-11, "Cl2(pi/2) != Catalan");
  c.require(std::abs(specfun::clausen2(2 * kPi / 3) - sqrt3 * ((1.0 / 9 - 1) / 2 * z2 + h13 / 9)) <= 1e-11,
            "Cl2(2pi/3) identity");
  c.require(std::abs(specfun::clausen2(kPi / 3) - sqrt3 * ((1.0 / 9 - 1) / 2 * z2 + (h16 + h13) / 36)) <= 1e-11,
            "Cl2(pi/3) identity");
  if (c.ok) c.detail << "Catalan and both Hurwitz forms";
  return c;
}

Check property_suite() {
  Check c;
  std::mt19937_64 rng(20241018);
  int pf = 0, parsed = 0, agreed = 0;
  for (int i = 0; i < 300; ++i) {
    RationalFunction f = fixtures::random_admissible(rng);
    if (recombine(partial_fractions(f)) == normalize(f)) ++pf;
    RationalFunction g = fixtures::random_rational_function(rng);
    if (parse_expression(render_expression(g)) == g) ++parsed;
  }
  c.require(pf == 300, "partial-fraction round trip " + std::to_string(pf) + "/300");
  c.require(parsed == 300, "parser round trip " + std::to_string(parsed) + "/300");

  for (int i = 0; i < 200; ++i) {
    RationalFunction f = fixtures::random_admissible(rng);
    const int p = 1 + i % 3;
    const double oracle = integrate_log_power(f, p).value;
    if (std::abs(numeric_value(integrate_closed_form(f, p)) - oracle) <= 1e-9 * (1 + std::abs(oracle))) ++agreed;
  }
  c.require(agreed == 200, "engine vs oracle " + std::to_string(agreed) + "/200");

  for (const auto& e : embedded_corpus()) {
    RationalFunction f = parse_expression(e.expr);
    QuadratureResult a = integrate_log_power(f, e.power);
    QuadratureResult b = integrate_log_power_substituted(f, e.power);
    c.require(std::abs(a.value - b.value) <= a.est_error + b.est_error + kDefaultRelTol * (1 + std::abs(a.value)),
              e.id + " two-rule disagreement");
    SymbolicValue raw = fixtures::raw_closed_form(f, e.power);
    SymbolicValue once = canonicalize(raw);
    c.require(canonicalize(once) == once, e.id + " canonicalize not idempotent");
    c.require(rel_gap(numeric_value(once), numeric_value(raw)) <= 1e-12, e.id + " canonicalize changed value");
  }
  if (c.ok) c.detail << "round trips 300/300, engine-oracle 200/200, corpus two-rule and canonicalize";
  return c;
}

Check erratum_detection() {
  Check c;
  auto results = run_corpus(load_corpus(std::string(LOGINT_FIXTURE_DIR) + "/erratum_j4.json"));
  const double expected_gap = 73 * kPi * kPi * kPi / (81 * std::sqrt(3.0));
  bool found = false;
  for (const auto& r : results) {
    if (r.entry.id != "J4-as-printed") continue;
    found = true;
    c.require(!r.passed(), "printed J4 was accepted");
    c.require(std::abs(r.disagreement - expected_gap) <= 1e-6 * expected_gap,
              "disagreement " + std::to_string(r.disagreement));
    if (c.ok) c.detail << "printed J4 rejected, disagreement " << r.disagreement;
  }
  c.require(found, "fixture entry missing");
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"1 corpus reproduction, numeric", corpus_numeric},
      {"2 corpus reproduction, symbolic", corpus_symbolic},
      {"3 route equivalence", route_equivalence},
      {"4 Clausen identities", clausen_identities},
      {"5 property suite", property_suite},
      {"6 erratum detection", erratum_detection},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.detail.str() << std::endl;
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
