#pragma once

// Table identities checked against both the closed-form engine and the
// quadrature oracle.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "logint/engine.hpp"
#include "logint/parser.hpp"
#include "logint/render.hpp"

namespace logint {

struct CorpusEntry {
  std::string id;
  std::string expr;
  int power = 1;
  std::string expected_render;
  double expected_numeric = 0.0;
  std::string provenance;  // PAPER or DERIVED
  std::string comment;
};

inline void to_json(nlohmann::json& j, const CorpusEntry& e) {
  j = {{"id", e.id},
       {"expr", e.expr},
       {"power", e.power},
       {"expected_render", e.expected_render},
       {"expected_numeric", e.expected_numeric},
       {"provenance", e.provenance}};
  if (!e.comment.empty()) j["comment"] = e.comment;
}

inline void from_json(const nlohmann::json& j, CorpusEntry& e) {
  j.at("id").get_to(e.id);
  j.at("expr").get_to(e.expr);
  j.at("power").get_to(e.power);
  j.at("expected_render").get_to(e.expected_render);
  j.at("expected_numeric").get_to(e.expected_numeric);
  j.at("provenance").get_to(e.provenance);
  if (e.provenance != "PAPER" && e.provenance != "DERIVED")
    throw DomainError("corpus entry " + e.id + ": provenance must be PAPER or DERIVED");
  if (!std::isfinite(e.expected_numeric)) throw DomainError("corpus entry " + e.id + ": expected_numeric not finite");
  e.comment = j.value("comment", std::string());
}

inline const std::vector<CorpusEntry>& embedded_corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"GR-4.231.1", "1/(1+x)", 1, "-pi^2/12", -0.82246703342411322, "PAPER", ""},
      {"GR-4.233.1", "1/(x^2+x+1)", 1, "4*pi^2/27 - (2/9)*psi'(1/3)", -0.78130241289648630, "PAPER", ""},
      {"GR-4.233.2", "1/(x^2-x+1)", 1, "2*pi^2/9 - (1/3)*psi'(1/3)", -1.1719536193447294, "PAPER", ""},
      {"GR-4.233.3", "x/(x^2+x+1)", 1, "-7*pi^2/54 + (1/9)*psi'(1/3)", -0.15766014916783233, "PAPER", ""},
      {"GR-4.233.4", "x/(x^2-x+1)", 1, "5*pi^2/36 - (1/6)*psi'(1/3)", -0.31182113186432698, "PAPER", ""},
      {"GR-4.261.8", "(1-x)/(1-x^6)", 2, "(8*sqrt(3)*pi^3 + 351*zeta(3))/486", 1.7521760195875646, "PAPER", ""},
      {"GR-4.261.8-log4", "(1-x)/(1-x^6)", 4, "(32*sqrt(3)*pi^5 + 16335*zeta(5))/1458", 23.250718401594779, "PAPER", ""},
      {"GR-4.261.8-log6", "(1-x)/(1-x^6)", 6, "(1792*sqrt(3)*pi^7 + 9295965*zeta(7))/26244", 714.37553587111752, "PAPER",
       "printed as 7(256 sqrt(3) pi^7 + 1327995 zeta(7))/26244"},
      {"J1", "1/(1+x)", 2, "3*zeta(3)/2", 1.8030853547393914, "PAPER", ""},
      {"J2", "1/(1-x+x^2)", 2, "10*sqrt(3)*pi^3/243", 2.2100595293751996, "PAPER", "printed as 10 pi^3/(81 sqrt(3))"},
      {"J3", "x/(1-x+x^2)", 2, "(5*sqrt(3)*pi^3 - 162*zeta(3))/243", 0.30365849591453696, "PAPER",
       "printed as 5 pi^3/(81 sqrt(3)) - 2 zeta(3)/3"},
      {"J4", "1/(1+x+x^2)", 2, "8*sqrt(3)*pi^3/243", 1.7680476235001597, "DERIVED",
       "source prints 81 pi^3/(81 sqrt(3)), a suspected typo for 8 pi^3/(81 sqrt(3)); the 4.261.8 combination and "
       "the series 2 sum U_k(-1/2)/(k+1)^3 both give 8"},
  };
  return entries;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  return j.get<std::vector<CorpusEntry>>();
}

struct CorpusOutcome {
  CorpusEntry entry;
  std::optional<std::string> render;
  double numeric = std::nan("");
  double oracle = std::nan("");
  double disagreement = std::nan("");  // |expected_numeric - oracle|
  bool render_match = false;
  bool numeric_match = false;
  std::optional<std::string> error;

  bool passed() const { return !error && render_match && numeric_match; }
};

inline constexpr double kCorpusRelTol = 1e-9;

inline bool close_relative(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

/// The expected value must match the oracle, and so must the closed form.
inline CorpusOutcome run_entry(const CorpusEntry& e) {
  CorpusOutcome out;
  out.entry = e;
  try {
    RationalFunction f = parse_expression(e.expr);
    out.oracle = integrate_log_power(f, e.power).value;
    out.disagreement = std::abs(e.expected_numeric - out.oracle);
    SymbolicValue v = integrate_closed_form(f, e.power);
    out.render = render(v);
    out.numeric = numeric_value(v);
    out.render_match = *out.render == e.expected_render;
    out.numeric_match = close_relative(e.expected_numeric, out.oracle, kCorpusRelTol) &&
                        close_relative(out.numeric, out.oracle, kCorpusRelTol);
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  return out;
}

/// Runs entries concurrently; results sorted by id.
inline std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<std::future<CorpusOutcome>> jobs;
  jobs.reserve(entries.size());
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, run_entry, e));
  std::vector<CorpusOutcome> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.entry.id < b.entry.id; });
  return out;
}

inline nlohmann::json to_json(const CorpusOutcome& o) {
  auto number = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
  nlohmann::json j = o.entry;
  j["render"] = o.render ? nlohmann::json(*o.render) : nlohmann::json(nullptr);
  j["numeric"] = number(o.numeric);
  j["oracle"] = number(o.oracle);
  j["disagreement"] = number(o.disagreement);
  j["render_match"] = o.render_match;
  j["numeric_match"] = o.numeric_match;
  j["status"] = o.passed() ? "pass" : "fail";
  j["error"] = o.error ? nlohmann::json(*o.error) : nlohmann::json(nullptr);
  return j;
}

}  // namespace logint
