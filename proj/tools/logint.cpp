#include <iostream>

#include "CLI11.hpp"
#include "logint/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed forms and quadrature for int_0^1 R(x) log^p x dx"};
  app.require_subcommand(1);

  std::string expr;
  int power = 1;
  bool json = false;
  double rel_tol = logint::kDefaultRelTol;
  auto* eval = app.add_subcommand("eval", "evaluate one integral");
  eval->add_option("--expr", expr, "rational function of x")->required();
  eval->add_option("--power", power, "power p of log x")->required();
  eval->add_flag("--json", json, "JSON report");
  eval->add_option("--rel-tol", rel_tol, "quadrature tolerance")->check(CLI::Range(1e-13, 1e-6));

  std::string corpus_file;
  auto* corpus = app.add_subcommand("corpus", "check the table of identities");
  corpus->add_flag("--json", json, "JSON report");
  corpus->add_option("--corpus-file", corpus_file, "JSON array of corpus entries")->check(CLI::ExistingFile);

  app.add_subcommand("constants", "print reference constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return logint::cli::kParseError;
  }

  if (*eval) return logint::cli::cmd_eval(expr, power, json, rel_tol, std::cout, std::cerr);
  if (*corpus) {
    try {
      auto entries = corpus_file.empty() ? logint::embedded_corpus() : logint::load_corpus(corpus_file);
      return logint::cli::cmd_corpus(entries, json, std::cout, std::cerr);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return logint::cli::kParseError;
    }
  }
  return logint::cli::cmd_constants(std::cout);
}
