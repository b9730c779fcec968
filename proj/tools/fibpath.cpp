// fibpath: enumerate k-Fibonacci path families and cross-check the counting
// methods against each other and against the published tables.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "fibpaths/cli.hpp"

namespace {

using namespace fibpaths;

const std::map<std::string, FamilyKind> kFamilyNames = {
    {"fib", FamilyKind::Fib},
    {"grand", FamilyKind::Grand},
    {"prefix", FamilyKind::Prefix},
    {"grand-prefix", FamilyKind::GrandPrefix}};

const std::map<std::string, Method> kMethodNames = {
    {"closed", Method::Closed},       {"cf", Method::ContinuedFraction},
    {"automaton", Method::Automaton}, {"formula", Method::Formula},
    {"brute", Method::Brute}};

const std::map<std::string, cli::Format> kFormatNames = {
    {"text", cli::Format::Text},
    {"csv", cli::Format::Csv},
    {"json", cli::Format::Json}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count k-Fibonacci paths by closed forms, continued fractions, "
               "automata, coefficient formulas and brute force"};
  app.require_subcommand(1);

  cli::SeqOptions seq;
  seq.n = cli::default_order();
  auto* seq_cmd = app.add_subcommand("seq", "Print the counting sequence of one family");
  std::string seq_family, seq_method = "closed", seq_format = "text";
  seq_cmd->add_option("--family", seq_family, "Path family")
      ->required()
      ->check(CLI::IsMember(kFamilyNames));
  seq_cmd->add_option("--k", seq.k, "Color parameter k >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  seq_cmd->add_option("--n", seq.n, "Largest length n (default: FIBPATH_ORDER or 64)")
      ->check(CLI::NonNegativeNumber);
  seq_cmd->add_option("--method", seq_method, "Counting method")
      ->check(CLI::IsMember(kMethodNames));
  std::size_t seq_depth = 0;
  auto* seq_depth_opt =
      seq_cmd->add_option("--depth", seq_depth, "Chain truncation depth (cf, automaton)");
  seq_cmd->add_option("--format", seq_format, "Output format")
      ->check(CLI::IsMember(kFormatNames));
  seq_cmd->add_flag("--header", seq.header, "CSV: print an index header line");

  bool tables_json = false;
  auto* tables_cmd =
      app.add_subcommand("tables", "Recompute the published tables and diff them");
  tables_cmd->add_flag("--json", tables_json, "Cell-level JSON report");

  cli::VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check that every counting method agrees");
  verify_cmd->add_option("--k-max", verify.k_max, "Largest k")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", verify.n_max, "Largest length");
  verify_cmd->add_option("--brute-max", verify.brute_max, "Largest length for brute force")
      ->check(CLI::Range(0, 14));
  std::size_t verify_depth = 0;
  auto* verify_depth_opt = verify_cmd->add_option(
      "--depth", verify_depth, "Truncation depth (default ceil(n_max/2)+1 for cf)");
  std::string verify_family;
  auto* verify_family_opt = verify_cmd->add_option("--family", verify_family, "Only this family")
      ->check(CLI::IsMember(kFamilyNames));
  unsigned verify_k = 0;
  auto* verify_k_opt =
      verify_cmd->add_option("--k", verify_k, "Only this k")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  if (*seq_cmd) {
    seq.family = kFamilyNames.at(seq_family);
    seq.method = kMethodNames.at(seq_method);
    seq.format = kFormatNames.at(seq_format);
    if (*seq_depth_opt) seq.depth = seq_depth;
    return cli::run_seq(seq, std::cout, std::cerr);
  }
  if (*tables_cmd) {
    return cli::run_tables(cli::published_tables(), tables_json, std::cout);
  }
  if (*verify_depth_opt) verify.depth = verify_depth;
  if (*verify_family_opt) verify.family = kFamilyNames.at(verify_family);
  if (*verify_k_opt) verify.k = verify_k;
  return cli::run_verify(verify, std::cout);
}
