// Command-line front end: case ingestion, one subcommand per module family,
// deterministic JSON reports.
//
// Exit codes: 0 clean, 2 malformed input or case, 3 resource-cap abort.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tce/casefile.hpp"

namespace {

int emit(const tce::Report& report, const std::string& out_path) {
  std::string text = report.body.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact closure computations for homogeneous ideals over plane-curve cones"};
  app.require_subcommand(1);

  std::string cases_path;
  std::string out_path;
  tce::RunOptions options;

  auto add_common = [&](CLI::App* cmd, bool needs_cases) {
    if (needs_cases)
      cmd->add_option("--cases", cases_path, "case file (JSON)")->required();
    cmd->add_option("--emax", options.e_max, "max Frobenius exponent (q = p^e)");
    cmd->add_option("--budget", options.budget, "random-combination budget for relation searches");
    cmd->add_option("--seed", options.seed, "root seed; per-case seeds derive from it");
    cmd->add_option("--degree-cap", options.degree_cap, "max graded-piece dimension per solve");
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  };

  CLI::App* verdict = app.add_subcommand("verdict", "closure classification with citations");
  add_common(verdict, true);
  verdict->add_flag("--audit", options.audit, "include non-firing rule evaluations");

  CLI::App* invariants = app.add_subcommand("invariants", "intersection-theoretic invariants");
  add_common(invariants, true);

  CLI::App* syzygy = app.add_subcommand("syzygy", "relation-space dimensions and generator degrees");
  add_common(syzygy, true);
  int k_min = 1, k_max = 6;
  syzygy->add_option("--kmin", k_min, "lowest total degree");
  syzygy->add_option("--kmax", k_max, "highest total degree");

  CLI::App* frobenius = app.add_subcommand("frobenius", "bracket-power witness vectors");
  add_common(frobenius, true);

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse invariant table for a plane cubic");
  std::string curve;
  std::vector<std::int64_t> primes;
  hasse->add_option("--curve", curve, "plane cubic in x, y, z")->required();
  hasse->add_option("--p", primes, "primes to evaluate")->required();
  hasse->add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hasse->parsed()) return emit(tce::run_hasse(curve, primes), out_path);

    tce::CaseFile file = tce::load_case_file(cases_path);
    if (verdict->parsed()) return emit(tce::run_verdict(file, options), out_path);
    if (invariants->parsed()) return emit(tce::run_invariants(file, options), out_path);
    if (syzygy->parsed()) return emit(tce::run_syzygy(file, options, k_min, k_max), out_path);
    if (frobenius->parsed()) return emit(tce::run_frobenius(file, options), out_path);
  } catch (const tce::CaseFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tce::ResourceCapError& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
