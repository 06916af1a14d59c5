#ifndef TCE_CASEFILE_HPP
#define TCE_CASEFILE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tce/ring.hpp"
#include "tce/verdict.hpp"

namespace tce {

// A malformed file or case description. Messages carry the JSON path of the
// offending field (and the parser's position for syntax errors).
class CaseFileError : public std::runtime_error {
public:
  explicit CaseFileError(const std::string& what) : std::runtime_error(what) {}
};

struct CaseOptions {
  std::optional<int> e_max;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> degree_cap;
};

struct CaseSpec {
  std::vector<std::string> generators;
  std::string candidate;
  std::optional<int> twist;
  CaseOptions options;
};

// One ring, many cases. The schema is strict: unknown keys are rejected.
struct CaseFile {
  std::int64_t characteristic = 0;
  std::vector<std::string> variables;
  std::optional<std::string> relation;
  std::vector<CaseSpec> cases;

  std::shared_ptr<GradedRing> make_ring() const;
};

CaseFile parse_case_file(const std::string& text);
CaseFile load_case_file(const std::string& path);
nlohmann::json case_file_to_json(const CaseFile& file);

// Defaults applied by the CLI; per-case options win over these.
struct RunOptions {
  int e_max = 2;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  std::int64_t degree_cap = 20000;
  bool audit = false;
};

ClassifyConfig resolve_config(const RunOptions& defaults, const CaseOptions& opts,
                              std::size_t case_index);

// Report builders for the CLI subcommands. `exit_code` is 0 for a clean run,
// 2 when any case was malformed, 3 when a resource cap aborted a case.
struct Report {
  nlohmann::json body;
  int exit_code = 0;
};

Report run_verdict(const CaseFile& file, const RunOptions& options);
Report run_invariants(const CaseFile& file, const RunOptions& options);
Report run_syzygy(const CaseFile& file, const RunOptions& options, int k_min, int k_max);
Report run_frobenius(const CaseFile& file, const RunOptions& options);
Report run_hasse(const std::string& cubic_text, const std::vector<std::int64_t>& primes);

} // namespace tce

#endif
