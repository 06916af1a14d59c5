#ifndef TCE_VERDICT_HPP
#define TCE_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tce/forcing.hpp"
#include "tce/frobenius.hpp"
#include "tce/membership.hpp"
#include "tce/syzygy.hpp"

namespace tce {

// Closure classification. Memberships are ordered by strength (an ideal
// element lies in every closure; Frobenius closure sits inside plus closure
// sits inside tight closure); NotInSolidClosure is the unconditional
// exclusion and RefutedUnderTestElement the conditional one.
enum class Status {
  Unknown,
  RefutedUnderTestElement,
  NotInSolidClosure,
  InTightClosure,
  InPlusClosure,
  InFrobeniusClosure,
  InIdeal,
};

std::string status_name(Status s);
int status_strength(Status s);

struct RuleEval {
  std::string rule;       // "R1".."R8"
  std::string statement;  // what the rule decides, in plain math terms
  bool applicable = false;
  bool fired = false;
  std::optional<Status> status;
  nlohmann::json evidence;
  std::string note;
};

struct Verdict {
  Status status = Status::Unknown;
  std::string rule;
  std::string statement;
  nlohmann::json evidence;
  std::vector<std::string> caveats;
  std::vector<RuleEval> audit; // every rule evaluation, in rule order
};

struct ClassifyConfig {
  int e_max = 2;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  std::int64_t degree_cap = 20000;
};

// Evaluates every applicable rule and reports the strongest certified
// status; all evaluations are kept in the audit trail. Rules whose theorem
// needs a verified smooth plane-curve cone are skipped elsewhere with a
// note. Throws on data the theory does not cover at all (wrong ring shape,
// non-primary generators are reported inside the verdict instead).
Verdict classify(const ForcingData& data, const ClassifyConfig& config = {});

nlohmann::json verdict_to_json(const GradedRing& ring, const Verdict& v,
                               bool include_audit);

} // namespace tce

#endif
