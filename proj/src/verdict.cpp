#include "tce/verdict.hpp"

#include <algorithm>

#include "tce/cohomology.hpp"
#include "tce/geometry.hpp"

namespace tce {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::InIdeal: return "InIdeal";
    case Status::InFrobeniusClosure: return "InFrobeniusClosure";
    case Status::InPlusClosure: return "InPlusClosure";
    case Status::InTightClosure: return "InTightClosure";
    case Status::NotInSolidClosure: return "NotInSolidClosure";
    case Status::RefutedUnderTestElement: return "RefutedUnderTestElement";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

int status_strength(Status s) { return static_cast<int>(s); }

namespace {

json poly_list_json(const GradedRing& ring, const std::vector<Poly>& polys) {
  json arr = json::array();
  for (const Poly& p : polys) arr.push_back(ring.print(p));
  return arr;
}

struct RingShape {
  bool supported = false;   // a two-dimensional standard graded type we handle
  bool curve_cone = false;  // r = 3 with one relation
  bool smooth = false;      // Jacobian-verified, curve cones only
  int degH = 0;
  std::string note;
};

RingShape ring_shape(const GradedRing& ring) {
  RingShape s;
  if (ring.nvars() == 3 && ring.has_relation()) {
    s.supported = true;
    s.curve_cone = true;
    s.degH = ring.relation_degree();
    s.smooth = is_smooth_curve(ring);
    if (!s.smooth)
      s.note = "Proj R failed the Jacobian criterion; normality is unattested";
    return s;
  }
  if (ring.nvars() == 2 && !ring.has_relation()) {
    s.supported = true;
    s.degH = 1;
    s.smooth = true; // P^1
    return s;
  }
  s.note = "ring is not a supported two-dimensional standard graded type";
  return s;
}

} // namespace

Verdict classify(const ForcingData& data, const ClassifyConfig& config) {
  const GradedRing& ring = *data.ring;
  Verdict verdict;
  RingShape shape = ring_shape(ring);
  if (!shape.supported) throw std::invalid_argument("classify: " + shape.note);

  const int n = data.n();
  const int d0 = data.d0();
  const std::vector<int> degrees = data.degrees();
  const int min_d = data.min_degree();
  const int sum_d = data.sum_degrees();
  const std::int64_t l = leadno(data);

  bool gens_primary = is_primary(ring, data.generators);
  if (!gens_primary)
    verdict.caveats.push_back("generators are not irrelevant-primary; only direct membership applies");
  if (shape.curve_cone && !shape.smooth)
    verdict.caveats.push_back(shape.note);
  // the Jacobian criterion certifies smoothness of Proj R, which is what the
  // geometric rules need; normality of the cone itself is not verified
  if (shape.curve_cone && shape.smooth)
    verdict.caveats.push_back(
        "normality attested through smoothness of Proj R only");

  std::vector<RuleEval> evals;
  auto add = [&](RuleEval e) { evals.push_back(std::move(e)); };

  // R1: direct membership with cofactors
  std::optional<CofactorCertificate> r1cert = in_ideal(data);
  {
    RuleEval e;
    e.rule = "R1";
    e.statement = "f0 lies in the ideal itself (explicit cofactors)";
    e.applicable = true;
    e.fired = r1cert.has_value();
    if (e.fired) {
      e.status = Status::InIdeal;
      e.evidence = json{{"cofactors", poly_list_json(ring, r1cert->cofactors)}};
    } else {
      e.note = "membership solve infeasible at degree " + std::to_string(d0);
    }
    add(std::move(e));
  }
  bool in_i = r1cert.has_value();

  // R2: degree vanishing, d0 <= min d_i forces membership in the ideal.
  // The unconditional exclusion is asserted only on a verified smooth
  // plane-curve cone.
  {
    RuleEval e;
    e.rule = "R2";
    e.statement = "d0 <= min d_i: solid closure membership would force ideal membership";
    if (!shape.curve_cone || !shape.smooth) {
      e.note = "requires a verified smooth plane-curve cone; deferred to witness-based rules";
    } else if (gens_primary && d0 <= min_d && !in_i) {
      e.applicable = true;
      e.fired = true;
      e.status = Status::NotInSolidClosure;
      e.evidence = json{{"d0", d0}, {"min_di", min_d}};
    } else {
      e.applicable = gens_primary;
      e.note = "condition d0 <= min d_i (and f0 outside the ideal) not met";
    }
    add(std::move(e));
  }

  bool pair_params = (n == 2) && gens_primary;

  // R4: l < 0, the class dies under Frobenius; certified by a witness q
  {
    RuleEval e;
    e.rule = "R4";
    e.statement = "two parameters with l < 0: Frobenius closure membership, brute-force witness";
    if (pair_params && l < 0 && !in_i) {
      e.applicable = true;
      FrobeniusConfig fc;
      fc.e_max = config.e_max;
      fc.degree_cap = config.degree_cap;
      FrobeniusClosureResult fr = frobenius_closure_test(data, fc);
      if (fr.member) {
        e.fired = true;
        e.status = Status::InFrobeniusClosure;
        e.evidence = json{{"witness_q", fr.witness_q},
                          {"certificate", poly_list_json(ring, fr.certificate->cofactors)}};
      } else {
        e.note = "theory predicts a witness for q large; none within e_max = " +
                 std::to_string(config.e_max);
      }
    } else {
      e.note = "needs two primary parameters and l < 0";
    }
    add(std::move(e));
  }

  // R3: two parameters, d0 >= d1 + d2
  {
    RuleEval e;
    e.rule = "R3";
    e.statement = "two parameters: every element of degree >= d1 + d2 lies in the tight closure";
    if (pair_params && d0 >= sum_d) {
      e.applicable = true;
      e.fired = true;
      e.status = Status::InTightClosure;
      e.evidence = json{{"d0", d0}, {"d1_plus_d2", sum_d}, {"l", l}};
    } else {
      e.note = "needs two primary parameters and d0 >= d1 + d2";
    }
    add(std::move(e));
  }

  // R5: two parameters, d0 < d1 + d2, outside the ideal: refuted for p = 0
  // and p >> 0, cross-checked by the test-element witness
  std::optional<TightClosureWitness> witness;
  auto run_witness = [&]() -> const TightClosureWitness& {
    if (!witness) {
      FrobeniusConfig fc;
      fc.e_max = config.e_max;
      fc.degree_cap = config.degree_cap;
      witness = tight_closure_witness(data, fc);
    }
    return *witness;
  };
  {
    RuleEval e;
    e.rule = "R5";
    e.statement = "two parameters with d0 < d1 + d2 and f0 outside the ideal: not in the tight closure for p = 0 and p >> 0";
    if (pair_params && d0 < sum_d && !in_i) {
      e.applicable = true;
      const TightClosureWitness& w = run_witness();
      if (!w.all_hold) {
        e.fired = true;
        e.status = Status::RefutedUnderTestElement;
        e.evidence = json{{"test_element", ring.print(w.test_element)},
                          {"witness", w.per_exponent}};
      } else {
        e.note = "witness test did not refute within e_max; no conclusion at this p";
      }
    } else {
      e.note = "needs two primary parameters, d0 < d1 + d2, f0 outside the ideal";
    }
    add(std::move(e));
  }

  // R6/R7: three pairwise-primary generators and a certified primary relation
  bool pairwise_primary = false;
  if (n == 3 && gens_primary) {
    pairwise_primary = true;
    for (int i = 0; i < 3 && pairwise_primary; ++i)
      for (int j = i + 1; j < 3 && pairwise_primary; ++j)
        if (!is_primary(ring, {data.generators[i], data.generators[j]}))
          pairwise_primary = false;
  }

  std::map<int, PrimaryRelationSearch> searches; // per total degree k
  auto search_at = [&](int k) -> const PrimaryRelationSearch& {
    auto it = searches.find(k);
    if (it == searches.end()) {
      it = searches
               .emplace(k, find_primary_relation(ring, data.generators, k, config.budget,
                                                 config.seed + static_cast<std::uint64_t>(k)))
               .first;
    }
    return it->second;
  };

  {
    RuleEval e;
    e.rule = "R6";
    e.statement = "three pairwise-primary generators with a primary relation of total degree k and d0 >= max(k, sum d - k): plus closure membership";
    if (n != 3) {
      e.note = "needs exactly three generators";
    } else if (!pairwise_primary) {
      e.note = "generators are not pairwise primary";
    } else {
      e.applicable = true;
      // the bound max(k, sum d - k) <= d0 restricts k to [sum d - d0, d0]
      bool found = false;
      json tried = json::array();
      for (int k = std::max(sum_d - d0, 1); k <= d0 && !found; ++k) {
        const PrimaryRelationSearch& s = search_at(k);
        tried.push_back(json{{"k", k},
                             {"space_dim", s.space_dim},
                             {"outcome", s.outcome == RelationSearchOutcome::Found
                                             ? "found"
                                             : (s.outcome == RelationSearchOutcome::NoRelationSpace
                                                    ? "no relation space"
                                                    : "search exhausted")}});
        if (s.outcome == RelationSearchOutcome::Found) {
          found = true;
          e.fired = true;
          e.status = Status::InPlusClosure;
          int k_found = s.certificate->relation.total_degree;
          e.evidence = json{{"relation", poly_list_json(ring, s.certificate->relation.components)},
                            {"total_degree", k_found},
                            {"m", std::max(k_found, sum_d - k_found)},
                            {"seed", s.certificate->seed},
                            {"candidates_tested", s.certificate->candidates_tested}};
        }
      }
      if (!e.fired) {
        e.note = "no certified primary relation with max(k, sum d - k) <= d0";
        e.evidence = json{{"searched", tried}};
      }
    }
    add(std::move(e));
  }

  {
    RuleEval e;
    e.rule = "R7";
    e.statement = "three pairwise-primary generators, sum d even, primary relation at m = sum d / 2 and d0 >= m: tight closure membership";
    if (n != 3) {
      e.note = "needs exactly three generators";
    } else if (!pairwise_primary) {
      e.note = "generators are not pairwise primary";
    } else if (sum_d % 2 != 0) {
      e.note = "sum of generator degrees is odd";
    } else if (d0 < sum_d / 2) {
      e.note = "d0 below sum d / 2";
    } else {
      e.applicable = true;
      const PrimaryRelationSearch& s = search_at(sum_d / 2);
      if (s.outcome == RelationSearchOutcome::Found) {
        e.fired = true;
        e.status = Status::InTightClosure;
        e.evidence = json{{"relation", poly_list_json(ring, s.certificate->relation.components)},
                          {"m", sum_d / 2},
                          {"seed", s.certificate->seed}};
      } else {
        e.note = s.outcome == RelationSearchOutcome::NoRelationSpace
                     ? "no relation space at m = sum d / 2"
                     : "relation search exhausted at m = sum d / 2";
      }
    }
    add(std::move(e));
  }

  // R8: fallback, attach the witness evidence without upgrading it
  {
    RuleEval e;
    e.rule = "R8";
    e.statement = "no criterion certified a status; witness evidence attached";
    e.applicable = true;
    bool anything_fired = std::any_of(evals.begin(), evals.end(),
                                      [](const RuleEval& r) { return r.fired; });
    if (!anything_fired) {
      e.fired = true;
      e.status = Status::Unknown;
      if (gens_primary) {
        try {
          const TightClosureWitness& w = run_witness();
          e.evidence = json{{"test_element", ring.print(w.test_element)},
                            {"witness", w.per_exponent},
                            {"summary", w.summary}};
        } catch (const ResourceCapError& err) {
          e.note = std::string("witness skipped: ") + err.what();
        }
      } else {
        e.note = "witness skipped: generators are not primary";
      }
    }
    add(std::move(e));
  }

  // the verdict is the strongest certified status; ties go to the earlier rule
  const RuleEval* best = nullptr;
  for (const RuleEval& e : evals) {
    if (!e.fired) continue;
    if (!best || status_strength(*e.status) > status_strength(*best->status)) best = &e;
  }
  if (!best) throw std::logic_error("classify: no rule fired, including the fallback");

  // audit-mode consistency: a membership certificate and the unconditional
  // exclusion must never coexist
  bool has_membership = false, has_exclusion = false;
  for (const RuleEval& e : evals) {
    if (!e.fired) continue;
    if (*e.status == Status::NotInSolidClosure) has_exclusion = true;
    if (status_strength(*e.status) >= status_strength(Status::InTightClosure))
      has_membership = true;
  }
  if (has_membership && has_exclusion)
    throw std::logic_error("classify: audit contradiction between membership and exclusion");

  verdict.status = *best->status;
  verdict.rule = best->rule;
  verdict.statement = best->statement;
  verdict.evidence = best->evidence;
  if (verdict.rule == "R5")
    verdict.caveats.push_back("valid for p = 0 and for p >> 0; no effective bound at this p");
  if (verdict.rule == "R5" || (verdict.rule == "R8" && !verdict.evidence.is_null()))
    verdict.caveats.push_back("test-element assumption: refutation is conditional on the recorded c");
  verdict.audit = std::move(evals);
  return verdict;
}

json verdict_to_json(const GradedRing& ring, const Verdict& v, bool include_audit) {
  json j;
  j["status"] = status_name(v.status);
  j["rule"] = v.rule;
  j["statement"] = v.statement;
  j["evidence"] = v.evidence.is_null() ? json::object() : v.evidence;
  j["caveats"] = v.caveats;
  if (include_audit) {
    json audit = json::array();
    for (const RuleEval& e : v.audit) {
      json je;
      je["rule"] = e.rule;
      je["statement"] = e.statement;
      je["applicable"] = e.applicable;
      je["fired"] = e.fired;
      if (e.status) je["status"] = status_name(*e.status);
      if (!e.evidence.is_null()) je["evidence"] = e.evidence;
      if (!e.note.empty()) je["note"] = e.note;
      audit.push_back(std::move(je));
    }
    j["audit"] = std::move(audit);
  }
  return j;
}

} // namespace tce
