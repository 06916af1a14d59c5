#include "tce/casefile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tce/cohomology.hpp"
#include "tce/frobenius.hpp"
#include "tce/geometry.hpp"
#include "tce/membership.hpp"
#include "tce/syzygy.hpp"

namespace tce {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw CaseFileError(path + ": unknown key \"" + it.key() + "\"");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw CaseFileError(path + ": missing key \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw CaseFileError(path + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw CaseFileError(path + ": expected a string");
  return v.get<std::string>();
}

CaseOptions parse_options(const json& v, const std::string& path) {
  if (!v.is_object()) throw CaseFileError(path + ": expected an object");
  reject_unknown_keys(v, {"e_max", "budget", "seed", "degree_cap"}, path);
  CaseOptions o;
  if (v.contains("e_max")) o.e_max = static_cast<int>(as_int(v["e_max"], path + ".e_max"));
  if (v.contains("budget"))
    o.budget = static_cast<std::uint64_t>(as_int(v["budget"], path + ".budget"));
  if (v.contains("seed"))
    o.seed = static_cast<std::uint64_t>(as_int(v["seed"], path + ".seed"));
  if (v.contains("degree_cap")) o.degree_cap = as_int(v["degree_cap"], path + ".degree_cap");
  return o;
}

} // namespace

CaseFile parse_case_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CaseFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw CaseFileError("top level: expected an object");
  reject_unknown_keys(root, {"characteristic", "variables", "relation", "cases"}, "top level");

  CaseFile file;
  file.characteristic = as_int(require(root, "characteristic", "top level"), "characteristic");
  if (!PrimeField::is_prime(file.characteristic))
    throw CaseFileError("characteristic must be prime");

  const json& vars = require(root, "variables", "top level");
  if (!vars.is_array() || vars.empty()) throw CaseFileError("variables: expected a nonempty array");
  for (std::size_t i = 0; i < vars.size(); ++i)
    file.variables.push_back(as_string(vars[i], "variables[" + std::to_string(i) + "]"));

  if (root.contains("relation"))
    file.relation = as_string(root["relation"], "relation");

  const json& cases = require(root, "cases", "top level");
  if (!cases.is_array()) throw CaseFileError("cases: expected an array");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const json& c = cases[i];
    std::string path = "cases[" + std::to_string(i) + "]";
    if (!c.is_object()) throw CaseFileError(path + ": expected an object");
    reject_unknown_keys(c, {"generators", "candidate", "twist", "options"}, path);
    CaseSpec spec;
    const json& gens = require(c, "generators", path);
    if (!gens.is_array() || gens.size() < 2)
      throw CaseFileError(path + ".generators: expected at least two entries");
    for (std::size_t g = 0; g < gens.size(); ++g)
      spec.generators.push_back(
          as_string(gens[g], path + ".generators[" + std::to_string(g) + "]"));
    spec.candidate = as_string(require(c, "candidate", path), path + ".candidate");
    if (c.contains("twist")) spec.twist = static_cast<int>(as_int(c["twist"], path + ".twist"));
    if (c.contains("options")) spec.options = parse_options(c["options"], path + ".options");
    file.cases.push_back(std::move(spec));
  }
  return file;
}

CaseFile load_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CaseFileError("cannot open case file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_case_file(buf.str());
}

std::shared_ptr<GradedRing> CaseFile::make_ring() const {
  PrimeField f(characteristic);
  if (relation) {
    Poly F = parse_poly(f, variables, *relation);
    return std::make_shared<GradedRing>(f, variables, F);
  }
  return std::make_shared<GradedRing>(f, variables);
}

json case_file_to_json(const CaseFile& file) {
  json j;
  j["characteristic"] = file.characteristic;
  j["variables"] = file.variables;
  if (file.relation) j["relation"] = *file.relation;
  json arr = json::array();
  for (const CaseSpec& c : file.cases) {
    json jc;
    jc["generators"] = c.generators;
    jc["candidate"] = c.candidate;
    if (c.twist) jc["twist"] = *c.twist;
    json opts = json::object();
    if (c.options.e_max) opts["e_max"] = *c.options.e_max;
    if (c.options.budget) opts["budget"] = *c.options.budget;
    if (c.options.seed) opts["seed"] = *c.options.seed;
    if (c.options.degree_cap) opts["degree_cap"] = *c.options.degree_cap;
    if (!opts.empty()) jc["options"] = std::move(opts);
    arr.push_back(std::move(jc));
  }
  j["cases"] = std::move(arr);
  return j;
}

ClassifyConfig resolve_config(const RunOptions& defaults, const CaseOptions& opts,
                              std::size_t case_index) {
  ClassifyConfig c;
  c.e_max = opts.e_max.value_or(defaults.e_max);
  c.budget = static_cast<std::size_t>(opts.budget.value_or(defaults.budget));
  // per-case seeds derive from the root seed so batches are reproducible
  c.seed = opts.seed.value_or(defaults.seed + static_cast<std::uint64_t>(case_index));
  c.degree_cap = opts.degree_cap.value_or(defaults.degree_cap);
  return c;
}

namespace {

json config_json(const ClassifyConfig& c) {
  return json{{"e_max", c.e_max},
              {"budget", c.budget},
              {"seed", c.seed},
              {"degree_cap", c.degree_cap}};
}

struct CaseRun {
  json envelope;
  int exit_code = 0;
};

// Shared per-case driver: parses the case data, runs `body`, and converts
// malformed input / resource caps into the per-case error protocol.
template <typename Body>
CaseRun run_case(const CaseFile& file, const std::shared_ptr<GradedRing>& ring,
                 std::size_t index, const RunOptions& options, Body&& body) {
  const CaseSpec& spec = file.cases[index];
  CaseRun out;
  out.envelope["index"] = index;
  out.envelope["generators"] = spec.generators;
  out.envelope["candidate"] = spec.candidate;
  ClassifyConfig config = resolve_config(options, spec.options, index);
  out.envelope["options"] = config_json(config);
  try {
    std::vector<Poly> gens;
    for (const std::string& g : spec.generators) gens.push_back(ring->parse(g));
    Poly candidate = ring->parse(spec.candidate);
    ForcingData data(ring, std::move(gens), std::move(candidate), spec.twist);
    out.envelope["twist"] = data.twist;
    body(data, config, out.envelope);
  } catch (const ResourceCapError& e) {
    out.envelope["error"] = std::string("resource cap: ") + e.what();
    out.exit_code = 3;
  } catch (const std::exception& e) {
    out.envelope["error"] = e.what();
    out.exit_code = 2;
  }
  return out;
}

template <typename Body>
Report run_over_cases(const CaseFile& file, const RunOptions& options,
                      const std::string& command, Body&& body) {
  Report report;
  report.body["command"] = command;
  report.body["characteristic"] = file.characteristic;
  report.body["variables"] = file.variables;
  report.body["relation"] = file.relation ? json(*file.relation) : json();
  report.body["root_seed"] = options.seed;

  std::shared_ptr<GradedRing> ring = file.make_ring();
  json cases = json::array();
  int errors = 0;
  for (std::size_t i = 0; i < file.cases.size(); ++i) {
    CaseRun run = run_case(file, ring, i, options, body);
    if (run.exit_code != 0) {
      ++errors;
      report.exit_code = std::max(report.exit_code, run.exit_code);
    }
    cases.push_back(std::move(run.envelope));
  }
  report.body["cases"] = std::move(cases);
  report.body["errors"] = errors;
  return report;
}

} // namespace

Report run_verdict(const CaseFile& file, const RunOptions& options) {
  std::map<std::string, int> counts;
  Report report = run_over_cases(
      file, options, "verdict",
      [&](const ForcingData& data, const ClassifyConfig& config, json& envelope) {
        Verdict v = classify(data, config);
        envelope["verdict"] = verdict_to_json(*data.ring, v, options.audit);
        counts[status_name(v.status)] += 1;
      });
  report.body["summary"] = counts.empty() ? json::object() : json(counts);
  return report;
}

Report run_invariants(const CaseFile& file, const RunOptions& options) {
  return run_over_cases(
      file, options, "invariants",
      [&](const ForcingData& data, const ClassifyConfig&, json& envelope) {
        const GradedRing& ring = *data.ring;
        int degH = default_degH(ring);
        bool in_i = in_ideal(data).has_value();
        IntersectionReport rep = intersection_report(data, degH, in_i);
        json j;
        j["m"] = rep.m;
        j["e_list"] = rep.e_list;
        j["e0"] = rep.e0;
        j["l"] = rep.l;
        j["degH"] = rep.degH;
        j["z_top"] = rep.z_top;
        j["chern"] = rep.chern;
        j["f0_in_ideal"] = in_i;
        json bounds;
        bounds["nu_lo"] = rep.bounds.nu_lo;
        bounds["nu_hi"] = rep.bounds.nu_hi ? json(*rep.bounds.nu_hi) : json();
        bounds["e_lo"] = rep.bounds.e_lo ? json(*rep.bounds.e_lo) : json();
        bounds["e_hi"] = rep.bounds.e_hi ? json(*rep.bounds.e_hi) : json();
        bounds["nu_exact"] = rep.bounds.nu_exact;
        bounds["e_exact"] = rep.bounds.e_exact;
        j["bounds"] = std::move(bounds);
        envelope["invariants"] = std::move(j);
      });
}

Report run_syzygy(const CaseFile& file, const RunOptions& options, int k_min, int k_max) {
  return run_over_cases(
      file, options, "syzygy",
      [&](const ForcingData& data, const ClassifyConfig&, json& envelope) {
        const GradedRing& ring = *data.ring;
        json dims = json::object();
        for (int k = k_min; k <= k_max; ++k)
          dims[std::to_string(k)] = relation_space_dim(ring, data.generators, k);
        json degrees = json::object();
        for (const auto& [k, count] : minimal_generator_degrees(ring, data.generators, k_max))
          degrees[std::to_string(k)] = count;
        envelope["relation_space_dims"] = std::move(dims);
        envelope["generator_degrees"] = std::move(degrees);
        if (ring.nvars() == 2 && !ring.has_relation() &&
            is_primary(ring, data.generators)) {
          SplittingType st = splitting_type_p1(ring, data.generators, data.twist);
          envelope["splitting_type"] = st.degrees;
        }
      });
}

Report run_frobenius(const CaseFile& file, const RunOptions& options) {
  return run_over_cases(
      file, options, "frobenius",
      [&](const ForcingData& data, const ClassifyConfig& config, json& envelope) {
        const GradedRing& ring = *data.ring;
        FrobeniusConfig fc;
        fc.e_max = config.e_max;
        fc.degree_cap = config.degree_cap;
        FrobeniusClosureResult fr = frobenius_closure_test(data, fc);
        json jf;
        jf["member"] = fr.member;
        if (fr.member) {
          jf["witness_q"] = fr.witness_q;
          json certs = json::array();
          for (const Poly& c : fr.certificate->cofactors) certs.push_back(ring.print(c));
          jf["certificate"] = std::move(certs);
        }
        envelope["frobenius_closure"] = std::move(jf);
        TightClosureWitness w = tight_closure_witness(data, fc);
        envelope["tight_closure_witness"] =
            json{{"test_element", ring.print(w.test_element)},
                 {"per_exponent", w.per_exponent},
                 {"summary", w.summary}};
      });
}

Report run_hasse(const std::string& cubic_text, const std::vector<std::int64_t>& primes) {
  Report report;
  report.body["command"] = "hasse";
  report.body["curve"] = cubic_text;
  json table = json::array();
  for (std::int64_t p : primes) {
    json row;
    row["p"] = p;
    try {
      PrimeField f(p);
      Poly cubic = parse_poly(f, {"x", "y", "z"}, cubic_text);
      std::int64_t h = hasse_invariant(f, cubic);
      bool bracket = hasse_bracket_vanishes(f, cubic);
      if ((h == 0) != bracket)
        throw std::logic_error("hasse invariant and bracket membership disagree");
      row["hasse"] = h;
      row["supersingular"] = (h == 0);
    } catch (const std::exception& e) {
      row["error"] = e.what();
      report.exit_code = std::max(report.exit_code, 2);
    }
    table.push_back(std::move(row));
  }
  report.body["table"] = std::move(table);
  return report;
}

} // namespace tce
