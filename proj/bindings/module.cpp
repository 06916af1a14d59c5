#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "tce/casefile.hpp"
#include "tce/cohomology.hpp"
#include "tce/frobenius.hpp"
#include "tce/geometry.hpp"
#include "tce/membership.hpp"
#include "tce/syzygy.hpp"
#include "tce/verdict.hpp"

namespace py = pybind11;
using namespace tce;

namespace {

using RingPtr = std::shared_ptr<GradedRing>;

RingPtr make_ring(std::int64_t p, std::vector<std::string> vars,
                  std::optional<std::string> relation) {
  PrimeField f(p);
  if (relation) {
    Poly F = parse_poly(f, vars, *relation);
    return std::make_shared<GradedRing>(f, std::move(vars), std::move(F));
  }
  return std::make_shared<GradedRing>(f, std::move(vars));
}

std::vector<Poly> parse_all(const GradedRing& ring, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(ring.parse(t));
  return out;
}

std::vector<std::string> print_all(const GradedRing& ring, const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const Poly& p : polys) out.push_back(ring.print(p));
  return out;
}

ForcingData make_data(const RingPtr& ring, const std::vector<std::string>& gens,
                      const std::string& candidate, std::optional<int> twist) {
  return ForcingData(ring, parse_all(*ring, gens), ring->parse(candidate), twist);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact closure computations for homogeneous ideals over plane-curve cones";

  py::register_exception<ResourceCapError>(m, "ResourceCapError");
  py::register_exception<CaseFileError>(m, "CaseFileError");

  py::class_<GradedRing, RingPtr>(m, "Ring")
      .def(py::init(&make_ring), py::arg("p"), py::arg("variables"),
           py::arg("relation") = std::nullopt)
      .def_property_readonly("p", [](const GradedRing& r) { return r.field().p(); })
      .def_property_readonly("variables", &GradedRing::vars)
      .def_property_readonly("relation",
                             [](const GradedRing& r) -> std::optional<std::string> {
                               if (!r.has_relation()) return std::nullopt;
                               return r.print(r.relation());
                             })
      .def("graded_piece_dim", &GradedRing::graded_piece_dim, py::arg("n"))
      .def("reduce",
           [](const GradedRing& r, const std::string& f) { return r.print(r.reduce(r.parse(f))); },
           py::arg("f"))
      .def("__repr__", [](const GradedRing& r) {
        std::string s = "Ring(p=" + std::to_string(r.field().p());
        if (r.has_relation()) s += ", relation=" + r.print(r.relation());
        return s + ")";
      });

  m.def("in_ideal",
        [](const RingPtr& ring, const std::vector<std::string>& gens,
           const std::string& f0) -> std::optional<std::vector<std::string>> {
          auto cert = in_ideal(*ring, ring->parse(f0), parse_all(*ring, gens));
          if (!cert) return std::nullopt;
          return print_all(*ring, cert->cofactors);
        },
        py::arg("ring"), py::arg("generators"), py::arg("candidate"),
        "cofactors of candidate in (generators), or None");

  m.def("is_primary",
        [](const RingPtr& ring, const std::vector<std::string>& gens, int n_max) {
          auto polys = parse_all(*ring, gens);
          if (n_max < 0) return is_primary(*ring, polys);
          return is_primary(*ring, polys, n_max);
        },
        py::arg("ring"), py::arg("generators"), py::arg("n_max") = -1);

  m.def("is_smooth_curve",
        [](const RingPtr& ring) { return is_smooth_curve(*ring); }, py::arg("ring"));

  m.def("relation_space",
        [](const RingPtr& ring, const std::vector<std::string>& gens, int k) {
          std::vector<std::vector<std::string>> out;
          for (const RelationVector& rel : relation_space(*ring, parse_all(*ring, gens), k))
            out.push_back(print_all(*ring, rel.components));
          return out;
        },
        py::arg("ring"), py::arg("generators"), py::arg("k"));

  m.def("minimal_generator_degrees",
        [](const RingPtr& ring, const std::vector<std::string>& gens, int k_max) {
          return minimal_generator_degrees(*ring, parse_all(*ring, gens), k_max);
        },
        py::arg("ring"), py::arg("generators"), py::arg("k_max"));

  m.def("splitting_type_p1",
        [](const RingPtr& ring, const std::vector<std::string>& gens, int m_twist) {
          return splitting_type_p1(*ring, parse_all(*ring, gens), m_twist).degrees;
        },
        py::arg("ring"), py::arg("generators"), py::arg("m"));

  m.def("find_primary_relation",
        [](const RingPtr& ring, const std::vector<std::string>& gens, int k,
           std::size_t budget, std::uint64_t seed) {
          PrimaryRelationSearch s =
              find_primary_relation(*ring, parse_all(*ring, gens), k, budget, seed);
          py::dict out;
          out["outcome"] = s.outcome == RelationSearchOutcome::Found ? "found"
                           : s.outcome == RelationSearchOutcome::NoRelationSpace
                               ? "no_relation_space"
                               : "search_exhausted";
          out["space_dim"] = s.space_dim;
          out["candidates_tested"] = s.candidates_tested;
          if (s.certificate)
            out["relation"] = print_all(*ring, s.certificate->relation.components);
          return out;
        },
        py::arg("ring"), py::arg("generators"), py::arg("k"), py::arg("budget") = 1000,
        py::arg("seed") = 0);

  m.def("bracket_membership",
        [](const RingPtr& ring, const std::vector<std::string>& gens, const std::string& f0,
           std::int64_t q, const std::string& multiplier,
           std::int64_t degree_cap) -> std::optional<std::vector<std::string>> {
          ForcingData data = make_data(ring, gens, f0, std::nullopt);
          auto cert = bracket_membership(data, q, ring->parse(multiplier), degree_cap);
          if (!cert) return std::nullopt;
          return print_all(*ring, cert->cofactors);
        },
        py::arg("ring"), py::arg("generators"), py::arg("candidate"), py::arg("q"),
        py::arg("multiplier") = "1", py::arg("degree_cap") = 20000);

  m.def("frobenius_closure_test",
        [](const RingPtr& ring, const std::vector<std::string>& gens, const std::string& f0,
           int e_max) {
          FrobeniusConfig fc;
          fc.e_max = e_max;
          FrobeniusClosureResult r = frobenius_closure_test(make_data(ring, gens, f0, std::nullopt), fc);
          return py::make_tuple(r.member, r.member ? py::cast(r.witness_q) : py::none());
        },
        py::arg("ring"), py::arg("generators"), py::arg("candidate"), py::arg("e_max") = 2);

  m.def("tight_closure_witness",
        [](const RingPtr& ring, const std::vector<std::string>& gens, const std::string& f0,
           int e_max, std::optional<std::string> test_element) {
          FrobeniusConfig fc;
          fc.e_max = e_max;
          if (test_element) fc.test_element = ring->parse(*test_element);
          TightClosureWitness w = tight_closure_witness(make_data(ring, gens, f0, std::nullopt), fc);
          py::dict out;
          out["test_element"] = ring->print(w.test_element);
          out["per_exponent"] = w.per_exponent;
          out["summary"] = w.summary;
          return out;
        },
        py::arg("ring"), py::arg("generators"), py::arg("candidate"), py::arg("e_max") = 2,
        py::arg("test_element") = std::nullopt);

  m.def("hasse_invariant",
        [](std::int64_t p, const std::string& cubic) {
          PrimeField f(p);
          return hasse_invariant(f, parse_poly(f, {"x", "y", "z"}, cubic));
        },
        py::arg("p"), py::arg("cubic"));

  m.def("hasse_bracket_vanishes",
        [](std::int64_t p, const std::string& cubic) {
          PrimeField f(p);
          return hasse_bracket_vanishes(f, parse_poly(f, {"x", "y", "z"}, cubic));
        },
        py::arg("p"), py::arg("cubic"));

  m.def("frobenius_action_h1",
        [](const RingPtr& ring) {
          FrobeniusAction a = frobenius_action_h1(*ring);
          py::dict out;
          out["genus"] = a.genus;
          out["p_rank"] = a.p_rank;
          out["nilpotency_index"] = a.nilpotency_index;
          out["rank_chain"] = a.rank_chain;
          std::vector<std::vector<std::int64_t>> rows;
          for (std::size_t r = 0; r < a.matrix.rows(); ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < a.matrix.cols(); ++c) row.push_back(a.matrix.at(r, c));
            rows.push_back(std::move(row));
          }
          out["matrix"] = rows;
          return out;
        },
        py::arg("ring"));

  m.def("h_line",
        [](const RingPtr& ring, int n) {
          auto [h0, h1] = h_line(*ring, n);
          return py::make_tuple(h0, h1);
        },
        py::arg("ring"), py::arg("n"));

  m.def("leadno",
        [](const std::vector<int>& d_list, int d0) { return leadno(d_list, d0); },
        py::arg("d_list"), py::arg("d0"));

  m.def("chern_polynomial", &chern_polynomial, py::arg("e_list"), py::arg("m"));

  m.def("classify",
        [](const RingPtr& ring, const std::vector<std::string>& gens, const std::string& f0,
           std::optional<int> twist, int e_max, std::size_t budget, std::uint64_t seed,
           std::int64_t degree_cap, bool audit) {
          ClassifyConfig config;
          config.e_max = e_max;
          config.budget = budget;
          config.seed = seed;
          config.degree_cap = degree_cap;
          Verdict v = classify(make_data(ring, gens, f0, twist), config);
          return verdict_to_json(*ring, v, audit).dump();
        },
        py::arg("ring"), py::arg("generators"), py::arg("candidate"),
        py::arg("twist") = std::nullopt, py::arg("e_max") = 2, py::arg("budget") = 1000,
        py::arg("seed") = 0, py::arg("degree_cap") = 20000, py::arg("audit") = false,
        "closure classification as a JSON string");

  m.def("run_case_file",
        [](const std::string& command, const std::string& text, int e_max,
           std::uint64_t budget, std::uint64_t seed, std::int64_t degree_cap, bool audit) {
          CaseFile file = parse_case_file(text);
          RunOptions options;
          options.e_max = e_max;
          options.budget = budget;
          options.seed = seed;
          options.degree_cap = degree_cap;
          options.audit = audit;
          Report report;
          if (command == "verdict")
            report = run_verdict(file, options);
          else if (command == "invariants")
            report = run_invariants(file, options);
          else if (command == "frobenius")
            report = run_frobenius(file, options);
          else
            throw std::invalid_argument("unknown command: " + command);
          return py::make_tuple(report.exit_code, report.body.dump(2));
        },
        py::arg("command"), py::arg("text"), py::arg("e_max") = 2, py::arg("budget") = 1000,
        py::arg("seed") = 0, py::arg("degree_cap") = 20000, py::arg("audit") = false,
        "run a case file; returns (exit_code, report_json)");
}
