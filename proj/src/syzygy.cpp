#include "tce/syzygy.hpp"

#include <algorithm>
#include <random>

#include "tce/membership.hpp"

namespace tce {

namespace {

RelationVector vector_from_coords(const GradedRing& ring, const std::vector<Poly>& gens,
                                  int k, const std::vector<std::size_t>& offsets,
                                  const std::vector<std::int64_t>& coords) {
  RelationVector rel;
  rel.total_degree = k;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int src = k - gens[i].degree();
    if (src < 0) {
      rel.components.push_back(ring.zero());
      continue;
    }
    const auto& basis = ring.basis(src);
    std::vector<std::int64_t> c(basis.monomials.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = coords[offsets[i] + j];
    rel.components.push_back(ring.from_coordinates(c, src));
  }
  return rel;
}

bool relation_holds(const GradedRing& ring, const std::vector<Poly>& gens,
                    const RelationVector& rel) {
  if (rel.components.size() != gens.size()) return false;
  Poly acc = ring.zero();
  for (std::size_t i = 0; i < gens.size(); ++i)
    acc = acc + rel.components[i] * gens[i];
  return ring.reduce(acc).is_zero();
}

} // namespace

std::vector<RelationVector> relation_space(const GradedRing& ring,
                                           const std::vector<Poly>& gens, int k) {
  std::vector<std::size_t> offsets;
  FpMatrix m = ring.stacked_mult_matrix(gens, k, &offsets);
  std::vector<RelationVector> out;
  for (const auto& v : m.kernel_basis()) {
    RelationVector rel = vector_from_coords(ring, gens, k, offsets, v);
    if (!relation_holds(ring, gens, rel))
      throw std::logic_error("relation_space: kernel vector fails re-multiplication");
    out.push_back(std::move(rel));
  }
  return out;
}

std::int64_t relation_space_dim(const GradedRing& ring, const std::vector<Poly>& gens,
                                int k) {
  FpMatrix m = ring.stacked_mult_matrix(gens, k);
  return static_cast<std::int64_t>(m.cols()) - static_cast<std::int64_t>(m.rank());
}

std::map<int, int> minimal_generator_degrees(const GradedRing& ring,
                                             const std::vector<Poly>& gens, int k_max) {
  int min_deg = gens.front().degree();
  for (const Poly& g : gens) min_deg = std::min(min_deg, g.degree());
  if (k_max < min_deg) throw std::invalid_argument("minimal_generator_degrees: k_max too small");

  std::map<int, int> counts;
  std::vector<RelationVector> prev; // basis of Rel_{k-1}
  for (int k = min_deg; k <= k_max; ++k) {
    std::vector<std::size_t> offsets;
    FpMatrix mk = ring.stacked_mult_matrix(gens, k, &offsets);
    std::int64_t dim_k = static_cast<std::int64_t>(mk.cols()) - static_cast<std::int64_t>(mk.rank());

    // span of R_1 * Rel_{k-1} inside the degree-k coordinate space
    std::int64_t old_dim = 0;
    if (!prev.empty()) {
      std::size_t width = mk.cols();
      FpMatrix rows(ring.field(), prev.size() * ring.nvars(), width);
      std::size_t r = 0;
      for (const RelationVector& rel : prev) {
        for (int v = 0; v < ring.nvars(); ++v) {
          Poly xv = ring.var(v);
          for (std::size_t i = 0; i < gens.size(); ++i) {
            int src = k - gens[i].degree();
            if (src < 0 || rel.components[i].is_zero()) continue;
            Poly comp = ring.reduce(rel.components[i] * xv);
            if (comp.is_zero()) continue;
            const auto& basis = ring.basis(src);
            for (const auto& [mono, c] : comp.terms()) {
              auto it = basis.index.find(mono);
              rows.at(r, offsets[i] + it->second) = c;
            }
          }
          ++r;
        }
      }
      old_dim = static_cast<std::int64_t>(rows.rank());
    }
    int fresh = static_cast<int>(dim_k - old_dim);
    if (fresh > 0) counts[k] = fresh;
    prev = relation_space(ring, gens, k);
  }
  return counts;
}

SplittingType splitting_type_p1(const GradedRing& ring, const std::vector<Poly>& gens,
                                int m) {
  if (ring.nvars() != 2 || ring.has_relation())
    throw std::invalid_argument("splitting_type_p1: base ring must be F_p[x,y]");
  if (!is_primary(ring, gens))
    throw std::invalid_argument("splitting_type_p1: generators are not primary");

  int n = static_cast<int>(gens.size());
  int sum_d = 0;
  for (const Poly& g : gens) sum_d += g.degree();

  // over F_p[x,y] the relation module of primary elements is free of rank n-1
  std::map<int, int> mins = minimal_generator_degrees(ring, gens, sum_d);
  SplittingType st;
  st.twist = m;
  for (const auto& [k, count] : mins)
    for (int i = 0; i < count; ++i) st.degrees.push_back(k);
  if (static_cast<int>(st.degrees.size()) != n - 1)
    throw std::logic_error("splitting_type_p1: relation module rank is not n-1");
  // det identity: sum (m - k_j) = (n-1)m - sum d_i
  int sum_k = 0;
  for (int k : st.degrees) sum_k += k;
  if (sum_k != sum_d)
    throw std::logic_error("splitting_type_p1: determinant identity violated");
  return st;
}

bool primary_relation_valid(const GradedRing& ring, const std::vector<Poly>& gens,
                            const RelationVector& rel) {
  if (!relation_holds(ring, gens, rel)) return false;
  std::vector<Poly> nonzero;
  for (const Poly& c : rel.components)
    if (!c.is_zero()) nonzero.push_back(c);
  if (nonzero.empty()) return false;
  return is_primary(ring, nonzero);
}

PrimaryRelationSearch find_primary_relation(const GradedRing& ring,
                                            const std::vector<Poly>& gens, int k,
                                            std::size_t budget, std::uint64_t seed) {
  if (gens.size() != 3)
    throw std::invalid_argument("find_primary_relation: expects three generators");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!is_primary(ring, {gens[i], gens[j]}))
        throw std::invalid_argument("find_primary_relation: generators are not pairwise primary");

  PrimaryRelationSearch result{RelationSearchOutcome::SearchExhausted, std::nullopt, 0, 0};
  std::vector<RelationVector> basis = relation_space(ring, gens, k);
  result.space_dim = static_cast<std::int64_t>(basis.size());
  if (basis.empty()) {
    result.outcome = RelationSearchOutcome::NoRelationSpace;
    return result;
  }

  auto try_candidate = [&](const RelationVector& rel) -> bool {
    ++result.candidates_tested;
    std::vector<Poly> nonzero;
    for (const Poly& c : rel.components)
      if (!c.is_zero()) nonzero.push_back(c);
    if (nonzero.empty()) return false;
    if (!is_primary(ring, nonzero)) return false;
    PrimaryRelationCertificate cert;
    cert.relation = rel;
    cert.seed = seed;
    cert.candidates_tested = result.candidates_tested;
    result.certificate = std::move(cert);
    result.outcome = RelationSearchOutcome::Found;
    return true;
  };

  for (const RelationVector& rel : basis)
    if (try_candidate(rel)) return result;

  // seeded pseudo-random F_p combinations of the basis; raw mt19937_64
  // output reduced mod p keeps runs reproducible across platforms
  std::mt19937_64 rng(seed);
  std::int64_t p = ring.field().p();
  for (std::size_t trial = 0; trial < budget; ++trial) {
    RelationVector cand;
    cand.total_degree = k;
    cand.components.assign(gens.size(), ring.zero());
    bool all_zero = true;
    for (const RelationVector& rel : basis) {
      std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
      if (c == 0) continue;
      all_zero = false;
      for (std::size_t i = 0; i < gens.size(); ++i)
        cand.components[i] = cand.components[i] + rel.components[i].scaled(c);
    }
    if (all_zero) continue;
    if (try_candidate(cand)) return result;
  }
  return result;
}

} // namespace tce
