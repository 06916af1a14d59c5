#include "tce/membership.hpp"

#include <algorithm>

namespace tce {

std::optional<CofactorCertificate> in_ideal(const GradedRing& ring, const Poly& f0,
                                            const std::vector<Poly>& gens) {
  Poly target = ring.reduce(f0);
  if (target.is_zero()) {
    CofactorCertificate cert;
    for (const Poly& g : gens) cert.cofactors.push_back(ring.zero());
    return cert;
  }
  int n = target.degree();
  std::vector<std::size_t> offsets;
  FpMatrix m = ring.stacked_mult_matrix(gens, n, &offsets);
  auto sol = m.solve(ring.coordinates(target, n));
  if (!sol) return std::nullopt;

  CofactorCertificate cert;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int src = n - gens[i].degree();
    if (src < 0 || gens[i].is_zero()) {
      cert.cofactors.push_back(ring.zero());
      continue;
    }
    const auto& basis = ring.basis(src);
    std::vector<std::int64_t> coords(basis.monomials.size());
    for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = (*sol)[offsets[i] + j];
    cert.cofactors.push_back(ring.from_coordinates(coords, src));
  }
  if (!certificate_valid(ring, f0, gens, cert))
    throw std::logic_error("in_ideal: certificate failed re-multiplication");
  return cert;
}

std::optional<CofactorCertificate> in_ideal(const ForcingData& data) {
  return in_ideal(*data.ring, data.candidate, data.generators);
}

bool certificate_valid(const GradedRing& ring, const Poly& f0,
                       const std::vector<Poly>& gens, const CofactorCertificate& cert) {
  if (cert.cofactors.size() != gens.size()) return false;
  Poly acc = ring.reduce(f0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    acc = acc - cert.cofactors[i] * gens[i];
  return ring.reduce(acc).is_zero();
}

PrimaryResult is_primary_detail(const GradedRing& ring, const std::vector<Poly>& gens,
                                int n_max) {
  if (gens.empty()) throw std::invalid_argument("is_primary: no generators");
  int max_deg = 0;
  for (const Poly& g : gens) {
    Poly gr = ring.reduce(g);
    if (gr.is_zero()) throw std::invalid_argument("is_primary: zero generator");
    if (!gr.is_homogeneous()) throw std::invalid_argument("is_primary: non-homogeneous generator");
    max_deg = std::max(max_deg, gr.degree());
  }
  if (n_max < max_deg)
    throw std::invalid_argument("is_primary: inconclusive, n_max below the maximum generator degree");
  for (int n = 0; n <= n_max; ++n) {
    if (colength_piece(ring, gens, n) == 0) return {true, n};
  }
  return {false, n_max};
}

bool is_primary(const GradedRing& ring, const std::vector<Poly>& gens, int n_max) {
  return is_primary_detail(ring, gens, n_max).primary;
}

int default_primary_degree_bound(const GradedRing& ring, const std::vector<Poly>& gens) {
  int s = 0;
  for (const Poly& g : gens) s += std::max(g.degree(), 0);
  if (ring.has_relation()) s += ring.relation_degree();
  return s;
}

bool is_primary(const GradedRing& ring, const std::vector<Poly>& gens) {
  return is_primary(ring, gens, default_primary_degree_bound(ring, gens));
}

std::int64_t colength_piece(const GradedRing& ring, const std::vector<Poly>& gens, int n) {
  std::int64_t dim = ring.graded_piece_dim(n);
  if (dim <= 0) return 0;
  FpMatrix m = ring.stacked_mult_matrix(gens, n);
  return dim - static_cast<std::int64_t>(m.rank());
}

bool is_smooth_curve(const GradedRing& ring) {
  if (ring.nvars() != 3 || !ring.has_relation())
    throw std::invalid_argument("is_smooth_curve: needs a plane-curve ring (3 variables, one relation)");
  GradedRing ambient(ring.field(), ring.vars());
  const Poly& F = ring.relation();
  std::vector<Poly> gens{F};
  for (int i = 0; i < 3; ++i) {
    Poly d = F.derivative(i);
    if (!d.is_zero()) gens.push_back(d);
  }
  return is_primary(ambient, gens, 4 * F.degree());
}

} // namespace tce
