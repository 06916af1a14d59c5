#include "tce/cohomology.hpp"

#include <algorithm>

#include "tce/geometry.hpp"
#include "tce/membership.hpp"
#include "tce/syzygy.hpp"

namespace tce {

namespace {

void require_plane_curve(const GradedRing& ring) {
  if (ring.nvars() != 3 || !ring.has_relation())
    throw std::invalid_argument("cohomology: needs a plane-curve ring (3 variables, one relation)");
}

std::int64_t clamp_binom(std::int64_t n, std::int64_t k) { return GradedRing::binom(n, k); }

} // namespace

std::vector<Monomial> h2_basis(int t) {
  std::vector<Monomial> out;
  int s = -t;
  if (s < 3) return out;
  for (const Monomial& m : monomials_of_degree(3, s))
    if (m[0] >= 1 && m[1] >= 1 && m[2] >= 1) out.push_back(m);
  return out;
}

FpMatrix h2_mult(const PrimeField& field, const Poly& f, int t_src) {
  int t_dst = t_src + (f.is_zero() ? 0 : f.degree());
  std::vector<Monomial> src = h2_basis(t_src);
  std::vector<Monomial> dst = h2_basis(t_dst);
  std::map<Monomial, std::size_t, GrlexDesc> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
  FpMatrix m(field, dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Monomial& b = src[j];
    for (const auto& [mono, coeff] : f.terms()) {
      Monomial target{b[0] - mono[0], b[1] - mono[1], b[2] - mono[2]};
      if (target[0] < 1 || target[1] < 1 || target[2] < 1) continue;
      auto it = index.find(target);
      if (it == index.end()) continue;
      m.at(it->second, j) = field.add(m.at(it->second, j), coeff);
    }
  }
  return m;
}

H1Space h1_space(const GradedRing& ring, int n) {
  require_plane_curve(ring);
  int d = ring.relation_degree();
  H1Space space;
  space.twist = n;
  space.ambient = h2_basis(n - d);
  if (n >= -2) {
    // F lands in H2(n) = 0, the kernel is everything
    space.kernel = FpMatrix::identity(ring.field(), space.ambient.size());
    return space;
  }
  FpMatrix mf = h2_mult(ring.field(), ring.relation(), n - d);
  auto basis = mf.kernel_basis();
  space.kernel = FpMatrix(ring.field(), space.ambient.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < space.ambient.size(); ++i)
      space.kernel.at(i, j) = basis[j][i];
  return space;
}

std::pair<std::int64_t, std::int64_t> h_line(const GradedRing& ring, int n) {
  require_plane_curve(ring);
  int d = ring.relation_degree();
  std::int64_t h0 = std::max<std::int64_t>(ring.graded_piece_dim(n), 0);
  std::int64_t h1 = clamp_binom(d - n - 1, 2) - clamp_binom(-n - 1, 2);
  return {h0, h1};
}

FpMatrix mult_map_h1(const GradedRing& ring, const Poly& f, int source_twist) {
  require_plane_curve(ring);
  Poly lift = ring.reduce(f);
  if (!lift.is_homogeneous())
    throw std::invalid_argument("mult_map_h1: multiplier must be homogeneous");
  H1Space src = h1_space(ring, source_twist);
  int target_twist = source_twist + (lift.is_zero() ? 0 : lift.degree());
  H1Space dst = h1_space(ring, target_twist);
  if (lift.is_zero()) return FpMatrix(ring.field(), dst.dim(), src.dim());

  int d = ring.relation_degree();
  FpMatrix ambient_map = h2_mult(ring.field(), lift, source_twist - d);
  FpMatrix image = ambient_map * src.kernel; // columns live in ker(.F) at the target

  // express the image columns in the kernel basis of the target
  FpMatrix out(ring.field(), dst.dim(), src.dim());
  for (std::size_t j = 0; j < image.cols(); ++j) {
    std::vector<std::int64_t> col(image.rows());
    for (std::size_t i = 0; i < image.rows(); ++i) col[i] = image.at(i, j);
    auto sol = dst.kernel.solve(col);
    if (!sol)
      throw std::logic_error("mult_map_h1: image left the H^1 subspace");
    for (std::size_t i = 0; i < dst.dim(); ++i) out.at(i, j) = (*sol)[i];
  }
  return out;
}

bool cech_class_vanishes(const GradedRing& ring, const Poly& f1, const Poly& f2,
                         const Poly& h, int /*extra_twist*/) {
  if (!is_primary(ring, {ring.reduce(f1), ring.reduce(f2)}))
    throw std::invalid_argument("cech_class_vanishes: (f1, f2) is not primary");
  return in_ideal(ring, h, {f1, f2}).has_value();
}

SheafSectionReport h0_linear_forms(const GradedRing& ring, const std::vector<Poly>& gens,
                                   int m, int j) {
  require_plane_curve(ring);
  SheafSectionReport rep;
  rep.twist = j;

  std::int64_t sections = 0;
  for (const Poly& g : gens)
    sections += std::max<std::int64_t>(ring.graded_piece_dim(j - (m - g.degree())), 0);
  std::int64_t base = std::max<std::int64_t>(ring.graded_piece_dim(j - m), 0);
  rep.coker_part = sections - base;

  // the H^0 edge map g |-> (f_i g) must be injective (R is a domain and some
  // f_i is nonzero); assert numerically so the cokernel count is exact
  if (base > 0) {
    FpMatrix alpha(ring.field(), 0, base);
    for (const Poly& g : gens) {
      int dst = j - (m - g.degree());
      if (dst < 0) continue;
      alpha = FpMatrix::vcat(alpha, ring.mult_matrix(g, j - m));
    }
    if (static_cast<std::int64_t>(alpha.rank()) != base)
      throw std::logic_error("h0_linear_forms: section map is not injective");
  }

  // connecting part: ker( H^1(O(j-m)) -> (+)_i H^1(O(j-e_i)) )
  H1Space src = h1_space(ring, j - m);
  if (src.dim() == 0) {
    rep.kernel_part = 0;
  } else {
    FpMatrix gamma(ring.field(), 0, src.dim());
    for (const Poly& g : gens)
      gamma = FpMatrix::vcat(gamma, mult_map_h1(ring, g, j - m));
    rep.kernel_part = static_cast<std::int64_t>(src.dim()) -
                      static_cast<std::int64_t>(gamma.rank());
  }
  rep.h0 = rep.coker_part + rep.kernel_part;
  return rep;
}

ForcingSheafSections h0_forcing_sheaf(const ForcingData& data, int j) {
  const GradedRing& ring = *data.ring;
  ForcingSheafSections out;
  int m = data.twist;

  std::vector<Poly> with_f0 = data.generators;
  with_f0.push_back(data.candidate);
  out.forcing = h0_linear_forms(ring, with_f0, m, j);
  out.relation_only = h0_linear_forms(ring, data.generators, m, j);
  out.relation_module_h0 = relation_space_dim(ring, data.generators, m + j);
  return out;
}

NormalizingNumber normalizing_number_h(const ForcingData& data) {
  const GradedRing& ring = *data.ring;
  require_plane_curve(ring);
  int degH = ring.relation_degree();
  std::int64_t l = leadno(data.degrees(), data.d0());

  // work at the twist m = d0 so that e_0 = 0 and sections exist at j = 0
  ForcingData at_d0(data.ring, data.generators, data.candidate, data.d0());

  std::vector<Poly> with_f0 = at_d0.generators;
  with_f0.push_back(at_d0.candidate);

  NormalizingNumber nn;
  std::int64_t last_positive = -1;
  // for n = 2 sections die beyond j = l; beyond that the connecting kernel is
  // a piece of the finite-colength module omega/(f_i)omega, so a generous cap
  // is safe for any rank
  std::int64_t j_stop = std::max<std::int64_t>(l, 0) + at_d0.sum_degrees() + 3 * degH + 10;
  bool vanished = false;
  for (std::int64_t j = 0; j <= j_stop; ++j) {
    SheafSectionReport rep =
        h0_linear_forms(ring, with_f0, at_d0.twist, -static_cast<int>(j));
    if (rep.h0 > 0) {
      last_positive = j;
    } else {
      vanished = true; // twisting down only loses sections
      break;
    }
  }
  if (last_positive < 0)
    throw std::logic_error("normalizing_number_h: no sections at twist 0");
  if (!vanished)
    throw std::logic_error("normalizing_number_h: sections did not vanish within the cap");
  nn.nu_low = last_positive * degH;

  bool in_i = in_ideal(at_d0).has_value();
  if (data.n() == 2) {
    if (l <= 0) {
      nn.nu_high = 0;
    } else if (in_i) {
      nn.nu_high = l * degH; // split case: nu = max(0, l) degH exactly
    } else {
      nn.nu_high = l * degH - 1; // strict bound when f0 is not in the ideal
    }
  } else if (data.n() == 3) {
    // a balanced primary relation normalizes the relation-side dual and
    // caps nu at max(0, l/2) degH; without one no upper bound is claimed
    int sum_d = at_d0.sum_degrees();
    if (sum_d % 2 == 0) {
      try {
        PrimaryRelationSearch search =
            find_primary_relation(ring, at_d0.generators, sum_d / 2, 200, 0);
        if (search.outcome == RelationSearchOutcome::Found)
          nn.nu_high = std::max<std::int64_t>(0, l / 2) * degH;
      } catch (const std::invalid_argument&) {
        // generators not pairwise primary: leave the upper bound open
      }
    }
  }
  nn.exact = nn.nu_high && (nn.nu_low == *nn.nu_high);
  if (nn.exact) nn.e_exact = 2 * nn.nu_low - l * degH;
  return nn;
}

} // namespace tce
