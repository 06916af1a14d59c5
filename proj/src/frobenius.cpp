#include "tce/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace tce {

namespace {

bool is_power_of(std::int64_t q, std::int64_t p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

void check_cap(const GradedRing& ring, int degree, std::int64_t cap) {
  if (ring.graded_piece_dim(degree) > cap) {
    std::ostringstream os;
    os << "graded piece R_" << degree << " has dimension " << ring.graded_piece_dim(degree)
       << " > cap " << cap;
    throw ResourceCapError(os.str());
  }
}

} // namespace

Poly default_test_element(const GradedRing& ring) {
  if (!ring.has_relation()) return ring.one();
  const Poly& F = ring.relation();
  for (int i = 0; i < ring.nvars(); ++i) {
    Poly d = ring.reduce(F.derivative(i));
    if (!d.is_zero()) return d;
  }
  throw std::domain_error("no nonzero partial derivative available as test element");
}

std::optional<CofactorCertificate> bracket_membership(const ForcingData& data,
                                                      std::int64_t q,
                                                      const Poly& multiplier,
                                                      std::int64_t degree_cap,
                                                      const std::atomic<bool>* cancel) {
  auto check_cancel = [cancel] {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw OperationCancelled();
  };
  check_cancel();
  const GradedRing& ring = *data.ring;
  std::int64_t p = ring.field().p();
  if (!is_power_of(q, p))
    throw std::invalid_argument("bracket_membership: q must be a power of p");
  Poly mult = ring.reduce(multiplier);
  if (mult.is_zero()) throw std::invalid_argument("bracket_membership: zero multiplier");
  if (!mult.is_homogeneous())
    throw std::invalid_argument("bracket_membership: multiplier must be homogeneous");

  int target_degree = mult.degree() + static_cast<int>(q) * data.d0();
  check_cap(ring, target_degree, degree_cap);

  Poly f0q = ring.reduce(mult * ring.pow_reduced(data.candidate, q));
  std::vector<Poly> bracket;
  bracket.reserve(data.generators.size());
  for (const Poly& g : data.generators) {
    check_cancel();
    bracket.push_back(ring.pow_reduced(g, q));
  }
  check_cancel();
  return in_ideal(ring, f0q, bracket);
}

FrobeniusClosureResult frobenius_closure_test(const ForcingData& data,
                                              const FrobeniusConfig& config) {
  FrobeniusClosureResult result;
  std::int64_t q = 1;
  std::int64_t p = data.ring->field().p();
  for (int e = 0; e <= config.e_max; ++e) {
    auto cert = bracket_membership(data, q, data.ring->one(), config.degree_cap, config.cancel);
    if (cert) {
      result.member = true;
      result.witness_q = q;
      result.certificate = std::move(cert);
      return result;
    }
    q *= p;
  }
  return result;
}

TightClosureWitness tight_closure_witness(const ForcingData& data,
                                          const FrobeniusConfig& config) {
  const GradedRing& ring = *data.ring;
  TightClosureWitness w;
  w.test_element = config.test_element ? ring.reduce(*config.test_element)
                                       : default_test_element(ring);
  if (w.test_element.is_zero())
    throw std::invalid_argument("tight_closure_witness: zero test element");

  std::int64_t q = ring.field().p();
  w.all_hold = true;
  for (int e = 1; e <= config.e_max; ++e) {
    bool ok = bracket_membership(data, q, w.test_element, config.degree_cap, config.cancel)
                  .has_value();
    w.per_exponent.push_back(ok);
    if (!ok) w.all_hold = false;
    q *= ring.field().p();
  }
  w.summary = w.all_hold ? "supports membership"
                         : "refutes membership (under test-element assumption)";
  return w;
}

std::int64_t hasse_invariant(const PrimeField& field, const Poly& cubic) {
  if (cubic.nvars() != 3 || cubic.degree() != 3 || !cubic.is_homogeneous())
    throw std::invalid_argument("hasse_invariant: expects a plane cubic");
  std::int64_t p = field.p();
  // plain power in the ambient ring, then one coefficient
  Poly power = Poly::constant(field, 3, 1);
  for (std::int64_t i = 0; i < p - 1; ++i) power = power * cubic;
  Monomial target{static_cast<int>(p - 1), static_cast<int>(p - 1), static_cast<int>(p - 1)};
  return power.coeff(target);
}

bool hasse_bracket_vanishes(const PrimeField& field, const Poly& cubic) {
  if (cubic.nvars() != 3 || cubic.degree() != 3 || !cubic.is_homogeneous())
    throw std::invalid_argument("hasse_bracket_vanishes: expects a plane cubic");
  std::int64_t p = field.p();
  GradedRing ambient(field, {"x", "y", "z"});
  Poly power = Poly::constant(field, 3, 1);
  for (std::int64_t i = 0; i < p - 1; ++i) power = power * cubic;
  std::vector<Poly> gens;
  for (int i = 0; i < 3; ++i) {
    Monomial m(3, 0);
    m[i] = static_cast<int>(p);
    gens.push_back(Poly::monomial(field, 3, m));
  }
  return in_ideal(ambient, power, gens).has_value();
}

FrobeniusAction frobenius_action_h1(const GradedRing& ring) {
  if (ring.nvars() != 3 || !ring.has_relation())
    throw std::invalid_argument("frobenius_action_h1: needs a plane-curve ring");
  const Poly& F = ring.relation();
  int d = F.degree();
  std::int64_t p = ring.field().p();

  FrobeniusAction action;
  action.genus = static_cast<int>((d - 1) * (d - 2) / 2);
  for (const Monomial& m : monomials_of_degree(3, d)) {
    if (m[0] >= 1 && m[1] >= 1 && m[2] >= 1) action.basis.push_back(m);
  }
  std::size_t n = action.basis.size();
  if (static_cast<int>(n) != action.genus)
    throw std::logic_error("frobenius_action_h1: basis size differs from genus");

  std::map<Monomial, std::size_t, GrlexDesc> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(action.basis[i], i);

  Poly power = Poly::constant(ring.field(), 3, 1);
  for (std::int64_t i = 0; i < p - 1; ++i) power = power * F;

  action.matrix = FpMatrix(ring.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Monomial& b = action.basis[j];
    for (const auto& [mono, coeff] : power.terms()) {
      Monomial target{static_cast<int>(p) * b[0] - mono[0],
                      static_cast<int>(p) * b[1] - mono[1],
                      static_cast<int>(p) * b[2] - mono[2]};
      if (target[0] < 1 || target[1] < 1 || target[2] < 1) continue;
      auto it = index.find(target);
      if (it == index.end()) continue;
      action.matrix.at(it->second, j) =
          ring.field().add(action.matrix.at(it->second, j), coeff);
    }
  }

  // rank chain of the semilinear composites; over F_p these are plain powers
  FpMatrix composite = FpMatrix::identity(ring.field(), n);
  std::size_t prev_rank = n;
  action.nilpotency_index = 0;
  for (int e = 1; e <= std::max(action.genus, 1); ++e) {
    composite = action.matrix * composite;
    std::size_t r = composite.rank();
    if (r > prev_rank) throw std::logic_error("frobenius_action_h1: rank chain increased");
    action.rank_chain.push_back(r);
    prev_rank = r;
  }
  action.p_rank = static_cast<int>(prev_rank);
  // least t with rank(A^t) equal to the stable rank
  FpMatrix step = FpMatrix::identity(ring.field(), n);
  int t = 0;
  while (static_cast<int>(step.rank()) != action.p_rank) {
    step = action.matrix * step;
    ++t;
  }
  action.nilpotency_index = t;
  return action;
}

bool cover_datum_valid(const GradedRing& ring, const CoverDatum& datum) {
  const Poly& g1 = datum.f1_level;
  const Poly& g2 = datum.f2_level;
  // h^q - h (g1 g2)^{q-1} = u2 g1^q - u1 g2^q, exactly in R
  Poly lhs = ring.pow_reduced(datum.h_level, datum.q) -
             ring.reduce(datum.h_level *
                         ring.pow_reduced(ring.reduce(g1 * g2), datum.q - 1));
  Poly rhs = ring.reduce(datum.u2 * ring.pow_reduced(g1, datum.q)) -
             ring.reduce(datum.u1 * ring.pow_reduced(g2, datum.q));
  return ring.reduce(lhs - rhs).is_zero();
}

ArtinSchreierSplit artin_schreier_split(const GradedRing& ring, const Poly& f1,
                                        const Poly& f2, const Poly& h, int e_max) {
  Poly g1 = ring.reduce(f1), g2 = ring.reduce(f2), hh = ring.reduce(h);
  if (g1.is_zero() || g2.is_zero())
    throw std::invalid_argument("artin_schreier_split: zero parameter");
  if (hh.degree() != g1.degree() + g2.degree())
    throw std::invalid_argument("artin_schreier_split: deg h must be d1 + d2");
  if (!is_primary(ring, {g1, g2}))
    throw std::invalid_argument("artin_schreier_split: (f1, f2) is not primary");
  std::int64_t p = ring.field().p();

  auto datum_from_cofactors = [&](const Poly& a, const Poly& b, const Poly& lvl_f1,
                                  const Poly& lvl_f2, const Poly& lvl_h,
                                  std::int64_t q) -> CoverDatum {
    // lvl_h = a lvl_f1 + b lvl_f2 gives, by the Frobenius on the cofactors,
    //   u2 = a^q - a lvl_f2^{q-1},  u1 = b lvl_f1^{q-1} - b^q.
    CoverDatum datum;
    datum.q = q;
    datum.h_level = lvl_h;
    datum.f1_level = lvl_f1;
    datum.f2_level = lvl_f2;
    datum.u2 = ring.reduce(ring.pow_reduced(a, q) -
                           ring.reduce(a * ring.pow_reduced(lvl_f2, q - 1)));
    datum.u1 = ring.reduce(ring.reduce(b * ring.pow_reduced(lvl_f1, q - 1)) -
                           ring.pow_reduced(b, q));
    if (!cover_datum_valid(ring, datum))
      throw std::logic_error("artin_schreier_split: coboundary datum failed the identity");
    return datum;
  };

  // route 1: the class is already a coboundary
  if (auto cert = in_ideal(ring, hh, {g1, g2})) {
    ArtinSchreierSplit out;
    out.route = SplitRoute::Coboundary;
    out.datum = datum_from_cofactors(cert->cofactors[0], cert->cofactors[1], g1, g2, hh, p);
    out.note = "class is a coboundary: h lies in (f1, f2)";
    return out;
  }

  // route 2: h^p - h (f1 f2)^{p-1} in (f1^p, f2^p)
  Poly w = ring.pow_reduced(hh, p) -
           ring.reduce(hh * ring.pow_reduced(ring.reduce(g1 * g2), p - 1));
  Poly f1p = ring.pow_reduced(g1, p), f2p = ring.pow_reduced(g2, p);
  if (auto cert = in_ideal(ring, w, {f1p, f2p})) {
    CoverDatum datum;
    datum.q = p;
    datum.h_level = hh;
    datum.f1_level = g1;
    datum.f2_level = g2;
    datum.u2 = cert->cofactors[0];
    datum.u1 = ring.reduce(ring.zero() - cert->cofactors[1]);
    if (!cover_datum_valid(ring, datum))
      throw std::logic_error("artin_schreier_split: solved datum failed the identity");
    ArtinSchreierSplit out;
    out.route = SplitRoute::ArtinSchreier;
    out.datum = std::move(datum);
    out.note = "Artin-Schreier layer glued from the membership solve";
    return out;
  }

  // route 3: iterated Frobenius may kill the class (nilpotent part). The
  // class lives in H^1(O_Y), where the action is zero on V_n after the
  // nilpotency index; iterating past it cannot help.
  if (ring.nvars() == 3 && ring.has_relation() && is_smooth_curve(ring)) {
    FrobeniusAction action = frobenius_action_h1(ring);
    e_max = std::min(e_max, action.nilpotency_index);
  }
  Poly hq = hh, f1q = g1, f2q = g2;
  std::int64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    hq = ring.pow_reduced(hq, p);
    f1q = ring.pow_reduced(f1q, p);
    f2q = ring.pow_reduced(f2q, p);
    q *= p;
    if (auto cert = in_ideal(ring, hq, {f1q, f2q})) {
      ArtinSchreierSplit out;
      out.route = SplitRoute::NilpotentFrobenius;
      out.datum = datum_from_cofactors(cert->cofactors[0], cert->cofactors[1], f1q, f2q, hq,
                                       p);
      out.note = "nilpotent route, no Artin-Schreier layer needed (class vanishes after " +
                 std::to_string(e) + " Frobenius step" + (e > 1 ? "s" : "") + ")";
      return out;
    }
  }

  ArtinSchreierSplit out;
  out.route = SplitRoute::NotACoboundary;
  out.note =
      "not a coboundary: the class needs a further Frobenius or a stable-basis change; "
      "over the prime field a Frobenius-fixed basis of the stable part may require a "
      "field extension";
  return out;
}

} // namespace tce
