#ifndef TCE_MEMBERSHIP_HPP
#define TCE_MEMBERSHIP_HPP

#include <optional>
#include <vector>

#include "tce/forcing.hpp"
#include "tce/ring.hpp"

namespace tce {

// Explicit cofactors a_1..a_n with f_0 = sum a_i f_i in R (deg a_i = d_0 - d_i,
// zero cofactors allowed). Construction re-multiplies and checks exactly.
struct CofactorCertificate {
  std::vector<Poly> cofactors;
};

// Homogeneous ideal membership at the graded piece of deg f0, solved as one
// linear system in the standard-monomial bases. The returned cofactors come
// from the reduced-row-echelon solve with free variables set to zero.
std::optional<CofactorCertificate> in_ideal(const GradedRing& ring, const Poly& f0,
                                            const std::vector<Poly>& gens);
std::optional<CofactorCertificate> in_ideal(const ForcingData& data);

// Verifies reduce(f0 - sum a_i f_i) == 0.
bool certificate_valid(const GradedRing& ring, const Poly& f0,
                       const std::vector<Poly>& gens, const CofactorCertificate& cert);

struct PrimaryResult {
  bool primary = false;
  int witness_degree = -1; // first degree with colength 0, or the degree still alive
};

// Finite-colength test: (gens) is irrelevant-primary iff dim (R/(gens))_n = 0
// for some n <= n_max; once a graded piece vanishes all higher ones do, since
// R is standard graded. Throws "inconclusive" if n_max is below the maximum
// generator degree.
PrimaryResult is_primary_detail(const GradedRing& ring, const std::vector<Poly>& gens,
                                int n_max);
bool is_primary(const GradedRing& ring, const std::vector<Poly>& gens, int n_max);

// Degree bound that certifies primariness for the ideals this engine meets:
// sum of the generator degrees, plus deg F on a hypersurface ring (a pair of
// parameters on a plane curve ring has socle degree d1+d2+degF-3).
int default_primary_degree_bound(const GradedRing& ring, const std::vector<Poly>& gens);
bool is_primary(const GradedRing& ring, const std::vector<Poly>& gens);

// dim (R/(gens))_n = dim R_n - rank of the degree-n multiplication map.
std::int64_t colength_piece(const GradedRing& ring, const std::vector<Poly>& gens, int n);

// Jacobian criterion for Proj R: true iff (F, dF/dx_i) is irrelevant-primary
// in the ambient polynomial ring. Requires r = 3 and a relation.
bool is_smooth_curve(const GradedRing& ring);

} // namespace tce

#endif
