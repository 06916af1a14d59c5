#ifndef TCE_FROBENIUS_HPP
#define TCE_FROBENIUS_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tce/forcing.hpp"
#include "tce/matrix.hpp"
#include "tce/membership.hpp"
#include "tce/ring.hpp"

namespace tce {

// Raised when a bracket solve would touch a graded piece above the cap.
// Arithmetic is exact everywhere, so the engine refuses rather than degrades.
class ResourceCapError : public std::runtime_error {
public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a caller-provided cancel flag is raised; checked between
// graded-piece eliminations so long bracket solves stay cancellable.
class OperationCancelled : public std::runtime_error {
public:
  OperationCancelled() : std::runtime_error("operation cancelled") {}
};

struct FrobeniusConfig {
  std::optional<Poly> test_element; // default: first nonzero partial of F, or 1
  int e_max = 2;                    // q = p^e for e = 1..e_max
  std::int64_t degree_cap = 20000;  // max graded-piece dimension per solve
  const std::atomic<bool>* cancel = nullptr;
};

// The multiplicative test element c used by the tight-closure witness.
Poly default_test_element(const GradedRing& ring);

// Tests multiplier * f0^q in (f1^q, ..., fn^q) for q = p^e. Cofactor degrees
// are deg(multiplier) + q*d0 - q*d_i.
std::optional<CofactorCertificate> bracket_membership(const ForcingData& data,
                                                      std::int64_t q,
                                                      const Poly& multiplier,
                                                      std::int64_t degree_cap = 20000,
                                                      const std::atomic<bool>* cancel = nullptr);

struct FrobeniusClosureResult {
  bool member = false;              // "in" vs "unknown"; failure never proves exclusion
  std::int64_t witness_q = 0;       // least q with a certificate, when member
  std::optional<CofactorCertificate> certificate;
};

FrobeniusClosureResult frobenius_closure_test(const ForcingData& data,
                                              const FrobeniusConfig& config = {});

struct TightClosureWitness {
  Poly test_element;
  std::vector<bool> per_exponent;   // c * f0^{p^e} in I^[p^e], e = 1..e_max
  bool all_hold = false;
  std::string summary;
};

// Brute-force c*f0^q tests; "refutes" is always conditional on the test
// element, which is recorded in the result.
TightClosureWitness tight_closure_witness(const ForcingData& data,
                                          const FrobeniusConfig& config = {});

// Coefficient of (xyz)^{p-1} in F^{p-1} for a plane cubic; 0 iff the curve is
// supersingular.
std::int64_t hasse_invariant(const PrimeField& field, const Poly& cubic);

// Independent route for the same invariant: F^{p-1} in (x^p, y^p, z^p) in the
// ambient polynomial ring, decided by an honest linear solve.
bool hasse_bracket_vanishes(const PrimeField& field, const Poly& cubic);

// p-linear Frobenius action on H^1(Y, O_Y) in the negative-monomial basis
// x^{-a}y^{-b}z^{-c}, a,b,c >= 1, a+b+c = d. A class xi maps to F^{p-1} * xi^p
// with every monomial containing a nonnegative exponent discarded. Over F_p
// coordinates the p-power on scalars is the identity, so composites are plain
// matrix powers.
struct FrobeniusAction {
  FpMatrix matrix;
  std::vector<Monomial> basis;      // exponent triples (a,b,c)
  int genus = 0;
  int p_rank = 0;                   // rank of the stable part V_s
  int nilpotency_index = 0;         // least t with A^t = 0 on V_n
  std::vector<std::size_t> rank_chain; // rank(A^e), e = 1..genus
};

FrobeniusAction frobenius_action_h1(const GradedRing& ring);

// Artin-Schreier glue data: a_i = u_i / f_i^{q} with T_i^q - T_i + a_i = 0.
// The exact identity h^q - h*(f1 f2)^{q-1} = u2*f1^q - u1*f2^q holds in R.
struct CoverDatum {
  Poly u1, u2;
  std::int64_t q = 0;               // denominator exponent, a power of p
  Poly h_level;                     // the class numerator at this level
  Poly f1_level, f2_level;          // the pair at this level (Frobenius images)
};

enum class SplitRoute {
  Coboundary,       // h in (f1, f2): the class is already a coboundary
  ArtinSchreier,    // proper Artin-Schreier layer from the membership solve
  NilpotentFrobenius, // class killed by iterated Frobenius, no layer needed
  NotACoboundary,   // needs a further Frobenius or a stable-basis change
};

struct ArtinSchreierSplit {
  SplitRoute route;
  std::optional<CoverDatum> datum;
  std::string note;
};

ArtinSchreierSplit artin_schreier_split(const GradedRing& ring, const Poly& f1,
                                        const Poly& f2, const Poly& h, int e_max = 4);

bool cover_datum_valid(const GradedRing& ring, const CoverDatum& datum);

} // namespace tce

#endif
