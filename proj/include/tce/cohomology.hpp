#ifndef TCE_COHOMOLOGY_HPP
#define TCE_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tce/forcing.hpp"
#include "tce/matrix.hpp"
#include "tce/ring.hpp"

namespace tce {

// Exact cohomology of O_Y(n) on the smooth plane curve Y = Proj R, F of
// degree d, via the negative-monomial calculus on P^2:
//
//   H^1(Y, O_Y(n)) = ker( .F : H2(n-d) -> H2(n) ),
//
// where H2(t) is spanned by x^{-a} y^{-b} z^{-c} with a,b,c >= 1 and
// a+b+c = -t. For n >= -2 the F-target vanishes and the kernel is the whole
// negative-monomial space of size C(d-n-1, 2); for lower twists the kernel
// cuts it down, which is exactly what Riemann-Roch requires.

struct H1Space {
  int twist = 0;
  std::vector<Monomial> ambient;   // exponent triples (a,b,c), a+b+c = d - n
  FpMatrix kernel;                 // ambient-coords columns spanning H^1
  std::size_t dim() const { return kernel.cols(); }
};

// Negative-monomial basis of H2(t) on P^2 (triples with a,b,c >= 1 summing
// to -t), graded-lex descending.
std::vector<Monomial> h2_basis(int t);

// Multiplication H2(t) -> H2(t + deg f) by an ambient polynomial: a term
// x^u y^v z^w sends (a,b,c) to (a-u, b-v, c-w), discarded unless all >= 1.
FpMatrix h2_mult(const PrimeField& field, const Poly& f, int t_src);

H1Space h1_space(const GradedRing& ring, int n);

// (h0, h1) of O_Y(n): h0 = dim R_n by projective normality, h1 as above.
std::pair<std::int64_t, std::int64_t> h_line(const GradedRing& ring, int n);

// Multiplication map H^1(O_Y(n)) -> H^1(O_Y(n + deg f)) in the kernel bases.
FpMatrix mult_map_h1(const GradedRing& ring, const Poly& f, int source_twist);

// The class h/(f1 f2) in H^1(Y, O_Y(deg h - d1 - d2 + t)) vanishes iff
// h lies in (f1, f2) in its own degree; the twist only relabels the group.
bool cech_class_vanishes(const GradedRing& ring, const Poly& f1, const Poly& f2,
                         const Poly& h, int extra_twist = 0);

// h^0 of a twisted linear-form sheaf from the long exact sequence of
//   0 -> O_Y(j - m) -> (+)_i O_Y(j - e_i) -> Sheaf(j) -> 0.
struct SheafSectionReport {
  int twist = 0;          // j
  std::int64_t h0 = 0;
  std::int64_t coker_part = 0;   // sum_i dim R_{j-e_i} - dim R_{j-m}
  std::int64_t kernel_part = 0;  // dim ker(H^1(O(j-m)) -> (+) H^1(O(j-e_i)))
};

struct ForcingSheafSections {
  SheafSectionReport forcing;        // F'(-m)(j), candidate included
  SheafSectionReport relation_only;  // F(-m)(j), generators only
  std::int64_t relation_module_h0 = 0; // h^0(R(m)(j)) = dim Rel_{m+j}
};

// Core computation; `candidate` may be absent (then only the relation-side
// report is meaningful and `forcing` coincides with it).
SheafSectionReport h0_linear_forms(const GradedRing& ring, const std::vector<Poly>& gens,
                                   int m, int j);
ForcingSheafSections h0_forcing_sheaf(const ForcingData& data, int j);

// Normalizing-number bounds in multiples of deg H, computed at the twist
// m = d0 (so e_0 = 0). nu_low scans twists by -j*H, a lower bound for nu
// since only pullback divisors are searched. nu_high is reported only where
// the theory provides one: always for two generators (exact when l <= 0 or
// f0 in I), and for three generators when a balanced primary relation
// (total degree sum d / 2) certifies the dual sheaf as normalized. The gap
// to the arbitrary-divisor nu is reported as an interval, never closed
// silently.
struct NormalizingNumber {
  std::int64_t nu_low = 0;
  std::optional<std::int64_t> nu_high;
  bool exact = false;                  // nu pinched to a single value
  std::optional<std::int64_t> e_exact; // 2 nu - l degH when exact
};

NormalizingNumber normalizing_number_h(const ForcingData& data);

} // namespace tce

#endif
