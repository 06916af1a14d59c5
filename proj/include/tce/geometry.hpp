#ifndef TCE_GEOMETRY_HPP
#define TCE_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tce/forcing.hpp"
#include "tce/syzygy.hpp"

namespace tce {

// l = d_1 + ... + d_n - (n-1) d_0; the top self-intersection of the forcing
// divisor is l * deg H.
std::int64_t leadno(const std::vector<int>& d_list, int d0);
std::int64_t leadno(const ForcingData& data);

// Coefficients gamma_0..gamma_{n-1} with c_i = gamma_i H^i, obtained by
// dividing prod_i (1 - e_i H t) by (1 - m H t) as a power series in t,
// truncated at the bundle rank n-1. On a curve only c_0, c_1 are geometric;
// higher entries are formal.
std::vector<std::int64_t> chern_polynomial(const std::vector<int>& e_list, int m);

std::int64_t self_intersection_top(const ForcingData& data, int degH);

// Interval bounds for the normalizing number nu and the e-invariant (both in
// absolute units; degH is already multiplied in).
//
// For two generators (ruled-surface case) the bounds are exact theory:
//   l <= 0       : nu = 0 and e = -l degH, both exact.
//   f0 in I      : nu = max(0, l) degH and e = |l| degH, both exact.
//   l > 0, f0 not in I : nu in [0, l degH - 1], e in [-l degH, l degH - 2].
//
// For three generators nothing exact is known without a relation; a
// certified primary relation of total degree k gives, with s = sum d - 2k:
//   e in [s degH, |s| degH] (exact when s >= 0; e = 0 when 2k = sum d),
//   nu <= a degH for a = max(k - d3, d1 + d2 - k), and for the balanced
//   case additionally nu <= max(0, l/2) degH.
// Missing bounds stay unset rather than guessed.
struct EBounds {
  std::int64_t nu_lo = 0;
  std::optional<std::int64_t> nu_hi;
  std::optional<std::int64_t> e_lo, e_hi;
  bool nu_exact = false, e_exact = false;
};

// f0_in_ideal must be the membership verdict for data (it sharpens the upper
// bounds); the k-based sharpening requires a certificate from the syzygy
// search and re-verifies it.
EBounds e_bounds(const ForcingData& data, int degH, bool f0_in_ideal,
                 const PrimaryRelationCertificate* certificate = nullptr);

struct IntersectionReport {
  int m = 0;
  std::vector<int> e_list;
  int e0 = 0;
  std::int64_t l = 0;
  int degH = 0;
  std::int64_t z_top = 0;
  std::vector<std::int64_t> chern;
  EBounds bounds;
};

IntersectionReport intersection_report(const ForcingData& data, int degH,
                                       bool f0_in_ideal,
                                       const PrimaryRelationCertificate* certificate = nullptr);

// deg H for the supported ring types: deg F on a plane-curve cone, 1 on P^1.
int default_degH(const GradedRing& ring);

} // namespace tce

#endif
