#include "tce/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tce {

std::int64_t leadno(const std::vector<int>& d_list, int d0) {
  if (d_list.size() < 2) throw std::invalid_argument("leadno: needs n >= 2");
  std::int64_t sum = 0;
  for (int d : d_list) sum += d;
  return sum - static_cast<std::int64_t>(d_list.size() - 1) * d0;
}

std::int64_t leadno(const ForcingData& data) { return leadno(data.degrees(), data.d0()); }

std::vector<std::int64_t> chern_polynomial(const std::vector<int>& e_list, int m) {
  std::size_t n = e_list.size();
  std::size_t rank = n == 0 ? 0 : n - 1;
  // numerator prod (1 - e_i t): signed elementary symmetric coefficients
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = 1;
  for (int e : e_list) {
    for (std::size_t i = std::min(num.size() - 1, n); i >= 1; --i)
      num[i] -= static_cast<std::int64_t>(e) * num[i - 1];
  }
  // series division by (1 - m t): c_k = num_k + m c_{k-1}
  std::vector<std::int64_t> c(rank + 1, 0);
  for (std::size_t k = 0; k <= rank; ++k) {
    std::int64_t v = k < num.size() ? num[k] : 0;
    if (k >= 1) v += static_cast<std::int64_t>(m) * c[k - 1];
    c[k] = v;
  }
  return c;
}

std::int64_t self_intersection_top(const ForcingData& data, int degH) {
  if (degH < 1) throw std::invalid_argument("self_intersection_top: degH >= 1 required");
  return leadno(data) * degH;
}

EBounds e_bounds(const ForcingData& data, int degH, bool f0_in_ideal,
                 const PrimaryRelationCertificate* certificate) {
  if (degH < 1) throw std::invalid_argument("e_bounds: degH >= 1 required");
  std::int64_t l = leadno(data);
  std::int64_t ldegH = l * degH;
  EBounds b;

  if (data.n() == 2) {
    if (l <= 0) {
      b.nu_lo = 0;
      b.nu_hi = 0;
      b.nu_exact = true;
      b.e_lo = b.e_hi = -ldegH;
      b.e_exact = true;
    } else if (f0_in_ideal) {
      b.nu_lo = ldegH;
      b.nu_hi = ldegH;
      b.nu_exact = true;
      b.e_lo = b.e_hi = ldegH;
      b.e_exact = true;
    } else {
      b.nu_lo = 0;
      b.nu_hi = ldegH - 1;
      b.e_lo = -ldegH;
      b.e_hi = ldegH - 2;
    }
    if (certificate)
      throw std::invalid_argument("e_bounds: relation certificates apply to three generators");
    return b;
  }

  // three or more generators: only certified relations produce bounds
  b.nu_lo = 0;
  if (!certificate) return b;
  if (data.n() != 3)
    throw std::invalid_argument("e_bounds: relation certificate needs exactly three generators");
  if (!primary_relation_valid(*data.ring, data.generators, certificate->relation))
    throw std::invalid_argument("e_bounds: relation certificate failed re-verification");

  int k = certificate->relation.total_degree;
  std::vector<int> d = data.degrees();
  std::int64_t sum_d = d[0] + d[1] + d[2];
  std::int64_t s = sum_d - 2 * k;

  if (s >= 0) {
    // the relation subsheaf normalizes the dual on the nose
    b.e_lo = b.e_hi = s * degH;
    b.e_exact = true;
  } else {
    b.e_lo = s * degH;
    b.e_hi = -s * degH;
  }

  std::int64_t a = std::max<std::int64_t>(k - d[2], d[0] + d[1] - k);
  std::int64_t nu_hi = a * degH;
  if (s == 0) nu_hi = std::min(nu_hi, std::max<std::int64_t>(0, l / 2) * degH);
  b.nu_hi = nu_hi;
  b.nu_exact = (b.nu_hi && *b.nu_hi == b.nu_lo);
  return b;
}

IntersectionReport intersection_report(const ForcingData& data, int degH,
                                       bool f0_in_ideal,
                                       const PrimaryRelationCertificate* certificate) {
  IntersectionReport rep;
  rep.m = data.twist;
  rep.e_list = data.e_list();
  rep.e0 = data.e0();
  rep.l = leadno(data);
  rep.degH = degH;
  rep.z_top = rep.l * degH;
  rep.chern = chern_polynomial(rep.e_list, rep.m);
  rep.bounds = e_bounds(data, degH, f0_in_ideal, certificate);
  return rep;
}

int default_degH(const GradedRing& ring) {
  if (ring.nvars() == 3 && ring.has_relation()) return ring.relation_degree();
  if (ring.nvars() == 2 && !ring.has_relation()) return 1;
  throw std::invalid_argument("default_degH: supply degH for this ring explicitly");
}

} // namespace tce
