#ifndef TCE_FORCING_HPP
#define TCE_FORCING_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "tce/ring.hpp"

namespace tce {

// The input tuple for every closure criterion: generators f_1..f_n, a
// candidate f_0, and a twist m with e_i = m - d_i, e_0 = m - d_0.
struct ForcingData {
  std::shared_ptr<const GradedRing> ring;
  std::vector<Poly> generators; // f_1..f_n, homogeneous, nonzero, n >= 2
  Poly candidate;               // f_0, homogeneous, nonzero
  int twist = 0;                // m

  ForcingData(std::shared_ptr<const GradedRing> r, std::vector<Poly> gens, Poly f0)
      : ForcingData(std::move(r), std::move(gens), std::move(f0), std::nullopt) {}

  ForcingData(std::shared_ptr<const GradedRing> r, std::vector<Poly> gens, Poly f0,
              std::optional<int> m)
      : ring(std::move(r)), generators(std::move(gens)), candidate(std::move(f0)) {
    if (generators.size() < 2)
      throw std::invalid_argument("forcing data needs at least two generators");
    for (Poly& g : generators) {
      g = ring->reduce(g);
      if (g.is_zero()) throw std::invalid_argument("generators must be nonzero in R");
      if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
    }
    candidate = ring->reduce(candidate);
    if (candidate.is_zero())
      throw std::invalid_argument("candidate must be nonzero in R");
    if (!candidate.is_homogeneous())
      throw std::invalid_argument("candidate must be homogeneous");
    twist = m.value_or(candidate.degree());
  }

  int n() const { return static_cast<int>(generators.size()); }
  int d0() const { return candidate.degree(); }

  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(generators.size());
    for (const Poly& g : generators) d.push_back(g.degree());
    return d;
  }

  int min_degree() const {
    int m = generators.front().degree();
    for (const Poly& g : generators) m = std::min(m, g.degree());
    return m;
  }

  int sum_degrees() const {
    int s = 0;
    for (const Poly& g : generators) s += g.degree();
    return s;
  }

  // e_i = m - d_i
  std::vector<int> e_list() const {
    std::vector<int> e;
    for (const Poly& g : generators) e.push_back(twist - g.degree());
    return e;
  }

  int e0() const { return twist - d0(); }
};

} // namespace tce

#endif
