#ifndef TCE_SYZYGY_HPP
#define TCE_SYZYGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tce/ring.hpp"

namespace tce {

// A homogeneous relation (g_1..g_n) of total degree k: deg g_i = k - d_i and
// sum g_i f_i = 0 in R. Zero components are allowed.
struct RelationVector {
  std::vector<Poly> components;
  int total_degree = 0;
};

// F_p-basis of Rel_k = ker( (+) R_{k-d_i} -> R_k ).
std::vector<RelationVector> relation_space(const GradedRing& ring,
                                           const std::vector<Poly>& gens, int k);

std::int64_t relation_space_dim(const GradedRing& ring, const std::vector<Poly>& gens,
                                int k);

// Graded minimal-generator counts of the relation module in the window
// [min d_i, k_max]: count at k is dim Rel_k - dim(R_1 * Rel_{k-1}).
std::map<int, int> minimal_generator_degrees(const GradedRing& ring,
                                             const std::vector<Poly>& gens, int k_max);

// Splitting degrees of the free relation module of primary generators over
// F_p[x,y]: the relation sheaf on P^1 is (+)_j O(m - k_j) after twisting by m.
// The determinant identity sum k_j = sum d_i is asserted.
struct SplittingType {
  std::vector<int> degrees; // k_1 <= ... <= k_{n-1}
  int twist = 0;            // m
};

SplittingType splitting_type_p1(const GradedRing& ring, const std::vector<Poly>& gens,
                                int m);

// A relation whose components generate an irrelevant-primary ideal,
// re-verified on construction; the evidence consumed by the closure criteria.
struct PrimaryRelationCertificate {
  RelationVector relation;
  std::uint64_t seed = 0;       // seed of the search that produced it
  std::size_t candidates_tested = 0;
};

enum class RelationSearchOutcome {
  Found,
  NoRelationSpace,  // dim Rel_k = 0
  SearchExhausted,  // relations exist, none primary within budget
};

struct PrimaryRelationSearch {
  RelationSearchOutcome outcome;
  std::optional<PrimaryRelationCertificate> certificate;
  std::size_t candidates_tested = 0;
  std::int64_t space_dim = 0;
};

// Looks for a primary homogeneous relation of total degree k among the basis
// vectors of Rel_k, then among `budget` seeded pseudo-random combinations.
// Calls with equal seeds are bit-identical. Preconditions: exactly three
// generators, pairwise primary.
PrimaryRelationSearch find_primary_relation(const GradedRing& ring,
                                            const std::vector<Poly>& gens, int k,
                                            std::size_t budget, std::uint64_t seed);

// Re-check used by consumers of a certificate: relation re-multiplies to 0
// and its nonzero components are primary.
bool primary_relation_valid(const GradedRing& ring, const std::vector<Poly>& gens,
                            const RelationVector& rel);

} // namespace tce

#endif
