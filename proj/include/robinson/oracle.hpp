#pragma once

// Exhaustive reference implementations. Every entry point has a hard size
// guard and throws RefusalError instead of attempting a long run.

#include <cstdint>
#include <optional>
#include <vector>

#include "robinson/c1p.hpp"
#include "robinson/core.hpp"

namespace robinson {

inline constexpr int kMaxBruteOrientVertices = 21;
inline constexpr int kMaxBrutePermutation = 8;
inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

struct BruteOrientation {
  std::int64_t xi_max = 0;
  OrientedTree witness;
};

/// Tries all 2^(n-1) orientations, edges in stored order as bits of a
/// counter (bit e set = Backward). The first maximum found is the witness.
BruteOrientation brute_optimal_orientation(const DissimilaritySpace& space, const Tree& tree);

/// First permutation in lexicographic order passing is_two_way_order.
std::optional<VertexOrder> brute_two_way(const DissimilaritySpace& space);

/// First row permutation in lexicographic order making every column consecutive.
std::optional<std::vector<int>> brute_c1p(const BinaryMatrix& m);

/// A kappa-subset (sorted) on which recognize_two_way succeeds. Removal
/// sets are drawn from the highest indices first. Throws RefusalError when
/// C(n, kappa) exceeds `budget`.
std::optional<std::vector<Vertex>> brute_robinson_subset(const DissimilaritySpace& space,
                                                         int kappa,
                                                         std::uint64_t budget = kDefaultSubsetBudget);

/// Exhaustive (center, in-set) search over star orientations, n <= 9.
/// Returns the center and the in-set of the first compatible one found.
std::optional<std::pair<Vertex, std::vector<Vertex>>> brute_assign_star(
    const DissimilaritySpace& space, int in_count);

/// Bijection phi from tree vertices to points such that every directed path
/// of `shape` is one-way-Robinson under d(phi(.), phi(.)); n <= 8.
/// Returns phi as a vector indexed by tree vertex.
std::optional<std::vector<Vertex>> brute_assignment(const DissimilaritySpace& space,
                                                    const OrientedTree& shape);

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

}  // namespace robinson
