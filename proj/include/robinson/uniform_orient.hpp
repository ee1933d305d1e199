#pragma once

// Optimal orientation of a tree in which every path is Robinson (for example
// under a constant dissimilarity). Any such orientation is compatible, and an
// optimal one has a central vertex: pick a centroid, then split the
// components around it into an inward and an outward side as evenly as
// possible with a subset-sum table.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

struct NeighborWeights {
  Vertex center = 0;
  /// (neighbor y, theta(y)) where theta(y) is the size of the component of
  /// T - center containing y. In the tree's adjacency order.
  std::vector<std::pair<Vertex, int>> neighbors;
};

NeighborWeights neighbor_weights(const Tree& tree, Vertex center);

/// M[i][j]: largest subset sum <= i using the first j weights.
class PartitionTable {
 public:
  PartitionTable(int rows, int cols) : rows_(rows), cols_(cols),
      cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return cells_[index(i, j)]; }
  int& at(int i, int j) { return cells_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
  int rows_;
  int cols_;
  std::vector<int> cells_;
};

struct NeighborPartition {
  PartitionTable table;        // rows 0..floor(n/2), columns 0..p
  std::vector<int> chosen;     // indices into the weight list, increasing
  int in_total = 0;            // sum of the chosen weights = M[floor(n/2)][p]
};

/// Subset of `weights` with the largest sum not exceeding floor(n/2).
/// Requires every weight >= 1 and sum <= n - 1. Backtracking prefers
/// leaving an item out when both choices tie.
NeighborPartition optimal_partition_of_neighbors(std::span<const int> weights, int n);

/// For every u, v the u -> v tree path is a one-way-Robinson order.
bool verify_all_paths_robinson(const DissimilaritySpace& space, const Tree& tree);

/// Vertex whose removal leaves components of at most n/2 vertices, found by
/// walking from vertex 0 towards any heavier side.
Vertex find_centroid(const Tree& tree);

struct UniformOrientation {
  OrientedTree orientation;
  std::int64_t xi = 0;
  Vertex centroid = 0;
  std::vector<Vertex> in_neighbors;  // centroid neighbors whose components point inward
};

/// Optimal orientation assuming every tree path is Robinson. With
/// `verify_premise` the assumption is checked first (PreconditionError).
UniformOrientation orient_all_robinson(const DissimilaritySpace& space, const Tree& tree,
                                       bool verify_premise = false);
/// The same orientation; under the premise the dissimilarity values are
/// never consulted, so large trees need no n x n matrix.
UniformOrientation orient_all_robinson(const Tree& tree);

/// A vertex related (x ~> y or y ~> x) to every other vertex; the smallest
/// such index, if any.
std::optional<Vertex> has_central_vertex(const OrientedTree& ot);

}  // namespace robinson
