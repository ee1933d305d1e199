#pragma once

// Dissimilarity spaces, trees, orientations and the ground-truth
// compatibility checker every algorithm in this library is tested against.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "robinson/error.hpp"

namespace robinson {

using Vertex = int;

/// n x n matrix of nonnegative finite reals with a zero diagonal.
/// Symmetry is not required.
class DissimilaritySpace {
 public:
  DissimilaritySpace() = default;
  /// Row-major values; throws InputError on any invariant violation.
  DissimilaritySpace(int n, std::vector<double> values);
  explicit DissimilaritySpace(const std::vector<std::vector<double>>& rows);

  /// Every off-diagonal entry equal to `value`.
  static DissimilaritySpace constant(int n, double value = 1.0);

  int size() const { return n_; }
  double operator()(Vertex x, Vertex y) const {
    return values_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(y)];
  }
  std::span<const double> values() const { return values_; }
  bool is_symmetric() const;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected tree on vertices 0..n-1. Construction checks n-1 edges,
/// no loops, no duplicates, connectivity.
class Tree {
 public:
  Tree() = default;
  Tree(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
            adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  int degree(Vertex v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }
  /// Vertex sequence of the unique u-v path, u first.
  std::vector<Vertex> path_between(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
};

/// The path x_0 - x_1 - ... following `order`.
Tree path_tree(std::span<const Vertex> order);
/// K_{1,n-1} with the given center, edges (center, leaf) by increasing leaf.
Tree star_tree(int n, Vertex center);

enum class Direction : std::uint8_t { Forward, Backward };

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A tree together with one direction per edge. Forward means the stored
/// edge (u, v) is traversed u -> v.
class OrientedTree {
 public:
  OrientedTree() = default;
  OrientedTree(Tree tree, std::vector<Direction> directions);
  /// Builds the underlying tree from the arcs (edge i is arcs[i], Forward).
  static OrientedTree from_arcs(int n, const std::vector<Arc>& arcs);

  const Tree& tree() const { return tree_; }
  int size() const { return tree_.size(); }
  const std::vector<Direction>& directions() const { return directions_; }
  Arc arc(std::size_t edge) const;
  std::vector<Arc> arcs() const;
  std::span<const Vertex> successors(Vertex v) const {
    return {out_.data() + out_offsets_[static_cast<std::size_t>(v)],
            out_.data() + out_offsets_[static_cast<std::size_t>(v) + 1]};
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    return {in_.data() + in_offsets_[static_cast<std::size_t>(v)],
            in_.data() + in_offsets_[static_cast<std::size_t>(v) + 1]};
  }

 private:
  Tree tree_;
  std::vector<Direction> directions_;
  std::vector<int> out_offsets_, in_offsets_;
  std::vector<Vertex> out_, in_;
};

/// Sequence of distinct vertex indices. Usually a permutation of 0..n-1,
/// but partial orders over a vertex subset are allowed where documented.
class VertexOrder {
 public:
  VertexOrder() = default;
  explicit VertexOrder(std::vector<Vertex> perm);
  static VertexOrder identity(int n);

  const std::vector<Vertex>& perm() const { return perm_; }
  std::size_t size() const { return perm_.size(); }
  Vertex operator[](std::size_t i) const { return perm_[i]; }
  bool is_permutation_of(int n) const;
  VertexOrder reversed() const;
  /// pos[v] = index of v in the order; requires a full permutation of 0..n-1.
  std::vector<int> positions(int n) const;

 private:
  std::vector<Vertex> perm_;
};

/// For all positions i<j<k: d(p_i,p_k) >= max(d(p_i,p_j), d(p_j,p_k)).
bool is_one_way_order(const DissimilaritySpace& space, std::span<const Vertex> order);
bool is_one_way_order(const DissimilaritySpace& space, const VertexOrder& order);
/// Both the forward and the mirrored inequality families hold.
bool is_two_way_order(const DissimilaritySpace& space, std::span<const Vertex> order);
bool is_two_way_order(const DissimilaritySpace& space, const VertexOrder& order);

/// All (u, v), u != v, with a directed u ~> v path; sorted.
std::vector<std::pair<Vertex, Vertex>> reachability(const OrientedTree& ot);

/// Number of directed paths of length >= 1, i.e. ordered reachable pairs.
/// Linear time: in a tree the sets reached through distinct successors are disjoint.
std::int64_t count_xi(const OrientedTree& ot);

/// Every directed path of the orientation is one-way-Robinson under `space`.
bool check_compatible(const DissimilaritySpace& space, const OrientedTree& ot);

}  // namespace robinson
