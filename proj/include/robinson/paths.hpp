#pragma once

// Optimal orientation of a labelled path under a symmetric dissimilarity.
//
// Positions inside this module are 1-based (x_1 .. x_n along the path) so the
// tables line up with the textbook recurrences; vertex ids at the API
// boundary are the usual 0-based indices.

#include <cstdint>
#include <utility>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

/// eta(i) = largest j such that the run x_i -> ... -> x_j is Robinson.
struct EtaTable {
  /// (i_k, j_k) with eta constant = j_k on [i_k, i_{k+1}); i_1 = 1, last j = n.
  std::vector<std::pair<int, int>> compressed;
  /// expanded[i] = eta(i) for 1 <= i < n; expanded[0] unused.
  std::vector<int> expanded;

  int eta(int i) const { return expanded.at(static_cast<std::size_t>(i)); }
};

EtaTable eta_table(const DissimilaritySpace& space, const VertexOrder& order);

/// Upper-triangular DP tables indexed [i][j], 1 <= i <= j <= n.
/// M[i][j] = optimal path count on x_i..x_j; P[i][j] = split position or 0.
class PathDPTables {
 public:
  PathDPTables() = default;
  explicit PathDPTables(int n)
      : n_(n), m_(cells(n), 0), p_(cells(n), 0) {}

  int size() const { return n_; }
  std::int64_t m(int i, int j) const { return m_[index(i, j)]; }
  std::int64_t& m(int i, int j) { return m_[index(i, j)]; }
  int p(int i, int j) const { return p_[index(i, j)]; }
  int& p(int i, int j) { return p_[index(i, j)]; }

 private:
  static std::size_t cells(int n) {
    return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<std::int64_t> m_;
  std::vector<int> p_;
};

struct PathOrientation {
  PathDPTables tables;
  EtaTable eta;
  OrientedTree orientation;
  std::int64_t xi = 0;
};

/// Fills the interval DP and reconstructs an optimal orientation of the path
/// through `order`. With `restricted_splits` only breakpoints of the
/// compressed eta sequence are tried as split positions.
PathOrientation path_orientation(const DissimilaritySpace& space, const VertexOrder& order,
                                 bool restricted_splits = false);

/// Splits recursively at P until P = 0; the resulting monotone runs
/// alternate direction, the first one left to right.
OrientedTree reconstruct_orientation(const PathDPTables& tables, const DissimilaritySpace& space,
                                     const VertexOrder& order);

}  // namespace robinson
