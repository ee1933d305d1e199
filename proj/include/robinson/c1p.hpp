#pragma once

// Consecutive-ones testing with PQ-trees (Booth-Lueker template reduction).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

/// Dense rows x columns 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);
  explicit BinaryMatrix(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return bits_[index(r, c)] != 0; }
  void set(int r, int c, bool value) { bits_[index(r, c)] = value ? 1 : 0; }
  /// Rows holding a one in column c, increasing.
  std::vector<int> column_support(int c) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// True iff every column's ones occupy consecutive positions of `row_order`.
bool columns_consecutive(const BinaryMatrix& m, std::span<const int> row_order);

enum class PQKind : std::uint8_t { Leaf, P, Q };

struct PQNode {
  PQKind kind = PQKind::Leaf;
  int leaf = -1;               // row index for leaves
  std::vector<int> children;   // node ids; order is significant for Q-nodes
};

/// PQ-tree over leaves 0..n-1, stored in an arena. Starts as the universal
/// tree (one P-node over all leaves) and is narrowed by reduce().
class PQTree {
 public:
  explicit PQTree(int leaves);

  /// Restricts the represented orders to those where `set` is consecutive.
  /// Returns false when no represented order qualifies; the tree is then
  /// unusable and further reduce() calls throw.
  bool reduce(std::span<const int> set);

  int leaf_count() const { return leaves_; }
  int root() const { return root_; }
  const PQNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  /// Leaves left to right in the current arrangement.
  std::vector<int> frontier() const;
  /// Every order the tree represents, sorted. Test helper; refuses above 8 leaves.
  std::vector<std::vector<int>> enumerate_frontiers() const;
  /// Parenthesised form: P-nodes "( ... )", Q-nodes "[ ... ]".
  std::string to_string() const;
  /// Throws InternalError if the structural invariants do not hold.
  void validate() const;

 private:
  enum class Mark : std::uint8_t { Empty, Full, Partial };

  int allocate(PQKind kind);
  void release(int id);
  int group(const std::vector<int>& members, Mark mark);
  bool process_partial(int id, bool is_root);
  bool process_pnode(int id, bool is_root);
  bool process_qnode(int id, bool is_root);

  int leaves_ = 0;
  int root_ = -1;
  bool valid_ = true;
  std::vector<PQNode> nodes_;
  std::vector<int> free_;
  // Per-reduction scratch, indexed by node id.
  std::vector<int> leaf_count_, full_count_;
  std::vector<Mark> mark_;
};

/// Present iff some row permutation makes every column's ones consecutive.
/// Columns with at most one one, full columns and duplicates are skipped.
std::optional<PQTree> test_c1p(const BinaryMatrix& m);

/// The tree's current left-to-right leaf order.
VertexOrder frontier(const PQTree& tree);

}  // namespace robinson
