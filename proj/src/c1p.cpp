#include "robinson/c1p.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace robinson {

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("binary matrix: negative dimension");
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

BinaryMatrix::BinaryMatrix(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  *this = BinaryMatrix(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("binary matrix: ragged rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw InputError("binary matrix: entries must be 0/1");
      set(i, j, rows[i][j] == 1);
    }
  }
}

std::vector<int> BinaryMatrix::column_support(int c) const {
  std::vector<int> support;
  for (int r = 0; r < rows_; ++r)
    if (get(r, c)) support.push_back(r);
  return support;
}

bool columns_consecutive(const BinaryMatrix& m, std::span<const int> row_order) {
  if (static_cast<int>(row_order.size()) != m.rows()) {
    throw InputError("columns_consecutive: order length differs from row count");
  }
  for (int c = 0; c < m.cols(); ++c) {
    int state = 0;  // 0 before the block, 1 inside, 2 after
    for (int r : row_order) {
      const bool one = m.get(r, c);
      if (state == 0 && one) state = 1;
      else if (state == 1 && !one) state = 2;
      else if (state == 2 && one) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// PQTree

PQTree::PQTree(int leaves) : leaves_(leaves) {
  if (leaves < 1) throw InputError("PQ-tree: needs at least one leaf");
  for (int i = 0; i < leaves; ++i) {
    const int id = allocate(PQKind::Leaf);
    nodes_[id].leaf = i;
  }
  if (leaves == 1) {
    root_ = 0;
  } else {
    root_ = allocate(PQKind::P);
    for (int i = 0; i < leaves; ++i) nodes_[root_].children.push_back(i);
  }
}

int PQTree::allocate(PQKind kind) {
  int id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    leaf_count_.push_back(0);
    full_count_.push_back(0);
    mark_.push_back(Mark::Empty);
  }
  nodes_[id] = PQNode{kind, -1, {}};
  return id;
}

void PQTree::release(int id) {
  nodes_[id].children.clear();
  free_.push_back(id);
}

int PQTree::group(const std::vector<int>& members, Mark mark) {
  if (members.size() == 1) return members.front();
  const int id = allocate(PQKind::P);
  nodes_[id].children = members;
  mark_[id] = mark;
  return id;
}

bool PQTree::reduce(std::span<const int> set) {
  if (!valid_) throw InternalError("PQ-tree: reduce() after a failed reduction");

  std::vector<char> in_set(static_cast<std::size_t>(leaves_), 0);
  int k = 0;
  for (int leaf : set) {
    if (leaf < 0 || leaf >= leaves_) throw InputError("PQ-tree: leaf index out of range");
    if (!in_set[leaf]) {
      in_set[leaf] = 1;
      ++k;
    }
  }
  if (k <= 1 || k == leaves_) return true;

  // Leaf/full counts for every node, post-order from the root.
  {
    std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const PQNode& nd = nodes_[id];
      if (nd.kind == PQKind::Leaf) {
        leaf_count_[id] = 1;
        full_count_[id] = in_set[nd.leaf];
      } else if (next < nd.children.size()) {
        const int child = nd.children[next++];
        stack.emplace_back(child, 0);
        continue;
      } else {
        leaf_count_[id] = 0;
        full_count_[id] = 0;
        for (int c : nd.children) {
          leaf_count_[id] += leaf_count_[c];
          full_count_[id] += full_count_[c];
        }
      }
      mark_[id] = full_count_[id] == 0                ? Mark::Empty
                  : full_count_[id] == leaf_count_[id] ? Mark::Full
                                                       : Mark::Partial;
      stack.pop_back();
    }
  }

  // Pertinent root: deepest node whose subtree holds the whole set.
  int pertinent = root_;
  for (bool descended = true; descended;) {
    descended = false;
    for (int c : nodes_[pertinent].children) {
      if (full_count_[c] == k) {
        pertinent = c;
        descended = true;
        break;
      }
    }
  }
  if (mark_[pertinent] == Mark::Full) return true;

  // Partial nodes below the pertinent root, children before parents.
  std::vector<int> order;
  {
    std::vector<std::pair<int, std::size_t>> stack{{pertinent, 0}};
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const auto& children = nodes_[id].children;
      while (next < children.size() && mark_[children[next]] != Mark::Partial) ++next;
      if (next < children.size()) {
        const int child = children[next++];
        stack.emplace_back(child, 0);
      } else {
        order.push_back(id);
        stack.pop_back();
      }
    }
  }

  for (int id : order) {
    if (!process_partial(id, id == pertinent)) {
      valid_ = false;
      return false;
    }
  }
  return true;
}

bool PQTree::process_partial(int id, bool is_root) {
  return nodes_[id].kind == PQKind::P ? process_pnode(id, is_root) : process_qnode(id, is_root);
}

// A processed partial node that is not the pertinent root is always a Q-node
// whose children run empty ... full, left to right.
bool PQTree::process_pnode(int id, bool is_root) {
  std::vector<int> empty, full, partial;
  for (int c : nodes_[id].children) {
    switch (mark_[c]) {
      case Mark::Empty: empty.push_back(c); break;
      case Mark::Full: full.push_back(c); break;
      case Mark::Partial: partial.push_back(c); break;
    }
  }

  if (!is_root) {
    if (partial.empty()) {
      const int e = group(empty, Mark::Empty);
      const int f = group(full, Mark::Full);
      nodes_[id].kind = PQKind::Q;
      nodes_[id].children = {e, f};
      return true;
    }
    if (partial.size() == 1) {
      const int q = partial.front();
      std::vector<int> children;
      if (!empty.empty()) children.push_back(group(empty, Mark::Empty));
      children.insert(children.end(), nodes_[q].children.begin(), nodes_[q].children.end());
      if (!full.empty()) children.push_back(group(full, Mark::Full));
      release(q);
      nodes_[id].kind = PQKind::Q;
      nodes_[id].children = std::move(children);
      return true;
    }
    return false;
  }

  if (partial.empty()) {
    const int f = group(full, Mark::Full);
    empty.push_back(f);
    nodes_[id].children = std::move(empty);
    return true;
  }
  if (partial.size() == 1) {
    const int q = partial.front();
    if (!full.empty()) {
      const int f = group(full, Mark::Full);
      nodes_[q].children.push_back(f);
    }
    if (empty.empty()) {
      nodes_[id].kind = PQKind::Q;
      nodes_[id].children = std::move(nodes_[q].children);
      release(q);
    } else {
      empty.push_back(q);
      nodes_[id].children = std::move(empty);
    }
    return true;
  }
  if (partial.size() == 2) {
    const int q1 = partial[0];
    const int q2 = partial[1];
    std::vector<int> merged = nodes_[q1].children;
    if (!full.empty()) merged.push_back(group(full, Mark::Full));
    merged.insert(merged.end(), nodes_[q2].children.rbegin(), nodes_[q2].children.rend());
    release(q2);
    if (empty.empty()) {
      release(q1);
      nodes_[id].kind = PQKind::Q;
      nodes_[id].children = std::move(merged);
    } else {
      nodes_[q1].children = std::move(merged);
      empty.push_back(q1);
      nodes_[id].children = std::move(empty);
    }
    return true;
  }
  return false;
}

bool PQTree::process_qnode(int id, bool is_root) {
  auto arrange = [&](const std::vector<int>& ch) -> std::optional<std::vector<int>> {
    std::size_t a = ch.size(), b = 0;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (mark_[ch[i]] != Mark::Empty) {
        a = std::min(a, i);
        b = i;
      }
    }
    if (a == ch.size()) return std::nullopt;
    if (!is_root) {
      // Full block must sit at the right end.
      if (b != ch.size() - 1) return std::nullopt;
      if (a != b && mark_[ch[b]] != Mark::Full) return std::nullopt;
    }
    for (std::size_t i = a + 1; i < b; ++i)
      if (mark_[ch[i]] != Mark::Full) return std::nullopt;

    std::vector<int> out;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const int c = ch[i];
      if (mark_[c] == Mark::Partial && i == a) {
        const auto& sub = nodes_[c].children;
        out.insert(out.end(), sub.begin(), sub.end());
      } else if (mark_[c] == Mark::Partial && i == b) {
        const auto& sub = nodes_[c].children;
        out.insert(out.end(), sub.rbegin(), sub.rend());
      } else {
        out.push_back(c);
      }
    }
    return out;
  };

  std::vector<int> children = nodes_[id].children;
  auto arranged = arrange(children);
  if (!arranged && !is_root) {
    std::reverse(children.begin(), children.end());
    arranged = arrange(children);
  }
  if (!arranged) return false;
  for (int c : children)
    if (mark_[c] == Mark::Partial) release(c);
  nodes_[id].children = std::move(*arranged);
  return true;
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(leaves_));
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const PQNode& nd = nodes_[id];
    if (nd.kind == PQKind::Leaf) {
      out.push_back(nd.leaf);
    } else {
      stack.insert(stack.end(), nd.children.rbegin(), nd.children.rend());
    }
  }
  return out;
}

std::vector<std::vector<int>> PQTree::enumerate_frontiers() const {
  if (leaves_ > 8) throw RefusalError("PQ-tree: frontier enumeration limited to 8 leaves");
  using Orders = std::vector<std::vector<int>>;
  std::function<Orders(int)> expand = [&](int id) -> Orders {
    const PQNode& nd = nodes_[id];
    if (nd.kind == PQKind::Leaf) return {{nd.leaf}};
    std::vector<Orders> parts;
    for (int c : nd.children) parts.push_back(expand(c));

    auto concat = [&](const std::vector<std::size_t>& arrangement) {
      Orders acc{{}};
      for (std::size_t idx : arrangement) {
        Orders next;
        for (const auto& prefix : acc) {
          for (const auto& tail : parts[idx]) {
            auto joined = prefix;
            joined.insert(joined.end(), tail.begin(), tail.end());
            next.push_back(std::move(joined));
          }
        }
        acc = std::move(next);
      }
      return acc;
    };

    std::vector<std::size_t> arrangement(parts.size());
    for (std::size_t i = 0; i < arrangement.size(); ++i) arrangement[i] = i;
    Orders result;
    if (nd.kind == PQKind::P) {
      do {
        auto some = concat(arrangement);
        result.insert(result.end(), some.begin(), some.end());
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    } else {
      auto fwd = concat(arrangement);
      std::reverse(arrangement.begin(), arrangement.end());
      auto bwd = concat(arrangement);
      result.insert(result.end(), fwd.begin(), fwd.end());
      result.insert(result.end(), bwd.begin(), bwd.end());
    }
    return result;
  };
  auto all = expand(root_);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::string PQTree::to_string() const {
  std::string out;
  std::function<void(int)> emit = [&](int id) {
    const PQNode& nd = nodes_[id];
    if (nd.kind == PQKind::Leaf) {
      out += std::to_string(nd.leaf);
      return;
    }
    out += nd.kind == PQKind::P ? '(' : '[';
    for (std::size_t i = 0; i < nd.children.size(); ++i) {
      if (i) out += ' ';
      emit(nd.children[i]);
    }
    out += nd.kind == PQKind::P ? ')' : ']';
  };
  emit(root_);
  return out;
}

void PQTree::validate() const {
  std::vector<int> seen(static_cast<std::size_t>(leaves_), 0);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const PQNode& nd = nodes_[id];
    switch (nd.kind) {
      case PQKind::Leaf:
        if (nd.leaf < 0 || nd.leaf >= leaves_ || !nd.children.empty())
          throw InternalError("PQ-tree: malformed leaf");
        ++seen[nd.leaf];
        break;
      case PQKind::P:
        if (nd.children.size() < 2) throw InternalError("PQ-tree: P-node with < 2 children");
        break;
      case PQKind::Q:
        if (nd.children.size() < 3) throw InternalError("PQ-tree: Q-node with < 3 children");
        break;
    }
    stack.insert(stack.end(), nd.children.begin(), nd.children.end());
  }
  for (int count : seen)
    if (count != 1) throw InternalError("PQ-tree: leaf missing or repeated");
}

// ---------------------------------------------------------------------------

std::optional<PQTree> test_c1p(const BinaryMatrix& m) {
  if (m.rows() < 1) throw InputError("test_c1p: matrix needs at least one row");
  std::set<std::vector<int>> seen;
  PQTree tree(m.rows());
  for (int c = 0; c < m.cols(); ++c) {
    auto support = m.column_support(c);
    if (support.size() <= 1 || static_cast<int>(support.size()) == m.rows()) continue;
    if (!seen.insert(support).second) continue;
    if (!tree.reduce(support)) return std::nullopt;
  }
  return tree;
}

VertexOrder frontier(const PQTree& tree) { return VertexOrder(tree.frontier()); }

}  // namespace robinson
