#include "robinson/paths.hpp"

#include <algorithm>
#include <string>

namespace robinson {

namespace {

void check_inputs(const DissimilaritySpace& space, const VertexOrder& order, const char* who) {
  if (!order.is_permutation_of(space.size())) {
    throw InputError(std::string(who) + ": order must be a permutation of the space's points");
  }
  if (!space.is_symmetric()) {
    throw PreconditionError(std::string(who) + ": dissimilarity must be symmetric");
  }
}

}  // namespace

EtaTable eta_table(const DissimilaritySpace& space, const VertexOrder& order) {
  check_inputs(space, order, "eta_table");
  const int n = static_cast<int>(order.size());
  auto d = [&](int a, int b) { return space(order[a - 1], order[b - 1]); };

  EtaTable out;
  int i = 1;
  for (int j = 3; j <= n; ++j) {
    // Smallest k >= i such that x_k -> ... -> x_j is still Robinson.
    int k = j;
    while (k > i && d(j, k) <= d(j, k - 1) && d(j - 1, k - 1) <= d(j, k - 1)) --k;
    if (k > i) {
      out.compressed.emplace_back(i, j - 1);
      i = k;
    }
  }
  out.compressed.emplace_back(i, n);

  out.expanded.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (std::size_t t = 0; t < out.compressed.size(); ++t) {
    const auto [start, eta] = out.compressed[t];
    const int stop = t + 1 < out.compressed.size() ? out.compressed[t + 1].first : n;
    for (int pos = start; pos < stop; ++pos) out.expanded[pos] = eta;
  }
  return out;
}

PathOrientation path_orientation(const DissimilaritySpace& space, const VertexOrder& order,
                                 bool restricted_splits) {
  check_inputs(space, order, "path_orientation");
  const int n = static_cast<int>(order.size());

  PathOrientation out;
  out.eta = eta_table(space, order);
  out.tables = PathDPTables(n);
  PathDPTables& t = out.tables;

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j <= out.eta.eta(i)) t.m(i, j) = static_cast<std::int64_t>(j - i + 1) * (j - i) / 2;
    }
  }

  std::vector<int> splits;
  if (restricted_splits) {
    for (const auto& [a, b] : out.eta.compressed) {
      splits.push_back(a);
      splits.push_back(b);
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  } else {
    for (int k = 1; k <= n; ++k) splits.push_back(k);
  }

  for (int len = 1; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      const int j = i + len;
      for (int k : splits) {
        if (k <= i) continue;
        if (k >= j) break;
        const std::int64_t candidate = t.m(i, k) + t.m(k, j);
        if (t.m(i, j) < candidate) {
          t.m(i, j) = candidate;
          t.p(i, j) = k;
        }
      }
    }
  }

  out.orientation = reconstruct_orientation(t, space, order);
  out.xi = count_xi(out.orientation);
  const std::int64_t expected = n >= 2 ? t.m(1, n) : 0;
  if (out.xi != expected) {
    throw InternalError("path_orientation: reconstructed orientation has " +
                        std::to_string(out.xi) + " paths, table says " + std::to_string(expected));
  }
  return out;
}

OrientedTree reconstruct_orientation(const PathDPTables& tables, const DissimilaritySpace& space,
                                     const VertexOrder& order) {
  const int n = static_cast<int>(order.size());
  if (!order.is_permutation_of(space.size()) || tables.size() != n) {
    throw InputError("reconstruct_orientation: tables, space and order disagree");
  }
  Tree path = path_tree(order.perm());
  if (n < 2) return OrientedTree(std::move(path), {});

  // Leaf intervals of the split tree, left to right.
  std::vector<std::pair<int, int>> runs;
  std::vector<std::pair<int, int>> stack{{1, n}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    const int k = tables.p(i, j);
    if (k == 0) {
      runs.emplace_back(i, j);
    } else if (k > i && k < j) {
      stack.emplace_back(k, j);
      stack.emplace_back(i, k);
    } else {
      throw InternalError("reconstruct_orientation: split " + std::to_string(k) +
                          " outside (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  std::vector<Direction> dirs(static_cast<std::size_t>(n - 1), Direction::Forward);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Direction dir = r % 2 == 0 ? Direction::Forward : Direction::Backward;
    // Edge e joins positions e+1 and e+2.
    for (int e = runs[r].first - 1; e < runs[r].second - 1; ++e) dirs[e] = dir;
  }
  return OrientedTree(std::move(path), std::move(dirs));
}

}  // namespace robinson
