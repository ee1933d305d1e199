#include "robinson/uniform_orient.hpp"

#include <algorithm>
#include <string>

namespace robinson {

namespace {

struct RootedTree {
  std::vector<Vertex> parent;  // parent[root] = -1
  std::vector<Vertex> order;   // preorder, root first
  std::vector<int> size;       // subtree sizes
};

RootedTree root_at(const Tree& tree, Vertex root) {
  const int n = tree.size();
  RootedTree rt{std::vector<Vertex>(n, -1), {}, std::vector<int>(n, 1)};
  rt.order.reserve(static_cast<std::size_t>(n));
  std::vector<Vertex> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    rt.order.push_back(v);
    for (Vertex w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it)
    if (rt.parent[*it] >= 0) rt.size[rt.parent[*it]] += rt.size[*it];
  return rt;
}

// Number of vertices reachable from each vertex along `next`.
template <typename Next, typename Prev>
std::vector<std::int64_t> reach_counts(int n, Next next, Prev prev) {
  std::vector<int> pending(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(next(v).size());
    if (pending[v] == 0) ready.push_back(v);
  }
  std::vector<std::int64_t> reach(n, 0);
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    for (Vertex w : next(v)) reach[v] += 1 + reach[w];
    for (Vertex u : prev(v))
      if (--pending[u] == 0) ready.push_back(u);
  }
  return reach;
}

}  // namespace

NeighborWeights neighbor_weights(const Tree& tree, Vertex center) {
  if (center < 0 || center >= tree.size()) throw InputError("neighbor_weights: bad center");
  const RootedTree rt = root_at(tree, center);
  NeighborWeights w{center, {}};
  for (Vertex y : tree.neighbors(center)) w.neighbors.emplace_back(y, rt.size[y]);
  return w;
}

NeighborPartition optimal_partition_of_neighbors(std::span<const int> weights, int n) {
  if (n < 1) throw InputError("partition: n must be positive");
  long long sum = 0;
  for (int w : weights) {
    if (w < 1) throw InputError("partition: weights must be >= 1");
    if (w > n) throw InputError("partition: weight " + std::to_string(w) + " exceeds n");
    sum += w;
  }
  if (sum > n - 1) throw InputError("partition: weights sum to more than n - 1");

  const int half = n / 2;
  const int p = static_cast<int>(weights.size());
  NeighborPartition out{PartitionTable(half + 1, p + 1), {}, 0};
  PartitionTable& m = out.table;
  for (int j = 1; j <= p; ++j) {
    const int theta = weights[j - 1];
    for (int i = 0; i <= half; ++i) {
      m.at(i, j) = theta > i ? m.at(i, j - 1)
                             : std::max(m.at(i, j - 1), m.at(i - theta, j - 1) + theta);
    }
  }

  out.in_total = m.at(half, p);
  int i = half;
  for (int j = p; j >= 1; --j) {
    if (m.at(i, j) != m.at(i, j - 1)) {
      out.chosen.push_back(j - 1);
      i -= weights[j - 1];
    }
  }
  std::reverse(out.chosen.begin(), out.chosen.end());
  return out;
}

bool verify_all_paths_robinson(const DissimilaritySpace& d, const Tree& tree) {
  const int n = tree.size();
  if (d.size() != n) throw InputError("verify_all_paths_robinson: size mismatch");
  // Same incremental extension rule as check_compatible, walking the
  // undirected tree from every start vertex.
  std::vector<Vertex> path;
  std::vector<std::size_t> next;
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    next.assign(1, 0);
    while (!path.empty()) {
      const Vertex v = path.back();
      const auto nb = tree.neighbors(v);
      std::size_t& k = next.back();
      while (k < nb.size() && path.size() >= 2 && nb[k] == path[path.size() - 2]) ++k;
      if (k == nb.size()) {
        path.pop_back();
        next.pop_back();
        continue;
      }
      const Vertex w = nb[k++];
      const std::size_t t = path.size() - 1;
      for (std::size_t i = 0; i < t; ++i) {
        if (d(path[i], w) < d(path[i], path[t]) || d(path[i], w) < d(path[i + 1], w)) {
          return false;
        }
      }
      path.push_back(w);
      next.push_back(0);
    }
  }
  return true;
}

Vertex find_centroid(const Tree& tree) {
  const int n = tree.size();
  const RootedTree rt = root_at(tree, 0);
  Vertex x = 0;
  for (;;) {
    Vertex heavier = -1;
    for (Vertex y : tree.neighbors(x)) {
      const int theta = rt.parent[y] == x ? rt.size[y] : n - rt.size[x];
      if (2 * theta > n) {
        heavier = y;
        break;
      }
    }
    if (heavier < 0) return x;
    x = heavier;
  }
}

UniformOrientation orient_all_robinson(const DissimilaritySpace& space, const Tree& tree,
                                       bool verify_premise) {
  const int n = tree.size();
  if (space.size() != n) throw InputError("orient_all_robinson: size mismatch");
  if (verify_premise && !verify_all_paths_robinson(space, tree)) {
    throw PreconditionError("orient_all_robinson: some tree path is not Robinson");
  }
  return orient_all_robinson(tree);
}

UniformOrientation orient_all_robinson(const Tree& tree) {
  const int n = tree.size();
  const Vertex center = find_centroid(tree);
  const RootedTree rt = root_at(tree, center);
  std::vector<int> weights;
  for (Vertex y : tree.neighbors(center)) weights.push_back(rt.size[y]);
  const NeighborPartition split = optimal_partition_of_neighbors(weights, n);

  std::vector<char> inward(n, 0);
  UniformOrientation out;
  out.centroid = center;
  for (int idx : split.chosen) {
    const Vertex y = tree.neighbors(center)[idx];
    inward[y] = 1;
    out.in_neighbors.push_back(y);
  }
  std::sort(out.in_neighbors.begin(), out.in_neighbors.end());
  // Propagate each top-level neighbor's side down its component.
  for (Vertex v : rt.order)
    if (rt.parent[v] >= 0 && rt.parent[v] != center) inward[v] = inward[rt.parent[v]];

  std::vector<Direction> dirs;
  dirs.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) {
    const Vertex child = rt.parent[e.v] == e.u ? e.v : e.u;
    const Vertex from = inward[child] ? child : rt.parent[child];
    dirs.push_back(from == e.u ? Direction::Forward : Direction::Backward);
  }
  out.orientation = OrientedTree(tree, std::move(dirs));
  out.xi = count_xi(out.orientation);
  return out;
}

std::optional<Vertex> has_central_vertex(const OrientedTree& ot) {
  const int n = ot.size();
  const auto out = reach_counts(
      n, [&](Vertex v) { return ot.successors(v); }, [&](Vertex v) { return ot.predecessors(v); });
  const auto in = reach_counts(
      n, [&](Vertex v) { return ot.predecessors(v); }, [&](Vertex v) { return ot.successors(v); });
  for (Vertex v = 0; v < n; ++v)
    if (out[v] + in[v] == n - 1) return v;
  return std::nullopt;
}

}  // namespace robinson
