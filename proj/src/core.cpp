#include "robinson/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace robinson {

namespace {

void check_vertex(Vertex v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                     " out of range for n = " + std::to_string(n));
  }
}

std::vector<int> csr_offsets(int n, const std::vector<int>& degree) {
  std::vector<int> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
  return offsets;
}

void check_order_vertices(const DissimilaritySpace& space, std::span<const Vertex> order) {
  std::vector<char> seen(static_cast<std::size_t>(space.size()), 0);
  for (Vertex v : order) {
    check_vertex(v, space.size(), "order");
    if (seen[v]) throw InputError("order: vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DissimilaritySpace

DissimilaritySpace::DissimilaritySpace(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0) throw InputError("dissimilarity: negative size");
  if (values_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("dissimilarity: expected " + std::to_string(n) + "x" + std::to_string(n) +
                     " values, got " + std::to_string(values_.size()));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double d = (*this)(x, y);
      if (!std::isfinite(d) || d < 0.0) {
        throw InputError("dissimilarity: entry (" + std::to_string(x) + "," + std::to_string(y) +
                         ") must be finite and nonnegative");
      }
      if (x == y && d != 0.0) {
        throw InputError("dissimilarity: diagonal entry " + std::to_string(x) + " is not zero");
      }
    }
  }
}

DissimilaritySpace::DissimilaritySpace(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InputError("dissimilarity: matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  *this = DissimilaritySpace(n, std::move(flat));
}

DissimilaritySpace DissimilaritySpace::constant(int n, double value) {
  std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), value);
  for (int v = 0; v < n; ++v) values[static_cast<std::size_t>(v) * (n + 1)] = 0.0;
  return DissimilaritySpace(n, std::move(values));
}

bool DissimilaritySpace::is_symmetric() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Tree

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InputError("tree: needs at least one vertex");
  if (edges_.size() != static_cast<std::size_t>(n - 1)) {
    throw InputError("tree: expected " + std::to_string(n - 1) + " edges, got " +
                     std::to_string(edges_.size()));
  }
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges_) {
    check_vertex(e.u, n, "tree edge");
    check_vertex(e.v, n, "tree edge");
    if (e.u == e.v) throw InputError("tree: self-loop at " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_ = csr_offsets(n, degree);
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto nb = std::vector<Vertex>(neighbors(v).begin(), neighbors(v).end());
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InputError("tree: duplicate edge at vertex " + std::to_string(v));
    }
  }
  // n-1 edges plus connectivity rules out cycles.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InputError("tree: graph is not connected");
}

std::vector<Vertex> Tree::path_between(Vertex u, Vertex v) const {
  check_vertex(u, n_, "path");
  check_vertex(v, n_, "path");
  std::vector<Vertex> parent(n_, -1);
  std::vector<Vertex> stack{v};
  parent[v] = v;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == u) break;
    for (Vertex w : neighbors(x)) {
      if (parent[w] < 0) {
        parent[w] = x;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{u};
  for (Vertex x = u; x != v;) {
    x = parent[x];
    path.push_back(x);
  }
  return path;
}

Tree path_tree(std::span<const Vertex> order) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.push_back({order[i], order[i + 1]});
  return Tree(static_cast<int>(order.size()), std::move(edges));
}

Tree star_tree(int n, Vertex center) {
  check_vertex(center, n, "star center");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (v != center) edges.push_back({center, v});
  return Tree(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// OrientedTree

OrientedTree::OrientedTree(Tree tree, std::vector<Direction> directions)
    : tree_(std::move(tree)), directions_(std::move(directions)) {
  if (directions_.size() != tree_.edges().size()) {
    throw InputError("orientation: one direction per edge required");
  }
  const int n = tree_.size();
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  for (std::size_t e = 0; e < directions_.size(); ++e) {
    const Arc a = arc(e);
    ++out_deg[a.from];
    ++in_deg[a.to];
  }
  out_offsets_ = csr_offsets(n, out_deg);
  in_offsets_ = csr_offsets(n, in_deg);
  out_.resize(directions_.size());
  in_.resize(directions_.size());
  std::vector<int> of(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<int> inf(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t e = 0; e < directions_.size(); ++e) {
    const Arc a = arc(e);
    out_[of[a.from]++] = a.to;
    in_[inf[a.to]++] = a.from;
  }
}

OrientedTree OrientedTree::from_arcs(int n, const std::vector<Arc>& arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const Arc& a : arcs) edges.push_back({a.from, a.to});
  return OrientedTree(Tree(n, std::move(edges)),
                      std::vector<Direction>(arcs.size(), Direction::Forward));
}

Arc OrientedTree::arc(std::size_t edge) const {
  const Edge& e = tree_.edges()[edge];
  return directions_[edge] == Direction::Forward ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

std::vector<Arc> OrientedTree::arcs() const {
  std::vector<Arc> result;
  result.reserve(directions_.size());
  for (std::size_t e = 0; e < directions_.size(); ++e) result.push_back(arc(e));
  return result;
}

// ---------------------------------------------------------------------------
// VertexOrder

VertexOrder::VertexOrder(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  auto sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) throw InputError("order: negative vertex index");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("order: repeated vertex");
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return VertexOrder(std::move(perm));
}

bool VertexOrder::is_permutation_of(int n) const {
  if (perm_.size() != static_cast<std::size_t>(n)) return false;
  return std::all_of(perm_.begin(), perm_.end(), [n](Vertex v) { return v < n; });
}

VertexOrder VertexOrder::reversed() const {
  return VertexOrder(std::vector<Vertex>(perm_.rbegin(), perm_.rend()));
}

std::vector<int> VertexOrder::positions(int n) const {
  if (!is_permutation_of(n)) throw InputError("order: not a permutation of 0..n-1");
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < perm_.size(); ++i) pos[perm_[i]] = static_cast<int>(i);
  return pos;
}

// ---------------------------------------------------------------------------
// Robinson order predicates

bool is_one_way_order(const DissimilaritySpace& d, std::span<const Vertex> p) {
  check_order_vertices(d, p);
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        if (d(p[i], p[l]) < std::max(d(p[i], p[j]), d(p[j], p[l]))) return false;
  return true;
}

bool is_one_way_order(const DissimilaritySpace& space, const VertexOrder& order) {
  return is_one_way_order(space, std::span<const Vertex>(order.perm()));
}

bool is_two_way_order(const DissimilaritySpace& space, std::span<const Vertex> order) {
  if (!is_one_way_order(space, order)) return false;
  std::vector<Vertex> rev(order.rbegin(), order.rend());
  return is_one_way_order(space, std::span<const Vertex>(rev));
}

bool is_two_way_order(const DissimilaritySpace& space, const VertexOrder& order) {
  return is_two_way_order(space, std::span<const Vertex>(order.perm()));
}

// ---------------------------------------------------------------------------
// Reachability and path counting

std::vector<std::pair<Vertex, Vertex>> reachability(const OrientedTree& ot) {
  const int n = ot.size();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    stack.assign(ot.successors(s).begin(), ot.successors(s).end());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      pairs.emplace_back(s, v);
      for (Vertex w : ot.successors(v)) stack.push_back(w);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::int64_t count_xi(const OrientedTree& ot) {
  const int n = ot.size();
  // Kahn order on the reversed arcs: a vertex is finished once all its
  // successors are, so reach[] can be accumulated sink-first.
  std::vector<int> pending(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(ot.successors(v).size());
    if (pending[v] == 0) ready.push_back(v);
  }
  std::vector<std::int64_t> reach(n, 0);
  std::int64_t total = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    for (Vertex w : ot.successors(v)) reach[v] += 1 + reach[w];
    total += reach[v];
    for (Vertex u : ot.predecessors(v))
      if (--pending[u] == 0) ready.push_back(u);
  }
  return total;
}

bool check_compatible(const DissimilaritySpace& d, const OrientedTree& ot) {
  const int n = ot.size();
  if (d.size() != n) throw InputError("check_compatible: space and tree sizes differ");

  // Every directed path extends backwards to a source, so a DFS from each
  // source covers them all. With p_0..p_t already Robinson, appending w keeps
  // it Robinson iff d(p_i, w) >= d(p_i, p_t) for i < t and d(p_i, w) is
  // nonincreasing in i.
  auto extends = [&](const std::vector<Vertex>& path, Vertex w) {
    const std::size_t t = path.size() - 1;
    for (std::size_t i = 0; i < t; ++i) {
      if (d(path[i], w) < d(path[i], path[t])) return false;
      if (d(path[i], w) < d(path[i + 1], w)) return false;
    }
    return true;
  };

  std::vector<Vertex> path;
  std::vector<std::size_t> next_child;
  for (Vertex s = 0; s < n; ++s) {
    if (!ot.predecessors(s).empty()) continue;
    path.assign(1, s);
    next_child.assign(1, 0);
    while (!path.empty()) {
      const Vertex v = path.back();
      const auto succ = ot.successors(v);
      if (next_child.back() == succ.size()) {
        path.pop_back();
        next_child.pop_back();
        continue;
      }
      const Vertex w = succ[next_child.back()++];
      if (!extends(path, w)) return false;
      path.push_back(w);
      next_child.push_back(0);
    }
  }
  return true;
}

}  // namespace robinson
