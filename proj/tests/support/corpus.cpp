#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace robinson::testing {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Tree tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n == 1) return Tree(1, {});
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (int v : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--degree[v] == 1) leaves.push(v);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree(n, std::move(edges));
}

Tree random_tree(int n, Rng& rng) {
  std::vector<int> seq(n > 2 ? n - 2 : 0);
  for (int& v : seq) v = uniform_int(rng, 0, n - 1);
  return tree_from_pruefer(n, seq);
}

namespace {

std::string encode(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex w : t.neighbors(v))
    if (w != parent) parts.push_back(encode(t, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

std::string canonical(const Tree& t) {
  const int n = t.size();
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string s = encode(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Tree> all_tree_shapes(int n) {
  if (n <= 2) {
    std::vector<Edge> edges;
    if (n == 2) edges.push_back({0, 1});
    return {Tree(n, edges)};
  }
  std::set<std::string> seen;
  std::vector<Tree> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Tree t = tree_from_pruefer(n, seq);
    if (seen.insert(canonical(t)).second) out.push_back(std::move(t));
    int i = 0;
    while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
    if (i == n - 2) break;
    ++seq[i];
  }
  return out;
}

std::vector<SimpleGraph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int p = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  for (int e = 0; e < p; ++e) {
    index[pairs[e].first][pairs[e].second] = e;
    index[pairs[e].second][pairs[e].first] = e;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    // connectivity
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    int parts = n;
    for (int e = 0; e < p; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const int a = find(pairs[e].first), b = find(pairs[e].second);
      if (a != b) {
        comp[a] = b;
        --parts;
      }
    }
    if (parts != 1) continue;
    std::uint32_t canon = UINT32_MAX;
    for (const auto& q : perms) {
      std::uint32_t img = 0;
      for (int e = 0; e < p; ++e)
        if ((mask >> e) & 1u) img |= 1u << index[q[pairs[e].first]][q[pairs[e].second]];
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    SimpleGraph g;
    g.n = n;
    for (int e = 0; e < p; ++e)
      if ((mask >> e) & 1u) g.edges.push_back({pairs[e].first, pairs[e].second});
    out.push_back(std::move(g));
  }
  return out;
}

DissimilaritySpace random_space(int n, int levels, Rng& rng) {
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) d[static_cast<std::size_t>(x) * n + y] = uniform_int(rng, 1, levels);
  return DissimilaritySpace(n, std::move(d));
}

DissimilaritySpace random_symmetric_space(int n, int levels, Rng& rng) {
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double v = uniform_int(rng, 1, levels);
      d[static_cast<std::size_t>(x) * n + y] = v;
      d[static_cast<std::size_t>(y) * n + x] = v;
    }
  return DissimilaritySpace(n, std::move(d));
}

DissimilaritySpace planted_two_way(int n, int levels, Rng& rng, bool symmetric) {
  std::vector<int> hidden(n);
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  std::vector<int> pos(n);
  int at = 0;
  for (int i = 0; i < n; ++i) {
    at += i == 0 ? 0 : uniform_int(rng, 0, 2);
    pos[hidden[i]] = at;
  }
  auto steps = [&] {
    std::vector<double> f(static_cast<std::size_t>(at) + 1);
    int v = uniform_int(rng, 1, std::max(1, levels / 2));
    for (auto& x : f) {
      if (uniform_int(rng, 0, 1) == 1 && v < levels) ++v;
      x = v;
    }
    return f;
  };
  const auto fwd = steps();
  const auto bwd = symmetric ? fwd : steps();
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[hidden[i]] = i;
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int gap = std::abs(pos[x] - pos[y]);
      d[static_cast<std::size_t>(x) * n + y] = rank[x] < rank[y] ? fwd[gap] : bwd[gap];
    }
  return DissimilaritySpace(n, std::move(d));
}

DissimilaritySpace perturb(const DissimilaritySpace& space, int levels, Rng& rng, bool symmetric) {
  const int n = space.size();
  std::vector<double> d(space.values().begin(), space.values().end());
  if (n < 2) return space;
  const int x = uniform_int(rng, 0, n - 1);
  int y = uniform_int(rng, 0, n - 2);
  if (y >= x) ++y;
  const double v = uniform_int(rng, 1, levels);
  d[static_cast<std::size_t>(x) * n + y] = v;
  if (symmetric) d[static_cast<std::size_t>(y) * n + x] = v;
  return DissimilaritySpace(n, std::move(d));
}

BinaryMatrix planted_c1p(int rows, int cols, Rng& rng) {
  std::vector<int> hidden(rows);
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  BinaryMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    int a = uniform_int(rng, 0, rows - 1), b = uniform_int(rng, 0, rows - 1);
    if (a > b) std::swap(a, b);
    for (int i = a; i <= b; ++i) m.set(hidden[i], c, true);
  }
  return m;
}

BinaryMatrix random_binary(int rows, int cols, Rng& rng) {
  BinaryMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.4);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

bool has_hamiltonian_path(const SimpleGraph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n && ok; ++i) ok = adj[perm[i]][perm[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<int> naive_eta(const DissimilaritySpace& space, const VertexOrder& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> eta(static_cast<std::size_t>(std::max(n, 1)), 0);
  const auto& p = order.perm();
  for (int i = 1; i < n; ++i) {
    int j = i + 1;
    while (j + 1 <= n &&
           is_one_way_order(space, std::span<const Vertex>(p.data() + (i - 1), j + 1 - i + 1)))
      ++j;
    eta[i] = j;
  }
  return eta;
}

bool is_interval(const std::vector<int>& positions, const std::vector<Vertex>& members) {
  if (members.empty()) return true;
  int lo = positions[members.front()], hi = lo;
  for (Vertex v : members) {
    lo = std::min(lo, positions[v]);
    hi = std::max(hi, positions[v]);
  }
  return hi - lo + 1 == static_cast<int>(members.size());
}

}  // namespace robinson::testing
