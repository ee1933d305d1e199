#include "robinson/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "robinson/recognition.hpp"

namespace robinson {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw RefusalError(what);
}

DissimilaritySpace relabel(const DissimilaritySpace& space, const std::vector<Vertex>& phi) {
  const int n = static_cast<int>(phi.size());
  std::vector<double> d(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(u) * n + v] = space(phi[u], phi[v]);
  return DissimilaritySpace(n, std::move(d));
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step.
    const std::uint64_t f = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / f) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * f / static_cast<std::uint64_t>(i);
  }
  return r;
}

BruteOrientation brute_optimal_orientation(const DissimilaritySpace& space, const Tree& tree) {
  const int n = tree.size();
  if (space.size() != n) throw InputError("brute_optimal_orientation: size mismatch");
  guard(n <= kMaxBruteOrientVertices,
        "brute_optimal_orientation: n = " + std::to_string(n) + " exceeds " +
            std::to_string(kMaxBruteOrientVertices));
  const int e = n - 1;
  BruteOrientation best;
  best.xi_max = -1;
  std::vector<Direction> dirs(static_cast<std::size_t>(e));
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    for (int b = 0; b < e; ++b) dirs[b] = (mask >> b) & 1u ? Direction::Backward : Direction::Forward;
    OrientedTree ot(tree, dirs);
    if (!check_compatible(space, ot)) continue;
    const std::int64_t xi = count_xi(ot);
    if (xi > best.xi_max) {
      best.xi_max = xi;
      best.witness = std::move(ot);
    }
  }
  // The all-forward orientation of a single edge or of any tree with n <= 2 is
  // always compatible, so some orientation was accepted.
  return best;
}

std::optional<VertexOrder> brute_two_way(const DissimilaritySpace& space) {
  const int n = space.size();
  guard(n <= kMaxBrutePermutation, "brute_two_way: n = " + std::to_string(n) + " exceeds " +
                                       std::to_string(kMaxBrutePermutation));
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_two_way_order(space, std::span<const Vertex>(perm))) return VertexOrder(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::vector<int>> brute_c1p(const BinaryMatrix& m) {
  guard(m.rows() <= kMaxBrutePermutation, "brute_c1p: " + std::to_string(m.rows()) +
                                              " rows exceed " +
                                              std::to_string(kMaxBrutePermutation));
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (columns_consecutive(m, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::vector<Vertex>> brute_robinson_subset(const DissimilaritySpace& space,
                                                         int kappa, std::uint64_t budget) {
  const int n = space.size();
  if (kappa < 0 || kappa > n) {
    throw InputError("brute_robinson_subset: kappa must lie in 0.." + std::to_string(n));
  }
  if (!space.is_symmetric()) {
    throw PreconditionError("brute_robinson_subset: dissimilarity must be symmetric");
  }
  const std::uint64_t total = binomial(n, kappa);
  guard(total <= budget, "brute_robinson_subset: " + std::to_string(total) +
                             " subsets exceed the budget of " + std::to_string(budget));

  const int r = n - kappa;
  // c holds removal positions counted from the top (point n-1-c[i]), in
  // colexicographic order.
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  std::vector<char> removed(static_cast<std::size_t>(n));
  std::vector<Vertex> keep;
  std::vector<double> sub;
  while (true) {
    std::fill(removed.begin(), removed.end(), 0);
    for (int x : c) removed[n - 1 - x] = 1;
    keep.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) keep.push_back(v);
    if (kappa <= 2) return keep;
    sub.assign(static_cast<std::size_t>(kappa) * kappa, 0.0);
    for (int a = 0; a < kappa; ++a)
      for (int b = 0; b < kappa; ++b) sub[static_cast<std::size_t>(a) * kappa + b] = space(keep[a], keep[b]);
    if (recognize_two_way(DissimilaritySpace(kappa, sub))) return keep;

    int i = 0;
    while (i < r && (i + 1 < r ? c[i] + 1 == c[i + 1] : c[i] + 1 == n)) ++i;
    if (i == r) break;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, std::vector<Vertex>>> brute_assign_star(
    const DissimilaritySpace& space, int in_count) {
  const int n = space.size();
  guard(n <= 9, "brute_assign_star: n = " + std::to_string(n) + " exceeds 9");
  if (in_count < 0 || in_count > n - 1) throw InputError("brute_assign_star: bad in-count");
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
      if (v != c) leaves.push_back(v);
    const int k = static_cast<int>(leaves.size());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (std::popcount(mask) != in_count) continue;
      std::vector<Arc> arcs;
      std::vector<Vertex> in_set;
      for (int b = 0; b < k; ++b) {
        if ((mask >> b) & 1u) {
          arcs.push_back({leaves[b], c});
          in_set.push_back(leaves[b]);
        } else {
          arcs.push_back({c, leaves[b]});
        }
      }
      if (check_compatible(space, OrientedTree::from_arcs(n, arcs))) {
        return std::make_pair(c, std::move(in_set));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> brute_assignment(const DissimilaritySpace& space,
                                                    const OrientedTree& shape) {
  const int n = space.size();
  if (shape.size() != n) throw InputError("brute_assignment: size mismatch");
  guard(n <= kMaxBrutePermutation, "brute_assignment: n = " + std::to_string(n) + " exceeds " +
                                       std::to_string(kMaxBrutePermutation));
  std::vector<Vertex> phi(static_cast<std::size_t>(n));
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (check_compatible(relabel(space, phi), shape)) return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

}  // namespace robinson
