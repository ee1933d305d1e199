#include "robinson/stars.hpp"

#include <algorithm>
#include <string>

#include "robinson/uniform_orient.hpp"

namespace robinson {

namespace {

void require_symmetric(const DissimilaritySpace& space, const char* who) {
  if (!space.is_symmetric()) {
    throw PreconditionError(std::string(who) + ": dissimilarity must be symmetric");
  }
}

std::vector<int> petal_sizes(const PetalPartition& pp) {
  std::vector<int> sizes;
  for (const auto& petal : pp.petals) sizes.push_back(static_cast<int>(petal.size()));
  return sizes;
}

// Exact subset-sum over petal sizes; returns chosen petal indices.
std::optional<std::vector<int>> exact_subset(const std::vector<int>& sizes, int target) {
  const int p = static_cast<int>(sizes.size());
  // reachable[j][s]: sum s attainable with the first j petals.
  std::vector<std::vector<char>> reachable(p + 1, std::vector<char>(target + 1, 0));
  reachable[0][0] = 1;
  for (int j = 1; j <= p; ++j) {
    for (int s = 0; s <= target; ++s) {
      reachable[j][s] = reachable[j - 1][s] ||
                        (s >= sizes[j - 1] && reachable[j - 1][s - sizes[j - 1]]);
    }
  }
  if (!reachable[p][target]) return std::nullopt;
  std::vector<int> chosen;
  for (int j = p, s = target; j >= 1; --j) {
    if (!reachable[j - 1][s]) {
      chosen.push_back(j - 1);
      s -= sizes[j - 1];
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

PetalPartition petal_partition(const DissimilaritySpace& d, Vertex x,
                               std::span<const Vertex> neighbors) {
  std::vector<Vertex> remaining(neighbors.begin(), neighbors.end());
  PetalPartition out{x, {}};
  while (!remaining.empty()) {
    std::vector<Vertex> petal{remaining.front()};
    std::vector<char> taken(remaining.size(), 0);
    taken[0] = 1;
    // The petal grows while it is scanned.
    for (std::size_t zi = 0; zi < petal.size(); ++zi) {
      const Vertex z = petal[zi];
      for (std::size_t ti = 0; ti < remaining.size(); ++ti) {
        const Vertex t = remaining[ti];
        if (!taken[ti] && d(t, z) < std::max(d(x, t), d(x, z))) {
          taken[ti] = 1;
          petal.push_back(t);
        }
      }
    }
    std::vector<Vertex> rest;
    for (std::size_t ti = 0; ti < remaining.size(); ++ti)
      if (!taken[ti]) rest.push_back(remaining[ti]);
    remaining = std::move(rest);
    std::sort(petal.begin(), petal.end());
    out.petals.push_back(std::move(petal));
  }
  std::sort(out.petals.begin(), out.petals.end());
  return out;
}

PetalPartition petals(const DissimilaritySpace& space, const Tree& tree, Vertex x) {
  require_symmetric(space, "petals");
  if (space.size() != tree.size()) throw InputError("petals: size mismatch");
  if (x < 0 || x >= tree.size()) throw InputError("petals: vertex out of range");
  return petal_partition(space, x, tree.neighbors(x));
}

StarOrientation orient_star(const DissimilaritySpace& space, const Tree& tree, Vertex center) {
  const int n = tree.size();
  if (space.size() != n) throw InputError("orient_star: size mismatch");
  if (center < 0 || center >= n) throw InputError("orient_star: center out of range");
  if (tree.degree(center) != n - 1) {
    throw InputError("orient_star: tree is not a star centred at " + std::to_string(center));
  }
  require_symmetric(space, "orient_star");

  StarOrientation out;
  out.center = center;
  out.petals = petal_partition(space, center, tree.neighbors(center));
  const std::vector<int> sizes = petal_sizes(out.petals);
  const NeighborPartition split = optimal_partition_of_neighbors(sizes, n);

  std::vector<char> inward(n, 0);
  for (int idx : split.chosen)
    for (Vertex v : out.petals.petals[idx]) {
      inward[v] = 1;
      out.in_leaves.push_back(v);
    }
  std::sort(out.in_leaves.begin(), out.in_leaves.end());

  std::vector<Direction> dirs;
  for (const Edge& e : tree.edges()) {
    const Vertex leaf = e.u == center ? e.v : e.u;
    const Vertex from = inward[leaf] ? leaf : center;
    dirs.push_back(from == e.u ? Direction::Forward : Direction::Backward);
  }
  out.orientation = OrientedTree(tree, std::move(dirs));
  out.xi = count_xi(out.orientation);
  return out;
}

StarOrientation best_star_orientation(const DissimilaritySpace& space) {
  const int n = space.size();
  if (n < 1) throw InputError("best_star_orientation: empty space");
  std::optional<StarOrientation> best;
  for (Vertex c = 0; c < n; ++c) {
    StarOrientation candidate = orient_star(space, star_tree(n, c), c);
    if (!best || candidate.xi > best->xi) best = std::move(candidate);
  }
  return std::move(*best);
}

std::optional<StarAssignment> assign_star(const DissimilaritySpace& space, int in_count,
                                          int out_count) {
  const int n = space.size();
  if (in_count < 0 || out_count < 0 || in_count + out_count != n - 1) {
    throw InputError("assign_star: in + out must equal n - 1");
  }
  require_symmetric(space, "assign_star");

  std::vector<Vertex> leaves;
  for (Vertex c = 0; c < n; ++c) {
    leaves.clear();
    for (Vertex v = 0; v < n; ++v)
      if (v != c) leaves.push_back(v);
    const PetalPartition pp = petal_partition(space, c, leaves);
    const auto chosen = exact_subset(petal_sizes(pp), in_count);
    if (!chosen) continue;

    StarAssignment a{c, {}, {}};
    std::vector<char> inward(n, 0);
    for (int idx : *chosen)
      for (Vertex v : pp.petals[idx]) inward[v] = 1;
    for (Vertex v : leaves) (inward[v] ? a.in_set : a.out_set).push_back(v);
    return a;
  }
  return std::nullopt;
}

OrientedTree star_orientation_of(const StarAssignment& assignment, int n) {
  std::vector<Arc> arcs;
  for (Vertex v : assignment.in_set) arcs.push_back({v, assignment.center});
  for (Vertex v : assignment.out_set) arcs.push_back({assignment.center, v});
  return OrientedTree::from_arcs(n, arcs);
}

}  // namespace robinson
