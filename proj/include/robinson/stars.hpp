#pragma once

// Petals, optimal star orientation and star assignment for symmetric spaces.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

/// Neighbours of `center` grouped into the classes that every compatible
/// orientation must orient the same way. Each petal is sorted; petals are
/// ordered by smallest member.
struct PetalPartition {
  Vertex center = 0;
  std::vector<std::vector<Vertex>> petals;
};

/// Petal closure over an explicit neighbour list, seeded and scanned in the
/// given order. The result does not depend on that order.
PetalPartition petal_partition(const DissimilaritySpace& space, Vertex center,
                               std::span<const Vertex> neighbors);

/// Petals of `x` among its neighbours in `tree`. Requires a symmetric space.
PetalPartition petals(const DissimilaritySpace& space, const Tree& tree, Vertex x);

struct StarOrientation {
  OrientedTree orientation;
  std::int64_t xi = 0;
  Vertex center = 0;
  PetalPartition petals;
  std::vector<Vertex> in_leaves;  // leaves oriented towards the center, sorted
};

/// Optimal compatible orientation of the star `tree` centred at `center`.
StarOrientation orient_star(const DissimilaritySpace& space, const Tree& tree, Vertex center);

/// Tries every vertex as the center of K_{1,n-1}; keeps the first best.
StarOrientation best_star_orientation(const DissimilaritySpace& space);

struct StarAssignment {
  Vertex center = 0;
  std::vector<Vertex> in_set;   // sorted
  std::vector<Vertex> out_set;  // sorted
};

/// A center and a union of whole petals of size exactly `in_count`; centers
/// are tried in index order.
std::optional<StarAssignment> assign_star(const DissimilaritySpace& space, int in_count,
                                          int out_count);

/// The orientation of K_{1,n-1} induced by an assignment.
OrientedTree star_orientation_of(const StarAssignment& assignment, int n);

}  // namespace robinson
