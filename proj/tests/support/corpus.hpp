#pragma once

// Seeded instance generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "robinson/c1p.hpp"
#include "robinson/core.hpp"
#include "robinson/reductions.hpp"

namespace robinson::testing {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

/// Uniform labelled tree via a random Pruefer sequence.
Tree random_tree(int n, Rng& rng);
/// Decodes a Pruefer sequence of length n-2.
Tree tree_from_pruefer(int n, const std::vector<int>& seq);
/// One representative per isomorphism class of trees on n vertices.
std::vector<Tree> all_tree_shapes(int n);
/// One representative per isomorphism class of connected graphs on n <= 6 vertices.
std::vector<SimpleGraph> all_connected_graphs(int n);

/// Off-diagonal entries drawn uniformly from {1..levels}.
DissimilaritySpace random_space(int n, int levels, Rng& rng);
DissimilaritySpace random_symmetric_space(int n, int levels, Rng& rng);
/// Two-way Robinson by construction: points on a line in a hidden order,
/// each direction a separate nondecreasing step function of the gap; labels
/// shuffled.
DissimilaritySpace planted_two_way(int n, int levels, Rng& rng, bool symmetric = false);
/// Copy of `space` with one off-diagonal entry (and its mirror if
/// `symmetric`) replaced by a random value in {1..levels}.
DissimilaritySpace perturb(const DissimilaritySpace& space, int levels, Rng& rng, bool symmetric);

/// Random column intervals over a hidden row order, rows shuffled.
BinaryMatrix planted_c1p(int rows, int cols, Rng& rng);
BinaryMatrix random_binary(int rows, int cols, Rng& rng);

/// True iff some Hamiltonian path exists (permutation scan).
bool has_hamiltonian_path(const SimpleGraph& g);

/// Naive eta: largest j with x_i..x_j one-way-Robinson, 1-based, index 0 unused.
std::vector<int> naive_eta(const DissimilaritySpace& space, const VertexOrder& order);

/// Positions of `members` in `order` form one contiguous block.
bool is_interval(const std::vector<int>& positions, const std::vector<Vertex>& members);

}  // namespace robinson::testing
