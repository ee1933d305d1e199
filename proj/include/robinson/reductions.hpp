#pragma once

// Instance generators for the hardness reductions:
//   3-SAT              -> tree orientation with a path-count target,
//   Hamiltonian path   -> Robinson subset of a given size,
//   Robinson subset    -> assignment onto an oriented path.
// Each comes with the forward-direction witness where one exists.

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "robinson/core.hpp"

namespace robinson {

/// 3-CNF with DIMACS-style literals: +v / -v for variable v in 1..num_vars.
struct Cnf3 {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;  // assignment[v-1]
};

/// `p cnf n m` header, clauses terminated by 0; rejects clauses with != 3 literals.
Cnf3 parse_dimacs(std::istream& in);

struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;

  void validate() const;  // no loops, no multi-edges, endpoints in range
};

struct OrientationInstance {
  Cnf3 cnf;
  Tree tree;
  DissimilaritySpace space;
  std::int64_t kappa = 0;
  std::vector<std::string> roles;  // per vertex: y, x3, x3+5, x3-5, z2_7
};

/// Leaves per literal family of one variable: 7m + 2.
int sat_leaf_count(int clauses);
/// 1 + n + 2n(7m+2) + 7m.
std::int64_t sat_vertex_count(int vars, int clauses);
/// Path-count target of the reduction.
std::int64_t sat_kappa(int vars, int clauses);

/// Vertex numbering: y = 0; x_i = i; then per variable the + block and the
/// - block of 7m+2 leaves; then seven z vertices per clause.
struct SatLayout {
  int vars = 0;
  int clauses = 0;
  Vertex y() const { return 0; }
  Vertex x(int i) const { return i; }
  Vertex plus(int i, int k) const { return 1 + vars + (i - 1) * 2 * leaves() + (k - 1); }
  Vertex minus(int i, int k) const { return plus(i, k) + leaves(); }
  Vertex z(int j, int l) const { return 1 + vars + 2 * vars * leaves() + (j - 1) * 7 + (l - 1); }
  int leaves() const { return sat_leaf_count(clauses); }
};

/// Literal truth pattern of z_l, l = 1..7: which of the clause's three
/// literals are true. Row l-1 of this table.
extern const std::array<std::array<bool, 3>, 7> kClausePatterns;

/// Requires three distinct variables per clause.
OrientationInstance build_orientation_instance(const Cnf3& cnf);

/// The orientation a satisfying assignment induces; absent if the assignment
/// does not satisfy the formula. assignment[v-1] is the value of variable v.
std::optional<OrientedTree> witness_orientation(const OrientationInstance& inst,
                                                const std::vector<bool>& assignment);

/// For a satisfying assignment, the z pattern (1..7) chosen for clause j.
int clause_pattern(const std::array<int, 3>& clause, const std::vector<bool>& assignment);

struct SubsetInstance {
  SimpleGraph graph;
  DissimilaritySpace space;
  std::int64_t kappa = 0;
  std::vector<std::string> roles;  // x<i>^<k> or y<j>, 1-based
};

/// Points x_i^k (i <= n, k <= m+1) then y_j (j <= m); requires m >= 1.
SubsetInstance build_subset_instance(const SimpleGraph& g);

/// Path v_1 .. v_n oriented v_1 -> .. -> v_kappa, then alternating
/// v_kappa <- v_{kappa+1} -> v_{kappa+2} <- ... Only the size of `space` is used.
OrientedTree build_assignment_instance(const DissimilaritySpace& space, int kappa);

}  // namespace robinson
