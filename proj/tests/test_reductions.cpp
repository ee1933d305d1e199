#include "doctest.h"

#include <sstream>

#include "robinson/oracle.hpp"
#include "robinson/recognition.hpp"
#include "robinson/reductions.hpp"
#include "support/corpus.hpp"

using namespace robinson;
using robinson::testing::Rng;
using robinson::testing::uniform_int;

namespace {

Cnf3 single_clause() { return Cnf3{3, {{1, 2, 3}}}; }

Cnf3 random_cnf(int n, int m, Rng& rng) {
  Cnf3 cnf{n, {}};
  for (int j = 0; j < m; ++j) {
    std::vector<int> vars(n);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::array<int, 3> c{};
    for (int p = 0; p < 3; ++p) c[p] = rng() & 1 ? vars[p] : -vars[p];
    cnf.clauses.push_back(c);
  }
  return cnf;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("dimacs parsing") {
  std::istringstream ok("c demo\np cnf 3 2\n1 -2 3 0\n-1\n2 3 0\n%\n0\n");
  const auto cnf = parse_dimacs(ok);
  CHECK(cnf.num_vars == 3);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[1] == std::array<int, 3>{-1, 2, 3});

  std::istringstream two("p cnf 3 1\n1 2 0\n");
  CHECK_THROWS_AS(parse_dimacs(two), InputError);
  std::istringstream range("p cnf 2 1\n1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(range), InputError);
  std::istringstream count("p cnf 3 2\n1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(count), InputError);
  std::istringstream header("1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(header), InputError);
}

TEST_CASE("orientation instance sizes and values") {
  const auto inst = build_orientation_instance(single_clause());
  CHECK(inst.tree.size() == 65);
  CHECK(inst.tree.edges().size() == 64);
  CHECK(inst.kappa == 7 + 15 + 42 + 3 * 81 + 3 + 27 + 27 + 6);
  CHECK(inst.kappa == 370);
  CHECK(inst.space.is_symmetric());
  for (const Edge& e : inst.tree.edges()) {
    CHECK(inst.space(e.u, e.v) == 2);
    CHECK(inst.space(e.v, e.u) == 2);
  }
  for (double v : inst.space.values()) CHECK((v == 0 || v == 1 || v == 2));
  CHECK(inst.roles[0] == "y");
  CHECK(inst.roles[1] == "x1");
  CHECK(inst.roles[4] == "x1+1");
  CHECK(inst.roles[64] == "z1_7");
  CHECK_THROWS_AS(build_orientation_instance(Cnf3{3, {{1, -1, 2}}}), InputError);
}

TEST_CASE("size formulas on random formulas") {
  Rng rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = uniform_int(rng, 3, 5), m = uniform_int(rng, 1, 3);
    const auto inst = build_orientation_instance(random_cnf(n, m, rng));
    const int leaves = 7 * m + 2;
    CHECK(inst.tree.size() == 1 + n + 2 * n * leaves + 7 * m);
    CHECK(inst.kappa == 7 * m + 5 * n + 14 * n * m + n * leaves * leaves + n * m + n * leaves +
                            n * m * leaves + 6 * m * m);
  }
}

TEST_CASE("witness orientation") {
  const auto inst = build_orientation_instance(single_clause());
  const auto w = witness_orientation(inst, {true, false, false});
  REQUIRE(w);
  CHECK(check_compatible(inst.space, *w));
  CHECK(count_xi(*w) == inst.kappa);
  CHECK(count_xi(*w) == static_cast<std::int64_t>(reachability(*w).size()));
  CHECK_FALSE(witness_orientation(inst, {false, false, false}));
  CHECK(clause_pattern({1, 2, 3}, {true, true, true}) == 7);
  CHECK(clause_pattern({1, 2, 3}, {true, false, false}) == 1);
  CHECK(clause_pattern({-1, 2, 3}, {true, false, false}) == 0);
  CHECK_THROWS_AS(witness_orientation(inst, {true}), InputError);
}

TEST_CASE("subset instance examples") {
  const auto one = build_subset_instance(SimpleGraph{2, {{0, 1}}});
  CHECK(one.space.size() == 5);
  CHECK(one.kappa == 5);
  CHECK(one.roles[4] == "y1");
  // x1^1 < x1^2 < y1 < x2^1 < x2^2
  CHECK(is_two_way_order(one.space, VertexOrder({0, 1, 4, 2, 3})));

  const auto p3 = build_subset_instance(SimpleGraph{3, {{0, 1}, {1, 2}}});
  CHECK(p3.space.size() == 11);
  CHECK(p3.kappa == 11);
  CHECK(recognize_two_way(p3.space));

  const auto k13 = build_subset_instance(SimpleGraph{4, {{0, 1}, {0, 2}, {0, 3}}});
  CHECK(k13.kappa == 19);
  CHECK(k13.space.size() == 19);
  CHECK_FALSE(recognize_two_way(k13.space));
  CHECK_FALSE(brute_robinson_subset(k13.space, 19));

  CHECK_THROWS_AS(build_subset_instance(SimpleGraph{2, {}}), InputError);
  CHECK_THROWS_AS(build_subset_instance(SimpleGraph{2, {{0, 1}, {1, 0}}}), InputError);
}

TEST_CASE("assignment instance shapes") {
  const auto s5 = DissimilaritySpace::constant(5);
  CHECK(build_assignment_instance(s5, 5).arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(build_assignment_instance(s5, 3).arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {3, 2}, {3, 4}});
  const auto s6 = build_assignment_instance(DissimilaritySpace::constant(6), 3);
  CHECK(s6.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {3, 2}, {3, 4}, {5, 4}});
  for (Vertex v = 2; v < 6; ++v)
    for (Vertex w : s6.successors(v)) CHECK(s6.successors(w).empty());
  CHECK_THROWS_AS(build_assignment_instance(s5, 0), InputError);
  CHECK_THROWS_AS(build_assignment_instance(s5, 6), InputError);
}

TEST_CASE("assignment instance is equivalent to a Robinson subset") {
  Rng rng(47);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = uniform_int(rng, 3, 6);
    const int kappa = uniform_int(rng, 1, n);
    const auto d = rep % 2 ? robinson::testing::random_symmetric_space(n, 3, rng)
                           : robinson::testing::planted_two_way(n, 3, rng, true);
    const bool subset = brute_robinson_subset(d, kappa).has_value();
    const bool assignment = brute_assignment(d, build_assignment_instance(d, kappa)).has_value();
    CHECK(subset == assignment);
  }
}

}  // TEST_SUITE
