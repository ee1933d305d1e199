#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "robinson/c1p.hpp"
#include "robinson/oracle.hpp"
#include "support/corpus.hpp"

using namespace robinson;
using robinson::testing::Rng;
using robinson::testing::uniform_int;

namespace {

std::vector<std::vector<int>> all_valid_orders(const BinaryMatrix& m) {
  std::vector<int> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do
    if (columns_consecutive(m, perm)) out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_SUITE("c1p") {

TEST_CASE("identity matrix keeps the universal tree") {
  BinaryMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, true);
  const auto t = test_c1p(id);
  REQUIRE(t);
  CHECK(t->node(t->root()).kind == PQKind::P);
  CHECK(t->enumerate_frontiers().size() == 24);
}

TEST_CASE("triangle of pairs has no consecutive arrangement") {
  const BinaryMatrix m({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
  CHECK_FALSE(test_c1p(m));
  CHECK_FALSE(brute_c1p(m));
}

TEST_CASE("all-ones matrix admits every order") {
  const BinaryMatrix m({{1, 1}, {1, 1}, {1, 1}});
  const auto t = test_c1p(m);
  REQUIRE(t);
  CHECK(t->enumerate_frontiers().size() == 6);
}

TEST_CASE("frontier of trivial trees") {
  CHECK(frontier(PQTree(1)).perm() == std::vector<Vertex>{0});
  CHECK(frontier(PQTree(3)).perm() == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("reduce sequence builds the expected Q-node") {
  PQTree t(4);
  std::vector<int> a{0, 1}, b{1, 2}, c{2, 3};
  CHECK(t.reduce(a));
  CHECK(t.reduce(b));
  CHECK(t.reduce(c));
  t.validate();
  const auto fr = t.enumerate_frontiers();
  CHECK(fr == std::vector<std::vector<int>>{{0, 1, 2, 3}, {3, 2, 1, 0}});
  std::vector<int> bad{0, 3};
  CHECK_FALSE(t.reduce(bad));
  CHECK_THROWS_AS(t.reduce(bad), InternalError);
}

TEST_CASE("rows must be positive") {
  CHECK_THROWS_AS(test_c1p(BinaryMatrix(0, 2)), InputError);
}

TEST_CASE("frontier set equals the valid orders on small matrices") {
  Rng rng(101);
  for (int rep = 0; rep < 600; ++rep) {
    const int rows = uniform_int(rng, 1, 6);
    const int cols = uniform_int(rng, 0, 8);
    const BinaryMatrix m = rep % 2 ? robinson::testing::planted_c1p(rows, cols, rng)
                                   : robinson::testing::random_binary(rows, cols, rng);
    const auto valid = all_valid_orders(m);
    const auto t = test_c1p(m);
    REQUIRE(t.has_value() == !valid.empty());
    if (!t) continue;
    t->validate();
    const auto fr = t->enumerate_frontiers();
    CHECK(fr == valid);
    CHECK(columns_consecutive(m, frontier(*t).perm()));
    for (const auto& o : fr) {
      std::vector<int> r(o.rbegin(), o.rend());
      CHECK(std::binary_search(fr.begin(), fr.end(), r));
    }
  }
}

}  // TEST_SUITE
