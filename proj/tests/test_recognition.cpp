#include "doctest.h"

#include "robinson/oracle.hpp"
#include "robinson/recognition.hpp"
#include "support/corpus.hpp"

using namespace robinson;
using robinson::testing::Rng;
using robinson::testing::uniform_int;

namespace {

const DissimilaritySpace kSym3({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
const DissimilaritySpace kAsym3({{0, 1, 2}, {1, 0, 1}, {0.5, 1, 0}});

}  // namespace

TEST_SUITE("recognition") {

TEST_CASE("segments") {
  CHECK(segment(DissimilaritySpace::constant(2), 0, 1).members == std::vector<Vertex>{0, 1});
  CHECK(segment(kSym3, 0, 2).members == std::vector<Vertex>{0, 1, 2});
  CHECK(segment(kSym3, 0, 1).members == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(segment(kSym3, 1, 1), InputError);
  CHECK_THROWS_AS(segment(kSym3, 0, 3), InputError);
}

TEST_CASE("segment matrix") {
  const auto two = build_segment_matrix(DissimilaritySpace::constant(2));
  CHECK(two.matrix.rows() == 2);
  CHECK(two.matrix.cols() == 2);
  for (int c = 0; c < 2; ++c) CHECK(two.matrix.column_support(c) == std::vector<int>{0, 1});

  const auto c3 = build_segment_matrix(DissimilaritySpace::constant(3));
  CHECK(c3.matrix.cols() == 6);
  for (int c = 0; c < 6; ++c) CHECK(c3.matrix.column_support(c).size() == 3);

  const auto s = build_segment_matrix(kSym3);
  for (int c = 0; c < s.matrix.cols(); ++c) {
    const auto [x, y] = s.columns[c];
    const auto support = s.matrix.column_support(c);
    if ((x == 0 && y == 2) || (x == 2 && y == 0)) CHECK(support.size() == 3);
    else CHECK(support.size() == 2);
  }
  CHECK_THROWS_AS(build_segment_matrix(DissimilaritySpace::constant(1)), InputError);
}

TEST_CASE("segment matrix columns come in equal pairs") {
  Rng rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const auto d = robinson::testing::random_space(uniform_int(rng, 2, 6), 3, rng);
    const auto sm = build_segment_matrix(d);
    for (int c = 0; c < sm.matrix.cols(); ++c) {
      const auto [x, y] = sm.columns[c];
      for (int c2 = 0; c2 < sm.matrix.cols(); ++c2)
        if (sm.columns[c2] == std::pair{y, x}) CHECK(sm.matrix.column_support(c) == sm.matrix.column_support(c2));
    }
  }
}

TEST_CASE("recognition examples") {
  CHECK(recognize_two_way(DissimilaritySpace::constant(1)));
  CHECK(recognize_two_way(DissimilaritySpace({{0, 5}, {1, 0}})));
  const auto r = recognize_two_way(kSym3);
  REQUIRE(r);
  CHECK((r->order.perm() == std::vector<Vertex>{0, 1, 2} || r->order.perm() == std::vector<Vertex>{2, 1, 0}));
  CHECK(brute_two_way(kSym3));
  CHECK_FALSE(recognize_two_way(kAsym3));
  CHECK_FALSE(brute_two_way(kAsym3));
}

TEST_CASE("orders from the tree pass the two-way check") {
  Rng rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = uniform_int(rng, 3, 12);
    const auto d = robinson::testing::planted_two_way(n, 4, rng, rep % 3 == 0);
    const auto r = recognize_two_way(d);
    REQUIRE(r);
    CHECK(is_two_way_order(d, r->order));
    if (n <= 7) {
      for (const auto& o : r->tree.enumerate_frontiers()) CHECK(is_two_way_order(d, VertexOrder(o)));
    }
  }
}

}  // TEST_SUITE
