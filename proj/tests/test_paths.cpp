#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "robinson/oracle.hpp"
#include "robinson/paths.hpp"
#include "support/corpus.hpp"

using namespace robinson;
using robinson::testing::Rng;
using robinson::testing::uniform_int;

TEST_SUITE("paths") {

TEST_CASE("eta examples") {
  std::vector<std::vector<double>> rows(6, std::vector<double>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) rows[a][b] = std::abs(a - b);
  const auto line = eta_table(DissimilaritySpace(rows), VertexOrder::identity(6));
  CHECK(line.compressed == std::vector<std::pair<int, int>>{{1, 6}});
  for (int i = 1; i < 6; ++i) CHECK(line.eta(i) == 6);

  const DissimilaritySpace dip({{0, 1, 0.5}, {1, 0, 1}, {0.5, 1, 0}});
  const auto e = eta_table(dip, VertexOrder::identity(3));
  CHECK(e.eta(1) == 2);
  CHECK(e.eta(2) == 3);

  CHECK(eta_table(DissimilaritySpace::constant(2), VertexOrder::identity(2)).eta(1) == 2);
  CHECK_THROWS_AS(eta_table(DissimilaritySpace({{0, 1}, {2, 0}}), VertexOrder::identity(2)), PreconditionError);
  CHECK_THROWS_AS(eta_table(DissimilaritySpace::constant(3), VertexOrder::identity(2)), InputError);
}

TEST_CASE("path orientation examples") {
  const auto full = path_orientation(DissimilaritySpace::constant(4), VertexOrder::identity(4));
  CHECK(full.xi == 6);
  CHECK(full.orientation.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});

  const DissimilaritySpace d({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
  const auto r = path_orientation(d, VertexOrder::identity(4));
  CHECK(r.eta.eta(1) == 3);
  CHECK(r.eta.eta(2) == 4);
  CHECK(r.tables.m(1, 4) == 4);
  CHECK(r.xi == 4);
  CHECK(check_compatible(d, r.orientation));
  CHECK(brute_optimal_orientation(d, path_tree(VertexOrder::identity(4).perm())).xi_max == 4);

  CHECK(path_orientation(DissimilaritySpace::constant(2), VertexOrder::identity(2)).xi == 1);
  CHECK(path_orientation(DissimilaritySpace::constant(1), VertexOrder::identity(1)).xi == 0);
}

TEST_CASE("tables, runs and eta against references") {
  Rng rng(41);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = uniform_int(rng, 1, 30);
    const auto d = robinson::testing::random_symmetric_space(n, 1 + rep % 5, rng);
    std::vector<Vertex> o(n);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    const VertexOrder order(o);
    const auto r = path_orientation(d, order);
    const auto naive = robinson::testing::naive_eta(d, order);
    for (int i = 1; i < n; ++i) {
      CHECK(r.eta.eta(i) == naive[i]);
      CHECK(r.eta.eta(i) >= i + 1);
      if (i > 1) CHECK(r.eta.eta(i - 1) <= r.eta.eta(i));
    }
    if (n >= 2) {
      CHECK(r.eta.compressed.front().first == 1);
      CHECK(r.eta.compressed.back().second == n);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto m = r.tables.m(i, j);
        CHECK(m >= j - i);
        CHECK(m <= static_cast<std::int64_t>(j - i + 1) * (j - i) / 2);
        const int k = r.tables.p(i, j);
        if (k == 0) CHECK(j <= r.eta.eta(i));
        else {
          CHECK(i < k);
          CHECK(k < j);
          CHECK(m == r.tables.m(i, k) + r.tables.m(k, j));
        }
      }
    CHECK(check_compatible(d, r.orientation));
    CHECK(count_xi(r.orientation) == r.xi);
    CHECK(path_orientation(d, order, true).xi == r.xi);
  }
}

}  // TEST_SUITE
