#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "starpoly/difference_sets.hpp"
#include "starpoly/gen_polygon.hpp"
#include "starpoly/graph.hpp"

using namespace starpoly;

namespace {

bool pds(std::vector<int> D, int k) { return is_perfect_difference_set(D, k); }

// Every k-subset of residues mod k^2-k+1, checked against the definition
// oracle. Small enough to be exhaustive for k <= 6 (C(31,6) = 736281).
std::vector<std::vector<int>> brute_force_pds(int k) {
  const int N = k * k - k + 1;
  std::vector<std::vector<int>> found;
  std::vector<int> pick(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == k) {
      if (oracles::is_pds(pick, k)) found.push_back(pick);
      return;
    }
    for (int v = from; v < N; ++v) {
      pick[static_cast<size_t>(depth)] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return found;
}

}  // namespace

TEST_SUITE("difference_sets") {

TEST_CASE("known sets and near misses") {
  CHECK(pds({1, 2, 4}, 3));
  CHECK(pds({3, 5, 6}, 3));
  CHECK(pds({0, 1, 3, 9}, 4));
  CHECK(pds({0, 1, 3}, 3));        // translate of {1,2,4} shifted by -1
  CHECK_FALSE(pds({0, 1, 2}, 3));  // difference 1 occurs twice
  CHECK_FALSE(pds({1, 2, 5}, 3));
  CHECK_FALSE(pds({0, 1, 2, 3}, 4));
  CHECK_FALSE(pds({0, 1, 3, 7}, 4));
}

TEST_CASE("entries reduce mod N before the check") {
  // mod 7: {8, 9, 11} = {1, 2, 4}
  CHECK(pds({8, 9, 11}, 3));
  CHECK(pds({-6, 2, 4}, 3));
  // reduction can collide two entries, which can never cover all differences
  CHECK_FALSE(pds({1, 2, 8}, 3));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(pds({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(pds({1, 2, 4, 5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(pds({0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(pds({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_perfect_difference_sets(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_perfect_difference_sets(7), std::invalid_argument);
}

TEST_CASE("translates and multipliers preserve the property") {
  const int k = 4, N = 13;
  std::vector<int> base{0, 1, 3, 9};
  for (int t = 0; t < N; ++t) {
    std::vector<int> shifted;
    for (int d : base) shifted.push_back((d + t) % N);
    CHECK(pds(shifted, k));
  }
  for (int u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    std::vector<int> scaled;
    for (int d : base) scaled.push_back((d * u) % N);
    CHECK(pds(scaled, k));
  }
}

TEST_CASE("enumeration matches brute force and is sorted") {
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    std::vector<std::vector<int>> got = enumerate_perfect_difference_sets(k);
    std::vector<std::vector<int>> want = brute_force_pds(k);
    CHECK(got == want);  // same sets, same lexicographic order
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (const auto& D : got) {
      CHECK(std::is_sorted(D.begin(), D.end()));
      CHECK(pds(D, k));
    }
  }
  // planes of prime-power order exist, so these are all nonempty
  CHECK(enumerate_perfect_difference_sets(2).size() == 3);  // all pairs mod 3
  CHECK(!enumerate_perfect_difference_sets(3).empty());
  CHECK(!enumerate_perfect_difference_sets(6).empty());
}

TEST_CASE("random non-sets are rejected") {
  std::mt19937 rng(20260817u);
  for (int k : {3, 4, 5}) {
    const int N = k * k - k + 1;
    std::uniform_int_distribution<int> pick(0, N - 1);
    int tried = 0;
    while (tried < 400) {
      std::vector<int> D;
      for (int i = 0; i < k; ++i) D.push_back(pick(rng));
      std::sort(D.begin(), D.end());
      if (std::adjacent_find(D.begin(), D.end()) != D.end()) continue;
      ++tried;
      CHECK(pds(D, k) == oracles::is_pds(D, k));
    }
  }
}

TEST_CASE("order-3 sets induce the Heawood graph") {
  Multigraph heawood = oracles::incidence_graph({1, 2, 4}, 7);
  for (const auto& D : enumerate_perfect_difference_sets(3)) {
    Multigraph g = oracles::incidence_graph(D, 7);
    CHECK(projective_plane_order(g) == 2);
    CHECK(graphs_isomorphic(g, heawood));
  }
}

TEST_CASE("induced incidence graphs are planes of order k-1") {
  for (int k = 3; k <= 5; ++k) {
    const int N = k * k - k + 1;
    for (const auto& D : enumerate_perfect_difference_sets(k))
      CHECK(projective_plane_order(oracles::incidence_graph(D, N)) == k - 1);
  }
}

}  // TEST_SUITE
