#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tww/generators.hpp"
#include "tww/modular.hpp"
#include "tww/permgraph.hpp"

using namespace tww;

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Realiser p4_realiser() { return Realiser{{1, 2, 3, 4}, {2, 4, 1, 3}}; }

void check_round_trip(const Graph& g, bool expect_perm) {
  auto r = compute_realiser(g);
  REQUIRE(r.has_value() == expect_perm);
  if (!r) return;
  CHECK(is_valid_realiser(*r));
  CHECK(graph_from_realiser(*r) == g);
  CHECK(realises(*r, g));
  CHECK(graph_from_realiser(reverse_tau(*r)) == complement(g));
  CHECK(count_crossings(*r) == static_cast<long long>(g.size()));
  if (g.order() == 0) return;
  MDTree t = modular_decomposition(g);
  for (int x = 0; x < static_cast<int>(t.nodes.size()); ++x) {
    auto l = t.leaves(x);
    CHECK(is_common_interval_module(g, *r, l, true));
  }
}

}  // namespace

TEST_CASE("graph_from_realiser examples") {
  Realiser id{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}};
  CHECK(graph_from_realiser(id).size() == 0);
  Realiser rev{{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}};
  CHECK(graph_from_realiser(rev) == named::complete(5));
  // inversions: (0,2) (1,2) (1,3)
  Graph p = graph_from_realiser(p4_realiser());
  CHECK(p == Graph(4, std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}}));
  CHECK(testing::brute_is_permutation(p));
}

TEST_CASE("compute_realiser examples") {
  check_round_trip(named::path(4), true);
  check_round_trip(named::cycle(5), false);
  CHECK_FALSE(testing::brute_is_permutation(named::cycle(5)));
  Realiser c4r{{1, 2, 3, 4}, {3, 4, 1, 2}};
  CHECK(graph_from_realiser(c4r).size() == 4);
  check_round_trip(named::cycle(4), true);
  check_round_trip(Graph(0), true);
  check_round_trip(Graph(1), true);
}

TEST_CASE("compute_realiser agrees with brute force on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    testing::for_each_labelled_graph(n, [](const Graph& g) { check_round_trip(g, testing::brute_is_permutation(g)); });
}

TEST_CASE("compute_realiser on random 7-vertex graphs and large realiser graphs") {
  Rng rng(31);
  for (int it = 0; it < 400; ++it) {
    Graph g = random_graph(7, 0.5, rng);
    check_round_trip(g, testing::brute_is_permutation(g));
  }
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 500);
    Graph g = random_realiser_graph(n, rng);
    auto r = compute_realiser(g);
    REQUIRE(r);
    CHECK(graph_from_realiser(*r) == g);
    CHECK(graph_from_realiser(reverse_tau(*r)) == complement(g));
  }
}

TEST_CASE("extremal vertices") {
  CHECK(extremal_vertices(Realiser{{1}, {1}}) == std::vector<int>{0});
  CHECK(extremal_vertices(Realiser{{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}}) == std::vector<int>{0, 4});
  CHECK(extremal_vertices(p4_realiser()) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("extremal set is invariant under the diagram symmetries of a prime realiser") {
  Rng rng(12);
  int primes = 0;
  for (int it = 0; it < 1000; ++it) {
    Graph g = random_realiser_graph(4 + static_cast<int>(rng() % 10), rng);
    if (!testing::brute_is_prime(g)) continue;
    ++primes;
    auto r = prime_realiser(g);
    REQUIRE(r);
    auto e = extremal_vertices(*r);
    for (const Realiser& s : {swap_orders(*r), reverse_both(*r), swap_orders(reverse_both(*r))}) {
      CHECK(realises(s, g));
      CHECK(extremal_vertices(s) == e);
    }
    // any other realiser of a prime graph has the same extremal set
    auto c = compute_realiser(g);
    REQUIRE(c);
    CHECK(extremal_vertices(*c) == e);
  }
  CHECK(primes > 50);
}

TEST_CASE("common intervals") {
  Realiser r = p4_realiser();
  Graph p = graph_from_realiser(r);
  CHECK(is_common_interval_module(p, r, iota_vec(4), true));
  for (int v = 0; v < 4; ++v) CHECK(is_common_interval_module(p, r, std::vector<int>{v}, true));
  // 0,1 are sigma-consecutive but tau positions 2 and 4
  CHECK_FALSE(is_common_interval_module(p, r, std::vector<int>{0, 1}, true));
  CHECK(is_realiser_interval(r, std::vector<int>{0, 1}));
  CHECK_FALSE(is_common_interval(r, std::vector<int>{0, 1}));
}

TEST_CASE("build_realiser_from_sequence") {
  SUBCASE("K2") {
    Realiser r = build_realiser_from_sequence(named::complete(2), ContractionSequence{2, {{0, 1}}, 1});
    CHECK(count_crossings(r) == 1);
  }
  SUBCASE("P4") {
    Graph p = named::path(4);
    ContractionSequence seq{4, {{0, 1}, {4, 2}, {5, 3}}, 1};
    Realiser r = build_realiser_from_sequence(p, seq);
    CHECK(graph_from_realiser(r) == p);
    CHECK(check_realiser_respects_sequence(p, r, seq).empty());
  }
  SUBCASE("P3 isolated case") {
    Graph p = named::path(3);
    ContractionSequence seq{3, {{0, 2}, {3, 1}}, 1};
    Realiser r = build_realiser_from_sequence(p, seq);
    CHECK(graph_from_realiser(r) == p);
    CHECK(is_realiser_interval(r, std::vector<int>{0, 2}));
    CHECK(check_realiser_respects_sequence(p, r, seq).empty());
  }
  SUBCASE("rejects wider sequences") {
    Graph c = named::cycle(5);
    ContractionSequence seq{5, {{0, 1}, {5, 2}, {6, 3}, {7, 4}}, 2};
    CHECK_THROWS_AS(build_realiser_from_sequence(c, seq), PreconditionError);
  }
  SUBCASE("a violated interval is reported") {
    Graph p = named::path(4);
    ContractionSequence seq{4, {{0, 1}, {4, 2}, {5, 3}}, 1};
    Realiser bad{{1, 3, 2, 4}, {1, 3, 2, 4}};
    CHECK_FALSE(check_realiser_respects_sequence(p, bad, seq).empty());
  }
}

TEST_CASE("diagram layout") {
  Realiser id{{1, 2, 3}, {1, 2, 3}};
  auto segs = diagram_layout(id);
  REQUIRE(segs.size() == 3);
  for (auto& s : segs) CHECK(s.top == s.bottom);
  CHECK(count_crossings(id) == 0);
  Realiser rev{{1, 2, 3, 4}, {4, 3, 2, 1}};
  CHECK(count_crossings(rev) == 6);
  CHECK(count_crossings(p4_realiser()) == 3);
}
