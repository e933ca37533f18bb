#include <doctest.h>

#include "support.hpp"
#include "tww/generators.hpp"
#include "tww/modular.hpp"
#include "tww/oracle.hpp"
#include "tww/tww1.hpp"

using namespace tww;

namespace {

// recognize must agree with the oracle and its output must verify.
void check_against_oracle(const Graph& g) {
  auto out = recognize(g);
  int w = *brute_force_tww(g).width;
  REQUIRE(out.accepted() == (w <= 1));
  if (!out.accepted()) return;
  CHECK(out.sequence->complete());
  CHECK(verify_sequence(g, *out.sequence, 1).ok());
  CHECK(testing::brute_sequence_width(g, *out.sequence) == w);
}

Graph c5_with_twin() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 4}};
  return Graph(6, e);
}

}  // namespace

TEST_CASE("recognize examples") {
  auto k4 = recognize(named::complete(4));
  REQUIRE(k4.accepted());
  CHECK(verify_sequence(named::complete(4), *k4.sequence, 0).ok());
  CHECK(k4.sequence->claimed_width == 0);

  auto gem = recognize(named::gem());
  REQUIRE(gem.accepted());
  CHECK(gem.sequence->claimed_width == 1);
  CHECK(*brute_force_tww(named::gem()).width == 1);

  auto twin = recognize(c5_with_twin());
  REQUIRE_FALSE(twin.accepted());
  CHECK(twin.refusal->reason == RefusalReason::not_permutation);
  CHECK(*brute_force_tww(c5_with_twin()).width == 2);

  for (int n : {5, 6, 7}) {
    auto c = recognize(named::cycle(n));
    CHECK_FALSE(c.accepted());
    CHECK(*brute_force_tww(named::cycle(n)).width == 2);
  }
  CHECK(recognize(Graph(0)).accepted());
  CHECK(recognize(Graph(1)).accepted());
}

TEST_CASE("recognize_prime") {
  auto p4 = recognize_prime(named::path(4));
  REQUIRE(p4);
  CHECK(verify_sequence(named::path(4), *p4, 1).ok());
  CHECK_FALSE(recognize_prime(named::cycle(5)));
  CHECK_FALSE(recognize_prime(named::cycle(6)));
  CHECK_THROWS_AS(recognize_prime(named::complete(4)), PreconditionError);
  CHECK_THROWS_AS(recognize_prime(named::path(3)), PreconditionError);
}

TEST_CASE("recognize agrees with the oracle on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) testing::for_each_labelled_graph(n, check_against_oracle);
}

TEST_CASE("recognize agrees with the oracle on random graphs with 7 and 8 vertices") {
  Rng rng(77);
  for (int it = 0; it < 600; ++it) {
    int n = 7 + it % 2;
    check_against_oracle(random_graph(n, 0.15 + 0.7 * (it % 7) / 6.0, rng));
  }
}

TEST_CASE("peel_prime on P4 matches the with-last oracle") {
  Graph p = named::path(4);
  auto r = compute_realiser(p);
  REQUIRE(r);
  for (int s : extremal_vertices(*r)) {
    auto seq = peel_prime(p, *r, s);
    CHECK(seq.has_value() == brute_force_has_1_sequence_with_last(p, s).value());
    if (seq) CHECK(verify_sequence(p, *seq, 1).ok());
  }
  CHECK_THROWS_AS(peel_prime(p, Realiser{{1, 2, 3, 4}, {1, 2, 3, 4}}, 0), PreconditionError);
}

TEST_CASE("prime permutation graphs of twin-width 2 fail every peel") {
  Rng rng(4);
  int found = 0;
  for (int it = 0; it < 3000 && found < 10; ++it) {
    Graph g = random_realiser_graph(6 + static_cast<int>(rng() % 3), rng);
    if (!testing::brute_is_prime(g) || *brute_force_tww(g).width != 2) continue;
    ++found;
    auto r = compute_realiser(g);
    REQUIRE(r);
    for (int s : extremal_vertices(*r)) CHECK_FALSE(peel_prime(g, *r, s));
    CHECK_FALSE(recognize_prime(g));
  }
  CHECK(found >= 1);
}

TEST_CASE("extremal guess is sufficient and peel outcome is seed independent") {
  // prime graphs up to 7 vertices; with-last oracle on extremal vertices
  Rng rng(5);
  int primes = 0;
  for (int it = 0; it < 4000; ++it) {
    Graph g = random_graph(4 + static_cast<int>(rng() % 4), 0.5, rng);
    if (!testing::brute_is_prime(g)) continue;
    auto r = compute_realiser(g);
    if (!r) continue;
    ++primes;
    bool any = false;
    for (int s : extremal_vertices(*r)) {
      auto base = peel_prime(g, *r, s);
      CHECK(base.has_value() == brute_force_has_1_sequence_with_last(g, s).value());
      any |= base.has_value();
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto other = peel_prime(g, *r, s, PeelOptions{seed});
        CHECK(other.has_value() == base.has_value());
        if (other) CHECK(verify_sequence(g, *other, 1).ok());
      }
    }
    CHECK(any == (*brute_force_tww(g).width <= 1));
  }
  CHECK(primes > 100);
}

TEST_CASE("theory checks hold on prime outputs") {
  Rng rng(6);
  int checked = 0;
  for (int it = 0; it < 3000; ++it) {
    Graph g = random_graph(4 + static_cast<int>(rng() % 4), 0.5, rng);
    if (!testing::brute_is_prime(g)) continue;
    auto out = recognize(g);
    if (!out.accepted()) continue;
    ++checked;
    auto rep = check_sequence_theory(g, *out.sequence);
    CHECK_MESSAGE(rep.ok(), (rep.violations.empty() ? "" : rep.violations.front()));
  }
  // larger primes from the generator
  for (int it = 0; it < 200; ++it) {
    Graph g = random_tww1(8 + static_cast<int>(rng() % 40), rng);
    MDTree t = modular_decomposition(g);
    for (int x : t.prime_nodes()) {
      const Graph& q = *t.nodes[x].quotient;
      auto seq = recognize_prime(q);
      REQUIRE(seq);
      ++checked;
      auto rep = check_sequence_theory(q, *seq);
      CHECK_MESSAGE(rep.ok(), (rep.violations.empty() ? "" : rep.violations.front()));
    }
  }
  CHECK(checked > 100);
  // P4 with a reordered sequence that is not a 1-sequence
  ContractionSequence bad{4, {{0, 3}, {4, 1}, {5, 2}}, 1};
  CHECK_FALSE(verify_sequence(named::path(4), bad, 1).ok());
  CHECK_FALSE(check_sequence_theory(named::path(4), bad).ok());
}

TEST_CASE("realiser from oracle witnesses respects the sequence") {
  Rng rng(8);
  for (int it = 0; it < 500; ++it) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
    auto r = brute_force_tww(g);
    if (*r.width > 1) continue;
    Realiser real = build_realiser_from_sequence(g, *r.witness);
    CHECK(graph_from_realiser(real) == g);
    CHECK(check_realiser_respects_sequence(g, real, *r.witness).empty());
  }
}

TEST_CASE("trees") {
  Rng rng(10);
  for (int it = 0; it < 50; ++it) {
    Graph t = random_caterpillar(2 + static_cast<int>(rng() % 199), rng);
    REQUIRE(testing::is_caterpillar(t));
    CHECK(recognize(t).accepted());
  }
  for (int it = 0; it < 50; ++it) {
    Graph t = random_non_caterpillar_tree(7 + static_cast<int>(rng() % 194), rng);
    REQUIRE_FALSE(testing::is_caterpillar(t));
    CHECK_FALSE(recognize(t).accepted());
  }
  CHECK_FALSE(recognize(named::spider()).accepted());
}

TEST_CASE("generated twin-width 1 graphs are accepted") {
  Rng rng(12);
  for (int it = 0; it < 100; ++it) {
    Graph g = random_tww1(2 + static_cast<int>(rng() % 2000), rng);
    auto out = recognize(g);
    REQUIRE(out.accepted());
    CHECK(verify_sequence(g, *out.sequence, 1).ok());
  }
  for (int it = 0; it < 100; ++it) {
    Graph g = random_tww1(2 + static_cast<int>(rng() % 6), rng);
    CHECK(*brute_force_tww(g).width <= 1);
  }
}
