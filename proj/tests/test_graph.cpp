#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tww/generators.hpp"
#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

namespace {

Graph make(int n, std::vector<Edge> e) { return Graph(n, e); }

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  std::vector<Edge> loop{{0, 0}}, dup{{0, 1}, {1, 0}}, range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
  CHECK_THROWS_AS(Graph(3, dup), PreconditionError);
  CHECK_THROWS_AS(Graph(3, range), PreconditionError);
  Graph p = named::path(4);
  CHECK(p.size() == 3);
  CHECK(p.adjacent(1, 2));
  CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("contract on P3") {
  Graph p3 = named::path(3);
  Trigraph h(p3);
  SUBCASE("twins contract cleanly") {
    Trigraph r = contract(h, 0, 2);
    CHECK(r.active_vertices() == std::vector<int>{1, 3});
    CHECK(r.edge(1, 3) == Colour::black);
    CHECK(r.red_edge_count() == 0);
    CHECK(h.active_count() == 3);  // input untouched
  }
  SUBCASE("endpoint into centre gives a red edge") {
    Trigraph r = contract(h, 0, 1);
    CHECK(r.active_vertices() == std::vector<int>{2, 3});
    CHECK(r.edge(2, 3) == Colour::red);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(contract(h, 0, 0), PreconditionError);
    CHECK_THROWS_AS(contract(h, 0, 7), PreconditionError);
    Trigraph r = contract(h, 0, 1);
    CHECK_THROWS_AS(contract(r, 0, 2), PreconditionError);
  }
}

TEST_CASE("contract K2") {
  Trigraph r = contract(Trigraph(named::complete(2)), 0, 1);
  CHECK(r.active_count() == 1);
  CHECK(r.neighbours(2).empty());
}

TEST_CASE("contract is symmetric and keeps the partition invariant") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.5, rng);
    Trigraph h(g);
    while (h.active_count() > 1) {
      auto act = h.active_vertices();
      int u = act[rng() % act.size()], v;
      do v = act[rng() % act.size()];
      while (v == u);
      Trigraph a = contract(h, u, v), b = contract(h, v, u);
      int x = h.next_id();
      for (int y : a.active_vertices()) CHECK(a.edge(x, y) == b.edge(x, y));
      h = a;
      REQUIRE(testing::brute_trigraph_consistent(g, h));
    }
  }
}

TEST_CASE("contracting inside a module keeps red edges inside") {
  // C5 with a true twin 5 of vertex 0: {0,5} is a module
  Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 4}});
  Trigraph h = contract(Trigraph(g), 0, 5);
  CHECK(h.red_edge_count() == 0);
  // P4 plus a false twin 4 of 1: {1,4} is a module
  Graph p = make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}});
  CHECK(contract(Trigraph(p), 1, 4).red_edge_count() == 0);
}

TEST_CASE("verify_sequence examples") {
  SUBCASE("C5 fails width 1 for every complete sequence") {
    Graph c5 = named::cycle(5);
    int found_ok = 0;
    // all sequences: sample the first pair and contract greedily onward
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        ContractionSequence seq{5, {{u, v}}, 1};
        int next = 5;
        std::vector<int> act;
        for (int x = 0; x < 5; ++x)
          if (x != u && x != v) act.push_back(x);
        act.push_back(next++);
        while (act.size() > 1) {
          int a = act[0], b = act[1];
          seq.steps.emplace_back(a, b);
          act.erase(act.begin(), act.begin() + 2);
          act.push_back(next++);
        }
        auto rep = verify_sequence(c5, seq, 1);
        found_ok += rep.ok();
        CHECK(rep.status == VerifyReport::Status::width_exceeded);
        CHECK(rep.failed_step >= 1);
      }
    CHECK(found_ok == 0);
  }
  SUBCASE("K3 twins") {
    auto rep = verify_sequence(named::complete(3), ContractionSequence{3, {{0, 1}, {3, 2}}, 0}, 0);
    CHECK(rep.ok());
    CHECK(rep.max_red_degree == 0);
  }
  SUBCASE("P4 endpoint contraction") {
    ContractionSequence seq{4, {{0, 1}, {4, 2}, {5, 3}}, 1};
    auto rep = verify_sequence(named::path(4), seq, 1);
    CHECK(rep.ok());
    CHECK(testing::brute_sequence_width(named::path(4), seq) == 1);
    CHECK_FALSE(verify_sequence(named::path(4), seq, 0).ok());
  }
  SUBCASE("malformed") {
    Graph p = named::path(4);
    CHECK(verify_sequence(p, ContractionSequence{4, {{0, 1}, {0, 2}}, 1}, 1).status ==
          VerifyReport::Status::malformed);
    CHECK(verify_sequence(p, ContractionSequence{4, {{0, 9}}, 1}, 1).status == VerifyReport::Status::malformed);
    CHECK(verify_sequence(p, ContractionSequence{4, {{1, 1}}, 1}, 1).status == VerifyReport::Status::malformed);
    CHECK(verify_sequence(p, ContractionSequence{3, {{0, 1}}, 1}, 1).status == VerifyReport::Status::malformed);
    auto partial = verify_sequence(p, ContractionSequence{4, {{0, 1}}, 1}, 1);
    CHECK(partial.ok());
    CHECK(partial.partial);
  }
}

TEST_CASE("verifier width agrees with the brute-force recomputation") {
  Rng rng(5);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.4, rng);
    std::vector<int> act(n);
    std::iota(act.begin(), act.end(), 0);
    ContractionSequence seq{n, {}, 0};
    int next = n;
    while (act.size() > 1) {
      std::shuffle(act.begin(), act.end(), rng);
      seq.steps.emplace_back(act[0], act[1]);
      act.erase(act.begin(), act.begin() + 2);
      act.push_back(next++);
    }
    int w = testing::brute_sequence_width(g, seq);
    CHECK(verify_sequence(g, seq, w).ok());
    if (w > 0) {
      auto rep = verify_sequence(g, seq, w - 1);
      CHECK(rep.status == VerifyReport::Status::width_exceeded);
      // every prefix of an accepted sequence is accepted
      ContractionSequence pre = seq;
      pre.steps.resize(rep.failed_step - 1);
      CHECK(verify_sequence(g, pre, w - 1).ok());
    }
  }
}

TEST_CASE("induced_subgraph and complement") {
  Graph c5 = named::cycle(5);
  std::vector<int> s{0, 1, 2};
  auto sub = induced_subgraph(c5, s);
  CHECK(sub.graph == named::path(3));
  std::vector<int> all{0, 1, 2, 3, 4};
  auto whole = induced_subgraph(c5, all);
  CHECK(whole.graph == c5);
  CHECK(whole.to_original == all);
  CHECK(induced_subgraph(c5, std::vector<int>{}).graph.order() == 0);
  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<int>{7}), PreconditionError);

  CHECK(complement(named::complete(3)) == named::empty(3));
  Graph cc5 = complement(c5);
  CHECK(cc5.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc5.degree(v) == 2);
  CHECK(is_connected(cc5));
  // P4 0-1-2-3 complement is the P4 1-3-0-2
  Graph cp4 = complement(named::path(4));
  CHECK(cp4 == make(4, {{1, 3}, {3, 0}, {0, 2}}));
}

TEST_CASE("restrict_sequence") {
  ContractionSequence seq{4, {{0, 1}, {4, 2}, {5, 3}}, 1};
  std::vector<int> sub{1, 2, 3};
  auto r = restrict_sequence(seq, sub);
  CHECK(r.n0 == 3);
  CHECK(r.complete());
  CHECK(sequence_structure_error(r).empty());
  CHECK(verify_sequence(named::path(3), r, 1).ok());
}
