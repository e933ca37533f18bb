#include <algorithm>

#include "tww/tww1.hpp"

namespace tww {
namespace {

// One original vertex per trigraph vertex such that G[reps] is the underlying
// graph of h: the red edge (if any) gets adjacent representatives.
std::vector<std::pair<int, int>> representatives(const Graph& g, const Trigraph& h) {
  std::vector<std::pair<int, int>> reps;  // trigraph id, original vertex
  std::vector<int> chosen(h.next_id(), -1);
  for (int x : h.active_vertices())
    for (auto [y, c] : h.neighbours(x)) {
      if (c != Colour::red || chosen[x] != -1 || chosen[y] != -1) continue;
      for (int a : h.part(x)) {
        for (int b : h.part(y))
          if (g.adjacent(a, b)) {
            chosen[x] = a;
            chosen[y] = b;
            break;
          }
        if (chosen[x] != -1) break;
      }
    }
  for (int x : h.active_vertices()) {
    if (chosen[x] == -1) chosen[x] = *std::min_element(h.part(x).begin(), h.part(x).end());
    reps.emplace_back(x, chosen[x]);
  }
  return reps;
}

bool underlying(const Trigraph& h, int x, int y) { return h.edge(x, y).has_value(); }

// Whether a and b have no other representative between them in `positions`.
bool consecutive(const std::vector<int>& positions, const std::vector<std::pair<int, int>>& reps, int a, int b) {
  int lo = std::min(positions[a], positions[b]), hi = std::max(positions[a], positions[b]);
  for (auto [x, v] : reps)
    if (v != a && v != b && positions[v] > lo && positions[v] < hi) return false;
  return true;
}

}  // namespace

TheoryReport check_sequence_theory(const Graph& g, const ContractionSequence& seq) {
  TheoryReport rep;
  auto fail = [&](bool& flag, std::size_t step, const std::string& what) {
    flag = false;
    rep.violations.push_back("step " + std::to_string(step) + ": " + what);
  };
  if (!seq.complete() || !verify_sequence(g, seq, 1).ok()) {
    rep.violations.push_back("not a verified 1-sequence");
    rep.one_red_edge = rep.first_contraction = rep.induced_chain = rep.respects_realiser = false;
    return rep;
  }
  Realiser r = build_realiser_from_sequence(g, seq);
  if (auto err = check_realiser_respects_sequence(g, r, seq); !err.empty())
    fail(rep.respects_realiser, 0, "realiser intervals: " + err);

  if (!seq.steps.empty()) {
    auto [u, v] = seq.steps.front();
    int ds = std::abs(r.sigma[u] - r.sigma[v]), dt = std::abs(r.tau[u] - r.tau[v]);
    if (!((ds == 1 && dt == 2) || (ds == 2 && dt == 1)))
      fail(rep.first_contraction, 1, "first pair is not consecutive in one order with one vertex between in the other");
  }

  Trigraph h(g);
  auto reps = representatives(g, h);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    auto [u, v] = seq.steps[k];
    std::size_t step = k + 1;
    // Contracted pair: representatives consecutive in one induced order.
    int ru = -1, rv = -1;
    for (auto [x, o] : reps) {
      if (x == u) ru = o;
      if (x == v) rv = o;
    }
    if (!consecutive(r.sigma, reps, ru, rv) && !consecutive(r.tau, reps, ru, rv))
      fail(rep.respects_realiser, step, "contracted pair not consecutive");

    // Chain: the merged vertex maps to u or v, giving G_{i-1} inside G_i.
    bool via_u = true, via_v = true;
    for (int y : h.active_vertices()) {
      if (y == u || y == v) continue;
      bool any = underlying(h, u, y) || underlying(h, v, y);
      via_u &= any == underlying(h, u, y);
      via_v &= any == underlying(h, v, y);
    }
    if (!via_u && !via_v) fail(rep.induced_chain, step, "contraction is not an induced-subgraph step");

    h.contract_in_place(u, v);
    int i = h.active_count();
    if (i >= 2 && h.red_edge_count() != 1)
      fail(rep.one_red_edge, step, std::to_string(h.red_edge_count()) + " red edges in a trigraph on " +
                                       std::to_string(i) + " vertices");

    reps = representatives(g, h);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        if (underlying(h, reps[a].first, reps[b].first) != g.adjacent(reps[a].second, reps[b].second)) {
          fail(rep.induced_chain, step, "representatives do not induce the underlying graph");
          a = reps.size();
          break;
        }
    for (auto [x, o] : reps)
      for (auto [y, c] : h.neighbours(x)) {
        if (c != Colour::red || y < x) continue;
        int oy = -1;
        for (auto [z, p] : reps)
          if (z == y) oy = p;
        if (!consecutive(r.sigma, reps, o, oy) && !consecutive(r.tau, reps, o, oy))
          fail(rep.respects_realiser, step, "red edge endpoints not consecutive");
      }
  }
  return rep;
}

}  // namespace tww
