#include <algorithm>
#include <numeric>

#include "tww/permgraph.hpp"

namespace tww {

namespace {

// Interval properties of the current trigraph of h against r; empty on success.
std::string check_trigraph(const Realiser& r, const Trigraph& h) {
  for (int x : h.active_vertices()) {
    const auto& px = h.part(x);
    if (!is_realiser_interval(r, px)) return "part of " + std::to_string(x) + " is not an interval";
    for (auto [y, c] : h.neighbours(x)) {
      if (c != Colour::red || y < x) continue;
      std::vector<int> both = px;
      both.insert(both.end(), h.part(y).begin(), h.part(y).end());
      bool ok = false;
      for (int flip = 0; flip < 2 && !ok; ++flip) {
        const auto& one = flip ? r.tau : r.sigma;
        const auto& other = flip ? r.sigma : r.tau;
        ok = is_interval(one, both) && is_interval(other, px) && is_interval(other, h.part(y));
      }
      if (!ok) return "red edge " + std::to_string(x) + "-" + std::to_string(y) + " violates the interval rule";
    }
  }
  return {};
}

}  // namespace

std::string check_realiser_respects_sequence(const Graph& g, const Realiser& r, const ContractionSequence& seq) {
  Trigraph h(g);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    h.contract_in_place(seq.steps[k].first, seq.steps[k].second);
    if (auto err = check_trigraph(r, h); !err.empty()) return "step " + std::to_string(k + 1) + ": " + err;
  }
  return {};
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orders as vertex lists (front = position 1).
struct Orders {
  std::vector<int> sigma, tau;
};

Orders build(const Graph& g, const ContractionSequence& seq) {
  int n = g.order();
  if (n <= 3) {
    auto perms = all_permutations(n);
    for (const auto& s : perms)
      for (const auto& t : perms) {
        Realiser r{s, t};
        if (realises(r, g) && check_realiser_respects_sequence(g, r, seq).empty())
          return {order_of(r.sigma), order_of(r.tau)};
      }
    throw std::logic_error("no small realiser respects the sequence");
  }
  Trigraph h(g);
  for (int k = 0; k < n - 3; ++k) h.contract_in_place(seq.steps[k].first, seq.steps[k].second);
  auto three = h.active_vertices();
  int v = -1;
  for (int a : three)
    for (auto [b, c] : h.neighbours(a))
      if (c == Colour::red)
        for (int z : three)
          if (z != a && z != b) v = z;
  if (v == -1)
    for (int z : three) {
      int d = static_cast<int>(h.neighbours(z).size());
      if (v == -1 && (d == 0 || d == 2)) v = z;
    }
  std::vector<int> m = h.part(v), rest;
  std::sort(m.begin(), m.end());
  std::vector<char> in_m(n, 0);
  for (int u : m) in_m[u] = 1;
  for (int u = 0; u < n; ++u)
    if (!in_m[u]) rest.push_back(u);

  auto sub = [&](const std::vector<int>& s) {
    Graph sg = induced_graph(g, s);
    Orders o = build(sg, restrict_sequence(seq, s));
    for (auto& x : o.sigma) x = s[x];
    for (auto& x : o.tau) x = s[x];
    return o;
  };
  Orders r1 = sub(rest), r2 = sub(m);
  auto cat = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  // The four symmetries of a diagram that keep its graph.
  auto symmetries = [](const Orders& o) {
    auto rev = [](std::vector<int> x) {
      std::reverse(x.begin(), x.end());
      return x;
    };
    return std::vector<Orders>{o, {rev(o.sigma), rev(o.tau)}, {o.tau, o.sigma}, {rev(o.tau), rev(o.sigma)}};
  };

  // Only the last two trigraphs mix parts of M and of G - M.
  Trigraph h2 = h;
  h2.contract_in_place(seq.steps[n - 3].first, seq.steps[n - 3].second);
  auto fits = [&](const Orders& o) {
    Realiser r = realiser_from_orders(o.sigma, o.tau);
    return check_trigraph(r, h).empty() && check_trigraph(r, h2).empty();
  };

  int nbrs = static_cast<int>(h.neighbours(v).size());
  std::vector<char> in_b(n, 0);
  if (nbrs == 1)
    for (int u : h.part(h.neighbours(v).begin()->first)) in_b[u] = 1;
  // Index where the B-block and the A-block meet, or -1.
  auto split_at_block = [&](const std::vector<int>& order) -> int {
    int changes = 0, cut = -1;
    for (std::size_t i = 1; i < order.size(); ++i)
      if (in_b[order[i]] != in_b[order[i - 1]]) {
        ++changes;
        cut = static_cast<int>(i);
      }
    return changes == 1 ? cut : -1;
  };
  for (const Orders& a : symmetries(r1))
    for (const Orders& b : symmetries(r2)) {
      Orders out;
      if (nbrs == 2) {
        out = {cat(a.sigma, b.sigma), cat(b.tau, a.tau)};
      } else if (nbrs == 0) {
        out = {cat(a.sigma, b.sigma), cat(a.tau, b.tau)};
      } else {
        // M goes between the blocks of sigma, so that it crosses exactly B.
        int cut = split_at_block(a.sigma);
        if (cut == -1) continue;
        out.sigma.assign(a.sigma.begin(), a.sigma.begin() + cut);
        out.sigma.insert(out.sigma.end(), b.sigma.begin(), b.sigma.end());
        out.sigma.insert(out.sigma.end(), a.sigma.begin() + cut, a.sigma.end());
        out.tau = in_b[a.sigma.front()] ? cat(b.tau, a.tau) : cat(a.tau, b.tau);
      }
      if (fits(out)) return out;
    }
  throw std::logic_error("no combination of the sub-realisers respects the last contractions");
}

}  // namespace

Realiser build_realiser_from_sequence(const Graph& g, const ContractionSequence& seq) {
  if (!seq.complete() || !verify_sequence(g, seq, 1).ok())
    throw PreconditionError("sequence is not a complete 1-sequence of the graph");
  Orders o = build(g, seq);
  return realiser_from_orders(o.sigma, o.tau);
}

}  // namespace tww
