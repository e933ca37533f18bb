#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tww/generators.hpp"

namespace tww::testing {

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn) {
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) fn(graph_from_pair_mask(n, mask));
}

bool brute_is_module(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(g.order(), 0);
  for (int v : s) in[v] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    int adj = 0;
    for (int v : s) adj += g.adjacent(x, v);
    if (adj != 0 && adj != static_cast<int>(s.size())) return false;
  }
  return true;
}

std::set<std::vector<int>> brute_strong_modules(const Graph& g) {
  int n = g.order();
  std::vector<std::uint32_t> modules;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1) s.push_back(v);
    if (brute_is_module(g, s)) modules.push_back(m);
  }
  std::set<std::vector<int>> out;
  for (auto m : modules) {
    bool strong = true;
    for (auto o : modules) {
      bool overlap = (m & o) && (m & ~o) && (o & ~m);
      if (overlap) strong = false;
    }
    if (!strong) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1) s.push_back(v);
    out.insert(s);
  }
  return out;
}

bool brute_is_prime(const Graph& g) {
  int n = g.order();
  if (n < 4) return false;
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
    if (std::popcount(m) < 2) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1) s.push_back(v);
    if (brute_is_module(g, s)) return false;
  }
  return true;
}

bool brute_is_permutation(const Graph& g) {
  int n = g.order();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // sigma lists vertices left to right; tau is forced pairwise.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
    std::vector<int> score(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        bool before = (pos[u] < pos[v]) != g.adjacent(u, v);
        if (before) ++score[u];
      }
    std::vector<int> sorted = score;
    std::sort(sorted.begin(), sorted.end());
    bool transitive = true;
    for (int i = 0; i < n; ++i) transitive &= sorted[i] == i;
    if (transitive) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

bool brute_is_cograph(const Graph& g) {
  int n = g.order();
  std::vector<int> p(4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
              !g.adjacent(a, d) && !g.adjacent(b, d))
            return false;
        }
  return true;
}

namespace {

std::vector<std::vector<int>> distances(const Graph& g, std::uint32_t mask) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    if (!((mask >> s) & 1)) continue;
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbours(u))
        if (((mask >> w) & 1) && d[s][w] == -1) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

}  // namespace

bool brute_is_distance_hereditary(const Graph& g) {
  int n = g.order();
  std::uint32_t all = (1u << n) - 1;
  auto full = distances(g, all);
  for (std::uint32_t m = 1; m <= all; ++m) {
    auto d = distances(g, m);
    int first = std::countr_zero(m);
    bool connected = true;
    for (int v = 0; v < n; ++v)
      if (((m >> v) & 1) && d[first][v] == -1) connected = false;
    if (!connected) continue;
    // In a connected induced subgraph, distances must match those in any
    // connected supergraph; comparing with G's component suffices.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (((m >> a) & 1) && ((m >> b) & 1) && d[a][b] != full[a][b]) return false;
  }
  return true;
}

bool brute_is_at_free(const Graph& g) {
  int n = g.order();
  auto avoid = [&](int a, int b, int c) {
    // path a..b avoiding N[c]
    std::vector<char> blocked(n, 0), seen(n, 0);
    blocked[c] = 1;
    for (int w : g.neighbours(c)) blocked[w] = 1;
    if (blocked[a] || blocked[b]) return false;
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == b) return true;
      for (int w : g.neighbours(u))
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return false;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (avoid(a, b, c) && avoid(a, c, b) && avoid(b, c, a)) return false;
  return true;
}

bool brute_trigraph_consistent(const Graph& g, const Trigraph& h) {
  auto act = h.active_vertices();
  std::vector<int> count(g.order(), 0);
  for (int x : act)
    for (int v : h.part(x)) ++count[v];
  for (int c : count)
    if (c != 1) return false;
  for (int x : act)
    for (int y : act) {
      if (x >= y) continue;
      bool any = false, all = true;
      for (int a : h.part(x))
        for (int b : h.part(y)) {
          bool e = g.adjacent(a, b);
          any |= e;
          all &= e;
        }
      auto c = h.edge(x, y);
      if (c != h.edge(y, x)) return false;
      if (all && c != Colour::black) return false;
      if (!any && c.has_value()) return false;
      if (any && !all && c != Colour::red) return false;
    }
  return true;
}

int brute_sequence_width(const Graph& g, const ContractionSequence& seq) {
  std::vector<std::vector<int>> parts(g.order());
  for (int v = 0; v < g.order(); ++v) parts[v] = {v};
  std::vector<char> alive(g.order(), 1);
  int width = 0;
  auto red = [&](const std::vector<int>& x, const std::vector<int>& y) {
    bool any = false, all = true;
    for (int a : x)
      for (int b : y) {
        bool e = g.adjacent(a, b);
        any |= e;
        all &= e;
      }
    return any && !all;
  };
  for (auto [u, v] : seq.steps) {
    auto merged = parts[u];
    merged.insert(merged.end(), parts[v].begin(), parts[v].end());
    alive[u] = alive[v] = 0;
    parts.push_back(merged);
    alive.push_back(1);
    for (std::size_t x = 0; x < parts.size(); ++x) {
      if (!alive[x]) continue;
      int deg = 0;
      for (std::size_t y = 0; y < parts.size(); ++y)
        if (y != x && alive[y] && red(parts[x], parts[y])) ++deg;
      width = std::max(width, deg);
    }
  }
  return width;
}

bool is_caterpillar(const Graph& tree) {
  int n = tree.order();
  std::vector<int> inner;
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) > 1) inner.push_back(v);
  for (int v : inner) {
    int inner_nbrs = 0;
    for (int w : tree.neighbours(v)) inner_nbrs += tree.degree(w) > 1;
    if (inner_nbrs > 2) return false;
  }
  return true;
}

}  // namespace tww::testing
