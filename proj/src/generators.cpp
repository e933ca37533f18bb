#include "tww/generators.hpp"

#include <algorithm>
#include <numeric>

#include "tww/permgraph.hpp"

namespace tww {

namespace named {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty(int n) { return Graph(n); }

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph spider() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  return Graph(7, e);
}

Graph gem() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  return Graph(5, e);
}

Graph house() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}};
  return Graph(5, e);
}

Graph domino() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

}  // namespace named

namespace {

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph shuffle_labels(const Graph& g, Rng& rng) {
  auto p = random_permutation(g.order(), rng);
  return relabel(g, p);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(uniform(rng, 0, v - 1), v);
  return shuffle_labels(Graph(n, e), rng);
}

Graph random_caterpillar(int n, Rng& rng) {
  if (n <= 0) return Graph(0);
  int spine = uniform(rng, 1, n);
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  for (int v = spine; v < n; ++v) e.emplace_back(uniform(rng, 0, spine - 1), v);
  return shuffle_labels(Graph(n, e), rng);
}

Graph random_non_caterpillar_tree(int n, Rng& rng) {
  if (n < 7) throw PreconditionError("a subdivided K_{1,3} needs 7 vertices");
  auto e = named::spider().edges();
  for (int v = 7; v < n; ++v) e.emplace_back(uniform(rng, 0, v - 1), v);
  return shuffle_labels(Graph(n, e), rng);
}

Graph random_realiser_graph(int n, Rng& rng, Realiser* out) {
  Realiser r{random_permutation(n, rng), random_permutation(n, rng)};
  for (auto& x : r.sigma) ++x;
  for (auto& x : r.tau) ++x;
  if (out) *out = r;
  return graph_from_realiser(r);
}

namespace {

// Graph with a width-1 sequence ending in the bipartition (x, y); y is
// empty for a single vertex.
struct Grown {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> x, y;
};

void absorb(std::vector<int>& into, std::vector<int>& from) {
  if (into.size() < from.size()) std::swap(into, from);
  into.insert(into.end(), from.begin(), from.end());
  from.clear();
}

// Shared across the recursion: links are allowed while edges <= 6 * vertices.
struct EdgeBudget {
  long long vertices = 0;
  long long edges = 0;

  bool allows(long long cost) const { return edges + cost <= 6 * vertices; }
};

Grown grow(int n, Rng& rng, EdgeBudget& budget) {
  Grown g;
  budget.vertices += n == 1 ? 1 : 2;
  if (n == 1) {
    g.n = 1;
    g.x = {0};
    return g;
  }
  g.n = 2;
  if (uniform(rng, 0, 1)) {
    g.edges.emplace_back(0, 1);
    ++budget.edges;
  }
  g.x = {0};
  g.y = {1};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (g.n < n) {
    int rem = n - g.n;
    double roll = unit(rng);
    int k = 1;
    if (roll > 0.95 && rem >= 4) k = uniform(rng, 2, rem / 2);
    else if (roll > 0.8 && rem >= 2) k = uniform(rng, 2, std::min(8, rem));
    Grown m = grow(k, rng, budget);
    int off = g.n;
    for (auto [a, b] : m.edges) g.edges.emplace_back(a + off, b + off);
    std::vector<int> mv(k);
    std::iota(mv.begin(), mv.end(), off);

    long long kx = static_cast<long long>(g.x.size()) * k, ky = static_cast<long long>(g.y.size()) * k;
    std::vector<int> ops;  // 0 attach x, 1 attach y, 2 universal, 3 isolated
    if (budget.allows(kx)) ops.insert(ops.end(), 7, 0);
    if (budget.allows(ky)) ops.insert(ops.end(), 7, 1);
    if (budget.allows(kx + ky)) ops.insert(ops.end(), 2, 2);
    ops.insert(ops.end(), 1, 3);
    int op = ops[uniform(rng, 0, static_cast<int>(ops.size()) - 1)];
    auto link = [&](const std::vector<int>& side) {
      budget.edges += static_cast<long long>(side.size()) * k;
      for (int a : side)
        for (int b : mv) g.edges.emplace_back(a, b);
    };
    if (op == 0) link(g.x);
    else if (op == 1) link(g.y);
    else if (op == 2) {
      link(g.x);
      link(g.y);
    }
    g.n += k;

    double pick = unit(rng);
    if (pick < 0.7) {
      absorb(g.x, g.y);
      g.y = std::move(mv);
    } else if (pick < 0.85) {
      absorb(g.x, mv);
    } else {
      absorb(g.y, mv);
    }
  }
  return g;
}

}  // namespace

Graph random_tww1(int n, Rng& rng) {
  if (n <= 0) return Graph(0);
  EdgeBudget budget;
  Grown g = grow(n, rng, budget);
  return shuffle_labels(Graph(n, g.edges), rng);
}

Graph random_dh(int n, Rng& rng) {
  if (n <= 0) return Graph(0);
  std::vector<std::vector<int>> adj(n);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int x = 1; x < n; ++x) {
    int w = uniform(rng, 0, x - 1);
    int op = uniform(rng, 0, 2);
    if (x == 1 && op == 1) op = 2;
    if (op == 0 || op == 1) {
      std::vector<int> nb = adj[w];
      for (int y : nb) add(x, y);
      if (op == 0) add(x, w);
    } else {
      add(x, w);
    }
  }
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b : adj[a])
      if (a < b) e.emplace_back(a, b);
  return shuffle_labels(Graph(n, e), rng);
}

}  // namespace tww
