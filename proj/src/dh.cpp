#include "tww/dh.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "tww/modular.hpp"
#include "tww/permgraph.hpp"
#include "tww/tww1.hpp"

namespace tww {

const char* to_string(EliminationKind k) {
  switch (k) {
    case EliminationKind::true_twin: return "true-twin";
    case EliminationKind::false_twin: return "false-twin";
    case EliminationKind::pendant: return "pendant";
  }
  return "?";
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Neighbourhood hashes bucketed for twin lookup.
class Buckets {
 public:
  void insert(std::uint64_t h, int v) {
    auto& b = map_[h];
    b.insert(v);
    if (b.size() == 2) multi_.insert(h);
  }
  void erase(std::uint64_t h, int v) {
    auto it = map_.find(h);
    it->second.erase(v);
    if (it->second.size() == 1) multi_.erase(h);
    if (it->second.empty()) map_.erase(it);
  }
  // Some bucket with two vertices, or nullptr.
  const std::set<int>* any_multi() const {
    if (multi_.empty()) return nullptr;
    return &map_.at(*multi_.begin());
  }

 private:
  std::map<std::uint64_t, std::set<int>> map_;
  std::set<std::uint64_t> multi_;
};

class Eliminator {
 public:
  explicit Eliminator(const Graph& g) : n_(g.order()), adj_(n_), key_(n_), open_(n_, 0), alive_(n_, 1) {
    for (int v = 0; v < n_; ++v) key_[v] = splitmix(0x6468000000000000ULL + v);
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbours(v)) {
        adj_[v].insert(w);
        open_[v] += key_[w];
      }
      add(v);
    }
  }

  std::optional<EliminationOrder> run() {
    EliminationOrder out;
    int left = n_;
    while (left > 1) {
      EliminationStep step{};
      if (!deg1_.empty()) {
        int x = *deg1_.begin();
        step = {x, EliminationKind::pendant, *adj_[x].begin()};
      } else if (auto b = open_buckets_.any_multi()) {
        auto [x, w] = pair_of(*b);
        step = {x, EliminationKind::false_twin, w};
      } else if (auto c = closed_buckets_.any_multi()) {
        auto [x, w] = pair_of(*c);
        step = {x, EliminationKind::true_twin, w};
      } else {
        return std::nullopt;
      }
      out.steps.push_back(step);
      remove(step.vertex);
      --left;
    }
    for (int v = 0; v < n_; ++v)
      if (alive_[v]) out.last = v;
    return out;
  }

 private:
  std::uint64_t closed(int v) const { return splitmix(open_[v] + key_[v]); }

  void add(int v) {
    open_buckets_.insert(open_[v], v);
    closed_buckets_.insert(closed(v), v);
    if (adj_[v].size() == 1) deg1_.insert(v);
  }
  void drop(int v) {
    open_buckets_.erase(open_[v], v);
    closed_buckets_.erase(closed(v), v);
    deg1_.erase(v);
  }

  void remove(int x) {
    drop(x);
    alive_[x] = 0;
    for (int y : adj_[x]) {
      drop(y);
      adj_[y].erase(x);
      open_[y] -= key_[x];
      add(y);
    }
    adj_[x].clear();
  }

  std::pair<int, int> pair_of(const std::set<int>& b) const {
    auto it = b.begin();
    int w = *it++, x = *it;
    auto strip = [&](int a, int other) {
      std::vector<int> s;
      for (int y : adj_[a])
        if (y != other) s.push_back(y);
      std::sort(s.begin(), s.end());
      return s;
    };
    if (strip(x, w) != strip(w, x)) throw std::logic_error("neighbourhood hash collision");
    return {x, w};
  }

  int n_;
  std::vector<std::unordered_set<int>> adj_;
  std::vector<std::uint64_t> key_, open_;
  std::vector<char> alive_;
  Buckets open_buckets_, closed_buckets_;
  std::set<int> deg1_;
};

}  // namespace

std::optional<EliminationOrder> dh_elimination(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  return Eliminator(g).run();
}

void validate_elimination(const Graph& g, const EliminationOrder& order) {
  int n = g.order();
  if (n == 0 || static_cast<int>(order.steps.size()) != n - 1) throw PreconditionError("elimination has wrong length");
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.neighbours(v).begin(), g.neighbours(v).end());
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < order.steps.size(); ++i) {
    auto [x, kind, w] = order.steps[i];
    std::string at = "elimination step " + std::to_string(i + 1) + ": ";
    if (x < 0 || x >= n || w < 0 || w >= n || x == w || !alive[x] || !alive[w])
      throw PreconditionError(at + "bad vertex");
    bool ok;
    if (kind == EliminationKind::pendant) {
      ok = adj[x].size() == 1 && adj[x].count(w);
    } else {
      auto a = adj[x], b = adj[w];
      bool edge = a.erase(w) > 0;
      b.erase(x);
      ok = a == b && edge == (kind == EliminationKind::true_twin);
    }
    if (!ok) throw PreconditionError(at + std::string(to_string(kind)) + " condition fails");
    alive[x] = 0;
    for (int y : adj[x]) adj[y].erase(x);
    adj[x].clear();
  }
  if (order.last < 0 || order.last >= n || !alive[order.last]) throw PreconditionError("bad last vertex");
}

ContractionSequence dh_2_sequence(const Graph& g, const EliminationOrder& order) {
  validate_elimination(g, order);
  int n = g.order();
  ContractionSequence seq{n, {}, 2};
  int next = n;
  auto con = [&](int a, int b) {
    seq.steps.emplace_back(a, b);
    return next++;
  };
  // cur[v]: trigraph vertex holding v; pend[v]: red pendant part hanging on it.
  std::vector<int> cur(n), pend(n, -1);
  for (int v = 0; v < n; ++v) cur[v] = v;
  for (auto [x, kind, w] : order.steps) {
    if (kind == EliminationKind::pendant) {
      int y = cur[x];
      if (pend[x] != -1) y = con(y, pend[x]);
      pend[w] = pend[w] == -1 ? y : con(pend[w], y);
    } else {
      cur[w] = con(cur[w], cur[x]);
      if (pend[w] != -1 && pend[x] != -1) pend[w] = con(pend[w], pend[x]);
      else if (pend[x] != -1) pend[w] = pend[x];
    }
  }
  if (pend[order.last] != -1) con(cur[order.last], pend[order.last]);
  return seq;
}

bool is_at_free(const Graph& g) {
  int n = g.order();
  // comp[c][v]: component of v in G - N[c], or -1 inside N[c].
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (int c = 0; c < n; ++c) {
    auto& lab = comp[c];
    std::vector<char> blocked(n, 0);
    blocked[c] = 1;
    for (int w : g.neighbours(c)) blocked[w] = 1;
    int k = 0;
    for (int s = 0; s < n; ++s) {
      if (blocked[s] || lab[s] != -1) continue;
      std::vector<int> stack{s};
      lab[s] = k;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(u))
          if (!blocked[w] && lab[w] == -1) {
            lab[w] = k;
            stack.push_back(w);
          }
      }
      ++k;
    }
  }
  auto joined = [&](int a, int b, int c) { return comp[c][a] != -1 && comp[c][a] == comp[c][b]; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a)) return false;
    }
  return true;
}

ContractionSequence combine_component_sequences(const Graph& g, const std::vector<std::vector<int>>& components,
                                                const std::vector<ContractionSequence>& seqs) {
  int n = g.order();
  ContractionSequence out{n, {}, 0};
  int next = n;
  std::vector<int> roots;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    const auto& seq = seqs[i];
    int k = static_cast<int>(comp.size());
    if (seq.n0 != k || !seq.complete()) throw PreconditionError("component sequence does not match");
    std::vector<int> id(comp.begin(), comp.end());
    for (auto [u, v] : seq.steps) {
      out.steps.emplace_back(id[u], id[v]);
      id.push_back(next++);
    }
    roots.push_back(id.back());
    out.claimed_width = std::max(out.claimed_width, seq.claimed_width);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    out.steps.emplace_back(roots[0], roots[i]);
    roots[0] = next++;
  }
  return out;
}

DHClassification classify_dh_twin_width(const Graph& g) {
  DHClassification out;
  if (g.order() == 0) {
    out.width = 0;
    out.certificate = ContractionSequence{0, {}, 0};
    return out;
  }
  auto comps = connected_components(g);
  std::vector<int> cls;
  std::vector<ContractionSequence> seqs;
  int width = 0;
  for (const auto& comp : comps) {
    Graph h = induced_graph(g, comp);
    auto order = dh_elimination(h);
    if (!order) {
      out.failing_component = *std::min_element(comp.begin(), comp.end());
      return out;
    }
    int c;
    if (is_cograph(modular_decomposition(h))) c = 0;
    else if (compute_realiser(h)) c = 1;
    else c = 2;
    width = std::max(width, c);
    if (c <= 1) {
      auto rec = recognize(h);
      if (!rec.accepted()) throw std::logic_error("distance-hereditary permutation component was refused");
      seqs.push_back(*rec.sequence);
    } else {
      seqs.push_back(dh_2_sequence(h, *order));
    }
  }
  ContractionSequence cert = combine_component_sequences(g, comps, seqs);
  cert.claimed_width = width;
  if (!verify_sequence(g, cert, width).ok()) throw std::logic_error("distance-hereditary certificate failed verification");
  out.width = width;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace tww
