#include "tww/permgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "refine.hpp"
#include "tww/modular.hpp"

namespace tww {

std::vector<int> order_of(std::span<const int> positions) {
  std::vector<int> out(positions.size(), -1);
  for (std::size_t v = 0; v < positions.size(); ++v) out[positions[v] - 1] = static_cast<int>(v);
  return out;
}

std::vector<int> positions_of(std::span<const int> order) {
  std::vector<int> out(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = static_cast<int>(i) + 1;
  return out;
}

bool is_valid_realiser(const Realiser& r) {
  int n = r.size();
  if (static_cast<int>(r.tau.size()) != n) return false;
  for (const auto* p : {&r.sigma, &r.tau}) {
    std::vector<char> seen(n + 1, 0);
    for (int x : *p) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

Realiser realiser_from_orders(std::span<const int> sigma_order, std::span<const int> tau_order) {
  return {positions_of(sigma_order), positions_of(tau_order)};
}

Graph graph_from_realiser(const Realiser& r) {
  if (!is_valid_realiser(r)) throw PreconditionError("realiser orders are not bijections");
  int n = r.size();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((r.sigma[u] - r.sigma[v]) * (r.tau[u] - r.tau[v]) < 0) e.emplace_back(u, v);
  return Graph(n, e);
}

long long count_crossings(const Realiser& r) {
  int n = r.size();
  std::vector<int> bit(n + 1, 0);
  long long inv = 0;
  auto sorted = order_of(r.sigma);
  for (int i = n - 1; i >= 0; --i) {
    int t = r.tau[sorted[i]];
    for (int x = t - 1; x > 0; x -= x & -x) inv += bit[x];
    for (int x = t; x <= n; x += x & -x) ++bit[x];
  }
  return inv;
}

bool realises(const Realiser& r, const Graph& g) {
  if (r.size() != g.order() || !is_valid_realiser(r)) return false;
  if (count_crossings(r) != static_cast<long long>(g.size())) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbours(u))
      if (u < v && (r.sigma[u] - r.sigma[v]) * (r.tau[u] - r.tau[v]) > 0) return false;
  return true;
}

namespace {

// Merge sort that terminates for any comparator.
void merge_sort(std::vector<int>& a, const std::function<bool(int, int)>& less) {
  std::vector<int> buf(a.size());
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo < a.size(); lo += 2 * width) {
      std::size_t mid = std::min(lo + width, a.size()), hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) buf[k++] = less(a[j], a[i]) ? a[j++] : a[i++];
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
    }
    a.swap(buf);
  }
}

std::optional<std::vector<int>> refined_order(const Graph& g, int start, detail::SplitRule rule) {
  detail::Refiner r(g, start, rule);
  r.run();
  if (!r.all_singletons()) return std::nullopt;
  return r.order();
}

}  // namespace

std::optional<Realiser> prime_realiser(const Graph& g) {
  int n = g.order();
  if (n == 0) return Realiser{};
  if (n == 1) return Realiser{{1}, {1}};
  using detail::SplitRule;
  auto pre1 = refined_order(g, 0, SplitRule::away);
  auto pre2 = refined_order(g, 0, SplitRule::toward);
  if (!pre1 || !pre2) return std::nullopt;
  auto l1 = refined_order(g, pre1->back(), SplitRule::away);
  auto l2 = refined_order(g, pre2->back(), SplitRule::toward);
  if (!l1 || !l2) return std::nullopt;
  auto p1 = positions_of(*l1), p2 = positions_of(*l2);
  std::vector<int> sigma(n), tau;
  std::iota(sigma.begin(), sigma.end(), 0);
  tau = sigma;
  merge_sort(sigma, [&](int a, int b) { return g.adjacent(a, b) ? p1[a] < p1[b] : p2[a] < p2[b]; });
  merge_sort(tau, [&](int a, int b) { return g.adjacent(a, b) ? p1[a] > p1[b] : p2[a] < p2[b]; });
  Realiser r = realiser_from_orders(sigma, tau);
  if (!realises(r, g)) return std::nullopt;
  return r;
}

std::optional<Realiser> compute_realiser(const Graph& g) {
  int n = g.order();
  if (n == 0) return Realiser{};
  MDTree t = modular_decomposition(g);
  int k = static_cast<int>(t.nodes.size());
  // Child orders per node for sigma and tau.
  std::vector<std::vector<int>> sig(k), tau(k);
  for (int x = 0; x < k; ++x) {
    const auto& node = t.nodes[x];
    if (node.kind == NodeKind::leaf) continue;
    int c = static_cast<int>(node.children.size());
    std::vector<int> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    if (node.kind == NodeKind::parallel) {
      sig[x] = tau[x] = idx;
    } else if (node.kind == NodeKind::series) {
      sig[x] = idx;
      tau[x].assign(idx.rbegin(), idx.rend());
    } else {
      auto q = prime_realiser(*node.quotient);
      if (!q) return std::nullopt;
      sig[x] = order_of(q->sigma);
      tau[x] = order_of(q->tau);
    }
  }
  auto flatten = [&](const std::vector<std::vector<int>>& child_order) {
    std::vector<int> out, stack{t.root};
    out.reserve(n);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      const auto& node = t.nodes[x];
      if (node.kind == NodeKind::leaf) {
        out.push_back(node.vertex);
        continue;
      }
      const auto& ord = child_order[x];
      for (auto it = ord.rbegin(); it != ord.rend(); ++it) stack.push_back(node.children[*it]);
    }
    return out;
  };
  Realiser r = realiser_from_orders(flatten(sig), flatten(tau));
  if (!realises(r, g)) return std::nullopt;
  return r;
}

std::vector<int> extremal_vertices(const Realiser& r) {
  int n = r.size();
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (r.sigma[v] == 1 || r.sigma[v] == n || r.tau[v] == 1 || r.tau[v] == n) out.push_back(v);
  return out;
}

bool is_interval(std::span<const int> positions, std::span<const int> s) {
  if (s.empty()) return true;
  int lo = positions[s[0]], hi = lo;
  for (int v : s) {
    lo = std::min(lo, positions[v]);
    hi = std::max(hi, positions[v]);
  }
  return hi - lo + 1 == static_cast<int>(s.size());
}

bool is_realiser_interval(const Realiser& r, std::span<const int> s) {
  return is_interval(r.sigma, s) || is_interval(r.tau, s);
}

bool is_common_interval(const Realiser& r, std::span<const int> s) {
  return is_interval(r.sigma, s) && is_interval(r.tau, s);
}

bool is_module(const Graph& g, std::span<const int> s) { return find_splitter(g, s) == -1; }

bool is_common_interval_module(const Graph& g, const Realiser& r, std::span<const int> s, bool check_module) {
  if (s.empty()) throw PreconditionError("empty vertex set");
  bool common = is_common_interval(r, s);
  if (common && check_module && !is_module(g, s))
    throw std::logic_error("common interval is not a module");
  return common;
}

Realiser swap_orders(const Realiser& r) { return {r.tau, r.sigma}; }

Realiser reverse_both(const Realiser& r) {
  Realiser out = r;
  int n = r.size();
  for (auto& x : out.sigma) x = n + 1 - x;
  for (auto& x : out.tau) x = n + 1 - x;
  return out;
}

Realiser reverse_tau(const Realiser& r) {
  Realiser out = r;
  int n = r.size();
  for (auto& x : out.tau) x = n + 1 - x;
  return out;
}

std::vector<Segment> diagram_layout(const Realiser& r) {
  std::vector<Segment> out;
  for (int v = 0; v < r.size(); ++v) out.push_back({v, r.sigma[v], r.tau[v]});
  return out;
}

}  // namespace tww
