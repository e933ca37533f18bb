#include "tww/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tww {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw PreconditionError("negative vertex count");
  build_matrix();
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw PreconditionError("duplicate edge");
  }
  m_ = edges.size();
  build_matrix();
}

void Graph::build_matrix() {
  bits_.clear();
  words_ = 0;
  if (n_ == 0 || n_ > kMatrixLimit) return;
  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

bool Graph::adjacent(int u, int v) const {
  if (words_)
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  InducedSubgraph r;
  r.from_original.assign(static_cast<std::size_t>(g.order()), -1);
  r.to_original.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = s[i];
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (r.from_original[static_cast<std::size_t>(v)] != -1) throw PreconditionError("repeated vertex");
    r.from_original[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int w : g.neighbours(s[i])) {
      int j = r.from_original[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  r.graph = Graph(static_cast<int>(s.size()), edges);
  return r;
}

Graph induced_graph(const Graph& g, std::span<const int> s) {
  thread_local std::vector<int> index;
  if (index.size() < static_cast<std::size_t>(g.order())) index.resize(static_cast<std::size_t>(g.order()), -1);
  auto reset = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) index[static_cast<std::size_t>(s[i])] = -1;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = s[i];
    if (v < 0 || v >= g.order() || index[static_cast<std::size_t>(v)] != -1) {
      reset(i);
      throw PreconditionError(v < 0 || v >= g.order() ? "vertex " + std::to_string(v) + " out of range"
                                                      : "repeated vertex");
    }
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int w : g.neighbours(s[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  reset(s.size());
  return Graph(static_cast<int>(s.size()), edges);
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<Edge> edges;
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbours(u)) mark[static_cast<std::size_t>(v)] = 1;
    for (int v = u + 1; v < n; ++v)
      if (!mark[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    for (int v : g.neighbours(u)) mark[static_cast<std::size_t>(v)] = 0;
  }
  return Graph(n, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int w : g.neighbours(u))
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int find_splitter(const Graph& g, std::span<const int> s) {
  if (s.empty()) return -1;
  std::vector<int> count(g.order(), 0);
  std::vector<char> in(g.order(), 0);
  for (int v : s) in[v] = 1;
  for (int v : s)
    for (int w : g.neighbours(v))
      if (!in[w]) ++count[w];
  for (int u = 0; u < g.order(); ++u)
    if (!in[u] && count[u] > 0 && count[u] < static_cast<int>(s.size())) return u;
  return -1;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), edges);
}

}  // namespace tww
