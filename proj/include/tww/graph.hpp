#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tww {

/// Raised when an operation is called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on 0..n-1. Immutable after construction.
class Graph {
 public:
  static constexpr int kMatrixLimit = 4096;

  Graph() = default;
  explicit Graph(int n);
  /// Throws PreconditionError on loops, duplicates or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  bool adjacent(int u, int v) const;
  std::span<const int> neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void build_matrix();

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new id -> old id
  std::vector<int> from_original;  // old id -> new id or -1
};

/// Vertices keep the order given in `s`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);
/// Same graph without the id maps; cost O(|s| + edges touched), not O(n).
Graph induced_graph(const Graph& g, std::span<const int> s);
Graph complement(const Graph& g);
bool is_connected(const Graph& g);
/// Connected components, each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
/// A vertex outside s adjacent to some but not all of s, or -1.
int find_splitter(const Graph& g, std::span<const int> s);
/// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace tww
