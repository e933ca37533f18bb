#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

enum class Colour : unsigned char { black, red };

/// Trigraph obtained from a Graph by contractions. Ids follow the sequence
/// naming: originals are 0..n0-1, the k-th contraction creates n0+k-1.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(const Graph& g);

  int original_order() const { return n0_; }
  int next_id() const { return static_cast<int>(adj_.size()); }
  int active_count() const { return active_count_; }
  bool active(int x) const { return x >= 0 && x < next_id() && active_[x]; }
  std::vector<int> active_vertices() const;

  std::optional<Colour> edge(int x, int y) const;
  const std::unordered_map<int, Colour>& neighbours(int x) const { return adj_[x]; }
  int red_degree(int x) const { return red_deg_[x]; }
  int max_red_degree() const;
  std::size_t red_edge_count() const { return red_edges_; }
  const std::vector<int>& part(int x) const { return parts_[x]; }

  /// Contracts u and v; returns the fresh id. When `changed` is given, it
  /// receives every active vertex whose incident edges changed.
  int contract_in_place(int u, int v, std::vector<int>* changed = nullptr);

 private:
  int n0_ = 0;
  int active_count_ = 0;
  std::size_t red_edges_ = 0;
  std::vector<std::unordered_map<int, Colour>> adj_;
  std::vector<std::vector<int>> parts_;
  std::vector<int> red_deg_;
  std::vector<char> active_;
};

/// Value-semantics contraction; the input is left untouched.
Trigraph contract(const Trigraph& h, int u, int v);

struct ContractionSequence {
  int n0 = 0;
  std::vector<Edge> steps;
  int claimed_width = 0;

  bool complete() const { return steps.size() == static_cast<std::size_t>(n0 > 0 ? n0 - 1 : 0); }
  bool operator==(const ContractionSequence&) const = default;
};

struct VerifyReport {
  enum class Status { ok, width_exceeded, malformed };
  Status status = Status::ok;
  int failed_step = -1;        // 1-based
  int offending_vertex = -1;
  std::string message;
  bool partial = false;
  int max_red_degree = 0;
  std::vector<std::size_t> red_edges;  // after each step

  bool ok() const { return status == Status::ok; }
};

/// Simulates `seq` on g and checks every trigraph has red degree <= d.
VerifyReport verify_sequence(const Graph& g, const ContractionSequence& seq, int d);

/// Sequence induced on the vertices `subset` (new id i = subset[i]); steps
/// that merge a part disjoint from the subset disappear.
ContractionSequence restrict_sequence(const ContractionSequence& seq, std::span<const int> subset);

/// Checks ids per the naming convention without simulating; empty on success.
std::string sequence_structure_error(const ContractionSequence& seq);

}  // namespace tww
