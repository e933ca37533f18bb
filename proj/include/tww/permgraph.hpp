#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

/// Two linear orders on V, stored as 1-based positions: sigma[v], tau[v].
struct Realiser {
  std::vector<int> sigma;
  std::vector<int> tau;

  int size() const { return static_cast<int>(sigma.size()); }
  bool operator==(const Realiser&) const = default;
};

enum class Order { sigma, tau };

struct IntervalRef {
  Order order = Order::sigma;
  int lo = 1;
  int hi = 1;
};

/// Vertices listed by increasing position.
std::vector<int> order_of(std::span<const int> positions);
/// Inverse of order_of.
std::vector<int> positions_of(std::span<const int> order);
bool is_valid_realiser(const Realiser& r);
/// Realiser from vertex orders.
Realiser realiser_from_orders(std::span<const int> sigma_order, std::span<const int> tau_order);

Graph graph_from_realiser(const Realiser& r);
/// Whether g is exactly the inversion graph of r, in O(n log n + m).
bool realises(const Realiser& r, const Graph& g);
std::optional<Realiser> compute_realiser(const Graph& g);
/// Realiser of a prime graph by ordered partition refinement; empty when g
/// is not a permutation graph (or not prime).
std::optional<Realiser> prime_realiser(const Graph& g);

std::vector<int> extremal_vertices(const Realiser& r);
/// Whether s is a set of consecutive positions in `positions`.
bool is_interval(std::span<const int> positions, std::span<const int> s);
/// Interval of sigma or of tau.
bool is_realiser_interval(const Realiser& r, std::span<const int> s);
bool is_common_interval(const Realiser& r, std::span<const int> s);
/// Common-interval test; with `check_module` it also throws std::logic_error
/// when a common interval fails to be a module of g.
bool is_common_interval_module(const Graph& g, const Realiser& r, std::span<const int> s, bool check_module = false);
bool is_module(const Graph& g, std::span<const int> s);

/// Realiser built inductively from a width-1 sequence, whose parts are
/// intervals at every step. Throws PreconditionError if seq is not a 1-sequence.
Realiser build_realiser_from_sequence(const Graph& g, const ContractionSequence& seq);
/// Checks the interval properties of every trigraph of seq against r; empty on success.
std::string check_realiser_respects_sequence(const Graph& g, const Realiser& r, const ContractionSequence& seq);

struct Segment {
  int vertex;
  int top;     // sigma slot
  int bottom;  // tau slot
};
std::vector<Segment> diagram_layout(const Realiser& r);
/// Number of pairwise crossings (= edges of the realised graph).
long long count_crossings(const Realiser& r);

Realiser swap_orders(const Realiser& r);
Realiser reverse_both(const Realiser& r);
Realiser reverse_tau(const Realiser& r);

}  // namespace tww
