#pragma once

#include <vector>

#include "tww/graph.hpp"

namespace tww::detail {

enum class SplitRule {
  unordered,  // only the classes matter
  away,       // neighbours of the pivot move away from it
  toward,     // neighbours of the pivot move toward it
};

/// Ordered partition of V refined by neighbourhoods, starting from ({first}, V - first).
/// At the fixpoint every class other than {first} is a module of g.
class Refiner {
 public:
  Refiner(const Graph& g, int first, SplitRule rule);

  void run();
  bool all_singletons() const { return classes_ == static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  /// Classes in left-to-right order.
  std::vector<std::vector<int>> classes() const;

 private:
  bool pivot(int p);
  void enqueue(int v);

  const Graph& g_;
  SplitRule rule_;
  std::vector<int> order_, pos_, cls_;
  std::vector<int> start_, end_, mark_;
  std::vector<char> back_, inq_;
  std::vector<int> queue_, touched_;
  int classes_ = 0;
};

}  // namespace tww::detail
