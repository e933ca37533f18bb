#pragma once

#include <cstdint>
#include <optional>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct OracleOptions {
  int max_n = 10;  // hard cap, at most 16
  std::optional<std::uint64_t> budget;  // node expansions
};

struct OracleResult {
  std::optional<int> width;  // empty: inconclusive
  std::uint64_t expansions = 0;
  std::optional<ContractionSequence> witness;

  bool inconclusive() const { return !width.has_value(); }
};

/// Exact twin-width by exhaustive search over contraction orders.
OracleResult brute_force_tww(const Graph& g, const OracleOptions& opt = {});

/// Whether a 1-sequence exists in which s becomes red-incident only after
/// every other vertex has (vacuously true if s never does). Empty: inconclusive.
std::optional<bool> brute_force_has_1_sequence_with_last(const Graph& g, int s, const OracleOptions& opt = {});

}  // namespace tww
