#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/permgraph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

struct PeelOptions {
  /// When set, ties among doubly extremal vertices are broken at random.
  std::optional<std::uint64_t> tie_break_seed;
};

/// 1-sequence of the prime graph h in which s is the last vertex to become
/// red-incident, or empty if the peeling gets stuck.
std::optional<ContractionSequence> peel_prime(const Graph& h, const Realiser& r, int s, const PeelOptions& opt = {});

/// Tries the extremal vertices of a realiser in order sigma-first, sigma-last,
/// tau-first, tau-last. Throws PreconditionError if h is not prime.
std::optional<ContractionSequence> recognize_prime(const Graph& h, const PeelOptions& opt = {});

enum class RefusalReason { not_permutation, prime_node_peel_failed, structural };
const char* to_string(RefusalReason r);

struct Refusal {
  RefusalReason reason = RefusalReason::structural;
  int node = -1;  // node of the modular decomposition tree
  std::string detail;
};

struct RecognitionOutcome {
  std::optional<ContractionSequence> sequence;
  std::optional<Refusal> refusal;

  bool accepted() const { return sequence.has_value(); }
};

RecognitionOutcome recognize(const Graph& g, const PeelOptions& opt = {});

struct TheoryReport {
  bool one_red_edge = true;
  bool first_contraction = true;
  bool induced_chain = true;
  bool respects_realiser = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Structural properties of a 1-sequence of a prime graph.
TheoryReport check_sequence_theory(const Graph& g, const ContractionSequence& seq);

}  // namespace tww
