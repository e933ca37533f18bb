#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class EliminationKind { true_twin, false_twin, pendant };
const char* to_string(EliminationKind k);

struct EliminationStep {
  int vertex;  // removed
  EliminationKind kind;
  int other;  // twin or the pendant's neighbour, still present
};

/// Removals that shrink a connected graph to `last`.
struct EliminationOrder {
  std::vector<EliminationStep> steps;
  int last = -1;
};

/// Twin/pendant elimination of a connected graph; empty iff g is not
/// distance-hereditary. Throws PreconditionError if g is disconnected or empty.
std::optional<EliminationOrder> dh_elimination(const Graph& g);

/// Throws PreconditionError unless `order` is a valid elimination of g.
void validate_elimination(const Graph& g, const EliminationOrder& order);

enum class SplitKind { leaf, clique, star };

struct SplitNode {
  SplitKind kind = SplitKind::leaf;
  int vertex = -1;          // leaves only
  std::vector<int> adj;     // tree neighbours; each edge is one marker
  int centre = -1;          // stars: the neighbour whose marker is the centre
};

/// Reduced split tree of a connected distance-hereditary graph, labelled by
/// cliques and stars.
struct SplitTree {
  std::vector<SplitNode> nodes;
  std::vector<int> leaf_of;  // vertex -> node

  int internal_count() const;
};

SplitTree split_tree_dh(const Graph& g, const EliminationOrder& order);
/// Leaves x, y adjacent iff every internal node on their path joins the two
/// markers by a label edge.
Graph accessibility_graph(const SplitTree& t);
/// Empty when t is reduced (degree >= 3, no mergeable neighbours).
std::string split_tree_defect(const SplitTree& t);
std::string split_tree_to_json(const SplitTree& t);

/// 0, 1 or 2 from the orientation of the stars. Throws PreconditionError on a
/// tree that is not reduced.
int classify_by_split_structure(const SplitTree& t);

/// Width-2 sequence following the elimination order.
ContractionSequence dh_2_sequence(const Graph& g, const EliminationOrder& order);

bool is_at_free(const Graph& g);

struct DHClassification {
  std::optional<int> width;  // empty: not distance-hereditary
  std::optional<ContractionSequence> certificate;
  int failing_component = -1;  // smallest vertex of a non-DH component

  bool distance_hereditary() const { return width.has_value(); }
};

DHClassification classify_dh_twin_width(const Graph& g);

/// One sequence for g from a sequence per connected component (in the
/// order of connected_components); roots are merged last.
ContractionSequence combine_component_sequences(const Graph& g, const std::vector<std::vector<int>>& components,
                                                const std::vector<ContractionSequence>& seqs);

}  // namespace tww
