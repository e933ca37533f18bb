#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class NodeKind { leaf, series, parallel, prime };

const char* to_string(NodeKind k);

struct MDNode {
  NodeKind kind = NodeKind::leaf;
  int vertex = -1;            // leaves only
  std::vector<int> children;  // sorted by min_leaf
  int min_leaf = -1;
  int size = 1;               // number of leaves below
  std::optional<Graph> quotient;  // prime only; vertex i <-> children[i]
};

/// Modular decomposition tree. Nodes are stored in preorder with children
/// sorted by minimum leaf, so the tree is canonical for a given graph.
struct MDTree {
  std::vector<MDNode> nodes;
  int root = -1;

  int order() const { return root < 0 ? 0 : nodes[root].size; }
  std::vector<int> leaves(int node) const;
  std::vector<int> prime_nodes() const;
};

MDTree modular_decomposition(const Graph& g);
bool is_cograph(const MDTree& t);

class NotModularError : public std::invalid_argument {
 public:
  NotModularError(int splitter, int part)
      : std::invalid_argument("vertex " + std::to_string(splitter) + " splits part " + std::to_string(part)),
        splitter(splitter), part(part) {}
  int splitter;
  int part;
};

/// Graph on one representative (first element) per part. With `validate`
/// every part is checked to be a module.
Graph quotient(const Graph& g, const std::vector<std::vector<int>>& partition, bool validate = false);

class MissingSequenceError : public std::invalid_argument {
 public:
  explicit MissingSequenceError(int node)
      : std::invalid_argument("no sequence supplied for prime node " + std::to_string(node)), node(node) {}
  int node;
};

/// Complete sequence for the decomposed graph: each child module is contracted
/// to one vertex, then the node's quotient sequence (or a twin chain) runs.
/// Width is the maximum of the supplied claimed widths.
ContractionSequence assemble_sequence(const MDTree& t, const std::map<int, ContractionSequence>& prime_sequences);

std::string md_to_json(const MDTree& t);

}  // namespace tww
