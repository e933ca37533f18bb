#pragma once

// Independent brute-force references used by the tests.

#include <functional>
#include <set>
#include <vector>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww::testing {

/// All labelled graphs on n vertices (n <= 7), by pair mask.
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn);

bool brute_is_module(const Graph& g, const std::vector<int>& s);
/// Strong modules (including V and singletons), as sorted vectors.
std::set<std::vector<int>> brute_strong_modules(const Graph& g);
bool brute_is_prime(const Graph& g);
bool brute_is_permutation(const Graph& g);
bool brute_is_cograph(const Graph& g);  // P4-free
/// Distance-hereditary via distances in all connected induced subgraphs.
bool brute_is_distance_hereditary(const Graph& g);
bool brute_is_at_free(const Graph& g);
/// Checks the trigraph partition invariant against g by definition.
bool brute_trigraph_consistent(const Graph& g, const Trigraph& h);
/// Red degrees of every trigraph along seq, recomputed from parts only.
int brute_sequence_width(const Graph& g, const ContractionSequence& seq);
bool is_caterpillar(const Graph& tree);

}  // namespace tww::testing
