#pragma once

#include <cstdint>
#include <random>

#include "tww/graph.hpp"

namespace tww {

struct Realiser;

using Rng = std::mt19937_64;

namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph star(int leaves);  // hub 0
/// K_{1,3} with every edge subdivided once; hub 0.
Graph spider();
/// P4 0-1-2-3 plus universal vertex 4.
Graph gem();
Graph house();
Graph domino();
}  // namespace named

/// Graph with edge probability p.
Graph random_graph(int n, double p, Rng& rng);
/// Uniform labelled graph from a bitmask over the n(n-1)/2 pairs.
Graph graph_from_pair_mask(int n, std::uint64_t mask);
Graph random_tree(int n, Rng& rng);
/// Random caterpillar: spine of random length with pendant leaves.
Graph random_caterpillar(int n, Rng& rng);
/// Random tree guaranteed to contain a subdivided K_{1,3}.
Graph random_non_caterpillar_tree(int n, Rng& rng);
/// Inversion graph of a uniformly random permutation; the realiser is returned too.
Graph random_realiser_graph(int n, Rng& rng, Realiser* out = nullptr);
/// Twin-width <= 1 graph grown by module attachments; O(n) edges.
Graph random_tww1(int n, Rng& rng);
/// Connected distance-hereditary graph grown by twins and pendants.
Graph random_dh(int n, Rng& rng);
/// Random relabelling.
Graph shuffle_labels(const Graph& g, Rng& rng);

}  // namespace tww
