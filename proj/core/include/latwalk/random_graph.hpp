#pragma once

#include "latwalk/graph.hpp"

#include <random>

namespace latwalk {

/// G(n, p) on 1-D vertices {0, ..., n-1}, rooted at a uniformly chosen vertex.
FiniteGraph random_graph(std::mt19937_64& rng, int n, double p);

/// Random spanning tree plus independent extra edges with probability p.
FiniteGraph random_connected_graph(std::mt19937_64& rng, int n, double p);

} // namespace latwalk
