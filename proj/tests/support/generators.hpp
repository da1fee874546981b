#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce; each generated case carries its seed in the failure message.

#include "latwalk/graph.hpp"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;
using Edge = std::pair<latwalk::FiniteGraph::index_type, latwalk::FiniteGraph::index_type>;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random simple graph on 1-D vertices with random root; optional connectivity.
inline latwalk::FiniteGraph graph(Rng& rng, int min_n, int max_n, bool connected)
{
    const int n = uniform(rng, min_n, max_n);
    const double p = std::uniform_real_distribution<double>(0.15, 0.75)(rng);
    std::bernoulli_distribution coin(p);
    std::set<Edge> edges;
    if (connected) {
        for (int i = 1; i < n; ++i) {
            edges.emplace(static_cast<std::uint32_t>(uniform(rng, 0, i - 1)),
                          static_cast<std::uint32_t>(i));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace(i, j);
            }
        }
    }
    std::vector<latwalk::Vertex> vs;
    for (int i = 0; i < n; ++i) {
        vs.push_back(latwalk::Vertex{i});
    }
    const auto root = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
    return latwalk::FiniteGraph::from_edges(vs, {edges.begin(), edges.end()}, root);
}

/// Random subset of vertex coordinates of a 1-D graph, as a membership mask.
inline std::vector<bool> subset(Rng& rng, std::size_t n)
{
    std::vector<bool> keep(n);
    for (std::size_t i = 0; i < n; ++i) {
        keep[i] = std::bernoulli_distribution(0.6)(rng);
    }
    return keep;
}

} // namespace gen
