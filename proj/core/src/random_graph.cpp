#include "latwalk/random_graph.hpp"

#include "latwalk/error.hpp"

#include <set>

namespace latwalk {

namespace {

std::vector<Vertex> line_vertices(int n)
{
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
        vs.push_back(Vertex{i});
    }
    return vs;
}

} // namespace

FiniteGraph random_graph(std::mt19937_64& rng, int n, double p)
{
    if (n < 1) {
        throw InvalidParameter("random_graph: n must be >= 1");
    }
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<FiniteGraph::index_type, FiniteGraph::index_type>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    const auto root = static_cast<FiniteGraph::index_type>(pick(rng));
    return FiniteGraph::from_edges(line_vertices(n), edges, root, "G(" + std::to_string(n) + ")");
}

FiniteGraph random_connected_graph(std::mt19937_64& rng, int n, double p)
{
    if (n < 1) {
        throw InvalidParameter("random_connected_graph: n must be >= 1");
    }
    std::set<std::pair<FiniteGraph::index_type, FiniteGraph::index_type>> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        edges.emplace(parent(rng), i);
    }
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace(i, j);
            }
        }
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    const auto root = static_cast<FiniteGraph::index_type>(pick(rng));
    return FiniteGraph::from_edges(line_vertices(n), {edges.begin(), edges.end()}, root,
                                   "T(" + std::to_string(n) + ")");
}

} // namespace latwalk
