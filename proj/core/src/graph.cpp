#include "latwalk/graph.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <unordered_set>

namespace latwalk {

// -- FiniteGraph ---------------------------------------------------------------

FiniteGraph::FiniteGraph(std::vector<Vertex> vertices,
                         std::vector<std::vector<index_type>> adjacency,
                         std::optional<index_type> root, std::string name)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)), root_(root),
      name_(std::move(name))
{
    if (vertices_.size() >= std::numeric_limits<index_type>::max()) {
        throw ResourceLimit("finite graph too large for 32-bit vertex indices");
    }
    if (adjacency_.size() != vertices_.size()) {
        throw InvalidParameter("adjacency list count does not match vertex count");
    }
    dim_ = vertices_.empty() ? 0 : vertices_.front().dim();
    index_.reserve(vertices_.size());
    for (index_type i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].dim() != dim_) {
            throw InvalidParameter("mixed vertex dimensions in graph '" + name_ + "'");
        }
        if (!index_.emplace(vertices_[i], i).second) {
            throw InvalidParameter("duplicate vertex " + vertices_[i].to_string());
        }
    }
    std::size_t half_edges = 0;
    for (index_type i = 0; i < adjacency_.size(); ++i) {
        auto& nb = adjacency_[i];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw InvalidParameter("duplicate neighbor at vertex " + vertices_[i].to_string());
        }
        for (auto j : nb) {
            if (j >= vertices_.size()) {
                throw InvalidParameter("neighbor index out of range");
            }
            if (j == i) {
                throw InvalidParameter("self-loop at vertex " + vertices_[i].to_string());
            }
        }
        half_edges += nb.size();
    }
    for (index_type i = 0; i < adjacency_.size(); ++i) {
        for (auto j : adjacency_[i]) {
            if (!std::binary_search(adjacency_[j].begin(), adjacency_[j].end(), i)) {
                throw InvalidParameter("asymmetric adjacency between " + vertices_[i].to_string() +
                                       " and " + vertices_[j].to_string());
            }
        }
    }
    edge_count_ = half_edges / 2;
    if (root_ && *root_ >= vertices_.size()) {
        throw InvalidParameter("root index out of range");
    }
}

FiniteGraph FiniteGraph::from_edges(std::vector<Vertex> vertices,
                                    const std::vector<std::pair<index_type, index_type>>& edges,
                                    std::optional<index_type> root, std::string name)
{
    std::vector<std::vector<index_type>> adj(vertices.size());
    for (auto [a, b] : edges) {
        if (a >= vertices.size() || b >= vertices.size()) {
            throw InvalidParameter("edge endpoint out of range");
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return FiniteGraph(std::move(vertices), std::move(adj), root, std::move(name));
}

std::optional<FiniteGraph::index_type> FiniteGraph::index_of(const Vertex& v) const
{
    auto it = index_.find(v);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool FiniteGraph::adjacent(index_type i, index_type j) const
{
    const auto& nb = adjacency_.at(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<FiniteGraph::index_type, FiniteGraph::index_type>> FiniteGraph::edges() const
{
    std::vector<std::pair<index_type, index_type>> out;
    out.reserve(edge_count_);
    for (index_type i = 0; i < adjacency_.size(); ++i) {
        for (auto j : adjacency_[i]) {
            if (i < j) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

FiniteGraph FiniteGraph::with_root(std::optional<index_type> root) const
{
    if (root && *root >= vertices_.size()) {
        throw InvalidParameter("root index out of range");
    }
    FiniteGraph g = *this;
    g.root_ = root;
    g.radius_.reset();
    return g;
}

FiniteGraph FiniteGraph::with_name(std::string name) const
{
    FiniteGraph g = *this;
    g.name_ = std::move(name);
    return g;
}

FiniteGraph FiniteGraph::as_ball(index_type root, int radius) const
{
    FiniteGraph g = with_root(root);
    g.radius_ = radius;
    return g;
}

// -- ImplicitGraph -------------------------------------------------------------

ImplicitGraph::ImplicitGraph(std::size_t dim, std::string name, NeighborFn neighbors,
                             MemberFn contains)
    : dim_(dim), name_(std::move(name)), neighbors_(std::move(neighbors)),
      contains_(std::move(contains))
{
}

ImplicitGraph ImplicitGraph::from_finite(std::shared_ptr<const FiniteGraph> g)
{
    auto dim = g->dim();
    auto name = g->name();
    return ImplicitGraph(
        dim, std::move(name),
        [g](const Vertex& v, std::vector<Vertex>& out) {
            auto i = g->index_of(v);
            if (!i) {
                return;
            }
            for (auto j : g->neighbors(*i)) {
                out.push_back(g->vertex(j));
            }
        },
        [g](const Vertex& v) { return g->contains(v); });
}

bool ImplicitGraph::contains(const Vertex& v) const
{
    return v.dim() == dim_ && contains_(v);
}

std::vector<Vertex> ImplicitGraph::neighbors(const Vertex& v) const
{
    std::vector<Vertex> out;
    neighbors_(v, out);
    std::sort(out.begin(), out.end());
    return out;
}

ImplicitGraph as_implicit(const Graph& g)
{
    if (const auto* f = std::get_if<FiniteGraph>(&g)) {
        return ImplicitGraph::from_finite(std::make_shared<const FiniteGraph>(*f));
    }
    return std::get<ImplicitGraph>(g);
}

std::size_t graph_dim(const Graph& g)
{
    return std::visit([](const auto& x) { return x.dim(); }, g);
}

std::string graph_name(const Graph& g)
{
    return std::visit([](const auto& x) { return x.name(); }, g);
}

// -- base graphs -----------------------------------------------------------------

FiniteGraph path_graph(int n)
{
    if (n < 1) {
        throw InvalidParameter("path_graph: n must be >= 1, got " + std::to_string(n));
    }
    std::vector<Vertex> vs;
    std::vector<std::pair<FiniteGraph::index_type, FiniteGraph::index_type>> edges;
    for (int i = 0; i < n; ++i) {
        vs.push_back(Vertex{i});
        if (i > 0) {
            edges.emplace_back(i - 1, i);
        }
    }
    return FiniteGraph::from_edges(std::move(vs), edges, 0, "P" + std::to_string(n));
}

ImplicitGraph integer_line()
{
    return ImplicitGraph(
        1, "Z",
        [](const Vertex& v, std::vector<Vertex>& out) {
            out.push_back(Vertex{v[0] - 1});
            out.push_back(Vertex{v[0] + 1});
        },
        [](const Vertex&) { return true; });
}

ImplicitGraph half_line()
{
    return ImplicitGraph(
        1, "Z+",
        [](const Vertex& v, std::vector<Vertex>& out) {
            if (v[0] > 0) {
                out.push_back(Vertex{v[0] - 1});
            }
            out.push_back(Vertex{v[0] + 1});
        },
        [](const Vertex& v) { return v[0] >= 0; });
}

// -- products ----------------------------------------------------------------------

namespace {

using index_type = FiniteGraph::index_type;

std::vector<Vertex> product_vertices(const FiniteGraph& g1, const FiniteGraph& g2)
{
    std::vector<Vertex> vs;
    vs.reserve(g1.size() * g2.size());
    for (const auto& a : g1.vertices()) {
        for (const auto& b : g2.vertices()) {
            vs.push_back(Vertex::concat(a, b));
        }
    }
    return vs;
}

std::optional<index_type> product_root(const FiniteGraph& g1, const FiniteGraph& g2)
{
    if (g1.root() && g2.root()) {
        return static_cast<index_type>(*g1.root() * g2.size() + *g2.root());
    }
    return std::nullopt;
}

} // namespace

FiniteGraph kronecker(const FiniteGraph& g1, const FiniteGraph& g2)
{
    const auto n2 = static_cast<index_type>(g2.size());
    std::vector<std::vector<index_type>> adj(g1.size() * g2.size());
    for (index_type i = 0; i < g1.size(); ++i) {
        for (index_type j = 0; j < n2; ++j) {
            auto& nb = adj[i * n2 + j];
            for (auto i2 : g1.neighbors(i)) {
                for (auto j2 : g2.neighbors(j)) {
                    nb.push_back(i2 * n2 + j2);
                }
            }
        }
    }
    return FiniteGraph(product_vertices(g1, g2), std::move(adj), product_root(g1, g2),
                       "(" + g1.name() + " xK " + g2.name() + ")");
}

FiniteGraph cartesian(const FiniteGraph& g1, const FiniteGraph& g2)
{
    const auto n2 = static_cast<index_type>(g2.size());
    std::vector<std::vector<index_type>> adj(g1.size() * g2.size());
    for (index_type i = 0; i < g1.size(); ++i) {
        for (index_type j = 0; j < n2; ++j) {
            auto& nb = adj[i * n2 + j];
            for (auto i2 : g1.neighbors(i)) {
                nb.push_back(i2 * n2 + j);
            }
            for (auto j2 : g2.neighbors(j)) {
                nb.push_back(i * n2 + j2);
            }
        }
    }
    return FiniteGraph(product_vertices(g1, g2), std::move(adj), product_root(g1, g2),
                       "(" + g1.name() + " xC " + g2.name() + ")");
}

namespace {

enum class ProductKind { kronecker, cartesian };

ImplicitGraph implicit_product(const ImplicitGraph& g1, const ImplicitGraph& g2, ProductKind kind)
{
    const std::size_t d1 = g1.dim();
    const std::size_t d2 = g2.dim();
    auto neighbors = [g1, g2, d1, kind](const Vertex& v, std::vector<Vertex>& out) {
        const Vertex x = v.head(d1);
        const Vertex y = v.tail(d1);
        std::vector<Vertex> nx;
        std::vector<Vertex> ny;
        g1.append_neighbors(x, nx);
        g2.append_neighbors(y, ny);
        if (kind == ProductKind::kronecker) {
            for (const auto& a : nx) {
                for (const auto& b : ny) {
                    out.push_back(Vertex::concat(a, b));
                }
            }
        } else {
            for (const auto& a : nx) {
                out.push_back(Vertex::concat(a, y));
            }
            for (const auto& b : ny) {
                out.push_back(Vertex::concat(x, b));
            }
        }
    };
    auto contains = [g1, g2, d1](const Vertex& v) {
        return g1.contains(v.head(d1)) && g2.contains(v.tail(d1));
    };
    const char* op = kind == ProductKind::kronecker ? " xK " : " xC ";
    return ImplicitGraph(d1 + d2, "(" + g1.name() + op + g2.name() + ")", std::move(neighbors),
                         std::move(contains));
}

} // namespace

Graph kronecker(const Graph& g1, const Graph& g2)
{
    if (std::holds_alternative<FiniteGraph>(g1) && std::holds_alternative<FiniteGraph>(g2)) {
        return kronecker(std::get<FiniteGraph>(g1), std::get<FiniteGraph>(g2));
    }
    return implicit_product(as_implicit(g1), as_implicit(g2), ProductKind::kronecker);
}

Graph cartesian(const Graph& g1, const Graph& g2)
{
    if (std::holds_alternative<FiniteGraph>(g1) && std::holds_alternative<FiniteGraph>(g2)) {
        return cartesian(std::get<FiniteGraph>(g1), std::get<FiniteGraph>(g2));
    }
    return implicit_product(as_implicit(g1), as_implicit(g2), ProductKind::cartesian);
}

ImplicitGraph restrict_component(const ImplicitGraph& g, ImplicitGraph::MemberFn in_component,
                                 std::string name)
{
    return ImplicitGraph(
        g.dim(), std::move(name),
        [g](const Vertex& v, std::vector<Vertex>& out) { g.append_neighbors(v, out); },
        [g, in_component = std::move(in_component)](const Vertex& v) {
            return g.contains(v) && in_component(v);
        });
}

ImplicitGraph::MemberFn equal_parity(std::vector<std::size_t> axes)
{
    return [axes = std::move(axes)](const Vertex& v) {
        if (axes.empty()) {
            return true;
        }
        const auto p = v[axes.front()] & 1;
        return std::all_of(axes.begin(), axes.end(), [&](std::size_t a) { return (v[a] & 1) == p; });
    };
}

bool validate_component(const ImplicitGraph& g, const Vertex& root, int radius,
                        std::size_t vertex_budget)
{
    const FiniteGraph b = ball(g, root, radius, vertex_budget);
    std::vector<Vertex> nb;
    for (const auto& v : b.vertices()) {
        if (!g.contains(v)) {
            return false;
        }
        nb.clear();
        g.append_neighbors(v, nb);
        for (const auto& w : nb) {
            if (!g.contains(w)) {
                return false;
            }
        }
    }
    return true;
}

// -- balls and structure -------------------------------------------------------------

FiniteGraph ball(const Graph& g, const Vertex& root, int radius, std::size_t vertex_budget)
{
    return ball(as_implicit(g), root, radius, vertex_budget);
}

FiniteGraph ball(const ImplicitGraph& g, const Vertex& root, int radius, std::size_t vertex_budget)
{
    if (radius < 0) {
        throw InvalidParameter("ball: radius must be >= 0");
    }
    if (!g.contains(root)) {
        throw InvalidParameter("ball: root " + root.to_string() + " is not a vertex of " + g.name());
    }
    std::unordered_map<Vertex, index_type, VertexHash> index;
    std::vector<Vertex> order{root};
    index.emplace(root, 0);

    std::vector<Vertex> frontier{root};
    std::vector<Vertex> next;
    std::vector<Vertex> nb;
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        next.clear();
        std::unordered_set<Vertex, VertexHash> seen_layer;
        for (const auto& v : frontier) {
            nb.clear();
            g.append_neighbors(v, nb);
            for (const auto& w : nb) {
                if (!index.count(w) && seen_layer.insert(w).second) {
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        if (order.size() + next.size() > vertex_budget) {
            throw ResourceLimit("ball of radius " + std::to_string(radius) + " in " + g.name() +
                                " exceeds vertex budget " + std::to_string(vertex_budget));
        }
        for (const auto& w : next) {
            index.emplace(w, static_cast<index_type>(order.size()));
            order.push_back(w);
        }
        frontier.swap(next);
    }

    std::vector<std::vector<index_type>> adj(order.size());
    for (index_type i = 0; i < order.size(); ++i) {
        nb.clear();
        g.append_neighbors(order[i], nb);
        for (const auto& w : nb) {
            if (auto it = index.find(w); it != index.end()) {
                adj[i].push_back(it->second);
            }
        }
    }
    FiniteGraph out(std::move(order), std::move(adj), std::nullopt,
                    "ball(" + g.name() + "," + root.to_string() + "," + std::to_string(radius) + ")");
    return out.as_ball(0, radius);
}

FiniteGraph induced_subgraph(const FiniteGraph& g, const std::function<bool(const Vertex&)>& keep)
{
    std::vector<index_type> new_index(g.size(), std::numeric_limits<index_type>::max());
    std::vector<Vertex> vs;
    for (index_type i = 0; i < g.size(); ++i) {
        if (keep(g.vertex(i))) {
            new_index[i] = static_cast<index_type>(vs.size());
            vs.push_back(g.vertex(i));
        }
    }
    std::vector<std::vector<index_type>> adj(vs.size());
    for (index_type i = 0; i < g.size(); ++i) {
        if (new_index[i] == std::numeric_limits<index_type>::max()) {
            continue;
        }
        for (auto j : g.neighbors(i)) {
            if (new_index[j] != std::numeric_limits<index_type>::max()) {
                adj[new_index[i]].push_back(new_index[j]);
            }
        }
    }
    std::optional<index_type> root;
    if (g.root() && new_index[*g.root()] != std::numeric_limits<index_type>::max()) {
        root = new_index[*g.root()];
    }
    return FiniteGraph(std::move(vs), std::move(adj), root, g.name());
}

std::vector<FiniteGraph> connected_components(const FiniteGraph& g)
{
    constexpr int unseen = -1;
    std::vector<int> label(g.size(), unseen);
    int count = 0;
    for (index_type s = 0; s < g.size(); ++s) {
        if (label[s] != unseen) {
            continue;
        }
        std::deque<index_type> queue{s};
        label[s] = count;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbors(v)) {
                if (label[w] == unseen) {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }

    std::vector<FiniteGraph> parts;
    parts.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::unordered_set<Vertex, VertexHash> members;
        for (index_type i = 0; i < g.size(); ++i) {
            if (label[i] == c) {
                members.insert(g.vertex(i));
            }
        }
        parts.push_back(induced_subgraph(g, [&](const Vertex& v) { return members.count(v) != 0; }));
    }
    auto smallest = [](const FiniteGraph& h) {
        return *std::min_element(h.vertices().begin(), h.vertices().end());
    };
    std::sort(parts.begin(), parts.end(), [&](const FiniteGraph& a, const FiniteGraph& b) {
        return smallest(a) < smallest(b);
    });
    return parts;
}

std::vector<int> root_distances(const FiniteGraph& g)
{
    if (!g.root()) {
        throw InvalidParameter("root_distances: graph '" + g.name() + "' has no root");
    }
    std::vector<int> dist(g.size(), -1);
    std::deque<index_type> queue{*g.root()};
    dist[*g.root()] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::map<std::size_t, std::size_t> degree_histogram(const FiniteGraph& ball_graph,
                                                    int interior_radius)
{
    const auto r = ball_graph.ball_radius();
    if (!r) {
        throw InvalidParameter("degree_histogram: graph is not a ball");
    }
    if (interior_radius < 0 || interior_radius >= *r) {
        throw InvalidParameter("degree_histogram: interior radius " +
                               std::to_string(interior_radius) + " must lie in [0, " +
                               std::to_string(*r) + ")");
    }
    const auto dist = root_distances(ball_graph);
    std::map<std::size_t, std::size_t> hist;
    for (index_type i = 0; i < ball_graph.size(); ++i) {
        if (dist[i] >= 0 && dist[i] <= interior_radius) {
            ++hist[ball_graph.degree(i)];
        }
    }
    return hist;
}

std::set<std::pair<Vertex, Vertex>> edge_set(const FiniteGraph& g)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (auto [i, j] : g.edges()) {
        const auto& a = g.vertex(i);
        const auto& b = g.vertex(j);
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

void write_edge_list(std::ostream& out, const FiniteGraph& g)
{
    out << "# dim=" << g.dim() << " root=";
    if (g.root()) {
        out << g.vertex(*g.root()).to_string();
    } else {
        out << "none";
    }
    out << '\n';
    for (const auto& [a, b] : edge_set(g)) {
        out << a.to_string() << " -- " << b.to_string() << '\n';
    }
}

} // namespace latwalk
