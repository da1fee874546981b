#pragma once

#include "latwalk/vertex.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace latwalk {

/// Default cap on the number of vertices a single ball may materialize.
inline constexpr std::size_t default_vertex_budget = 5'000'000;

/// Explicit simple graph over lattice coordinates.
///
/// Adjacency lists hold vertex indices, sorted and duplicate free. The
/// constructor rejects self-loops, asymmetric adjacency and mixed dimensions.
/// A graph produced by ball() also remembers its root and radius.
class FiniteGraph {
public:
    using index_type = std::uint32_t;

    FiniteGraph() = default;
    FiniteGraph(std::vector<Vertex> vertices, std::vector<std::vector<index_type>> adjacency,
                std::optional<index_type> root = std::nullopt, std::string name = {});

    /// Builds a graph from an undirected edge list over `vertices`.
    static FiniteGraph from_edges(std::vector<Vertex> vertices,
                                  const std::vector<std::pair<index_type, index_type>>& edges,
                                  std::optional<index_type> root = std::nullopt,
                                  std::string name = {});

    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }

    const Vertex& vertex(index_type i) const { return vertices_.at(i); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<index_type>& neighbors(index_type i) const { return adjacency_.at(i); }
    std::size_t degree(index_type i) const { return adjacency_.at(i).size(); }
    std::optional<index_type> index_of(const Vertex& v) const;
    bool contains(const Vertex& v) const { return index_.count(v) != 0; }
    bool adjacent(index_type i, index_type j) const;

    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Edges as index pairs (i < j), ordered by i then j.
    std::vector<std::pair<index_type, index_type>> edges() const;

    std::optional<index_type> root() const noexcept { return root_; }
    /// Radius of the ball this graph was cut from, if any.
    std::optional<int> ball_radius() const noexcept { return radius_; }

    FiniteGraph with_root(std::optional<index_type> root) const;
    FiniteGraph with_name(std::string name) const;
    FiniteGraph as_ball(index_type root, int radius) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<index_type>> adjacency_;
    std::unordered_map<Vertex, index_type, VertexHash> index_;
    std::optional<index_type> root_;
    std::optional<int> radius_;
    std::string name_;
    std::size_t dim_ = 0;
    std::size_t edge_count_ = 0;
};

/// Locally finite graph given by a neighbor function over coordinate tuples.
class ImplicitGraph {
public:
    /// Appends the neighbors of a member vertex to the output vector.
    using NeighborFn = std::function<void(const Vertex&, std::vector<Vertex>&)>;
    using MemberFn = std::function<bool(const Vertex&)>;

    ImplicitGraph(std::size_t dim, std::string name, NeighborFn neighbors, MemberFn contains);

    /// Neighbor-function view of a finite graph (shares ownership).
    static ImplicitGraph from_finite(std::shared_ptr<const FiniteGraph> g);

    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    bool contains(const Vertex& v) const;
    /// Sorted neighbor list of `v`; `v` must be a member.
    std::vector<Vertex> neighbors(const Vertex& v) const;
    void append_neighbors(const Vertex& v, std::vector<Vertex>& out) const { neighbors_(v, out); }

private:
    std::size_t dim_;
    std::string name_;
    NeighborFn neighbors_;
    MemberFn contains_;
};

using Graph = std::variant<FiniteGraph, ImplicitGraph>;

ImplicitGraph as_implicit(const Graph& g);
std::size_t graph_dim(const Graph& g);
std::string graph_name(const Graph& g);

// -- base graphs -------------------------------------------------------------

/// Path on {0, ..., n-1}, rooted at 0.
FiniteGraph path_graph(int n);
/// The integer line Z.
ImplicitGraph integer_line();
/// The half line Z+ = {0, 1, 2, ...}.
ImplicitGraph half_line();

// -- products ----------------------------------------------------------------

/// (x,y) ~ (x',y') iff x ~ x' and y ~ y'.
FiniteGraph kronecker(const FiniteGraph& g1, const FiniteGraph& g2);
Graph kronecker(const Graph& g1, const Graph& g2);

/// (x,y) ~ (x',y') iff exactly one coordinate block moves along an edge.
FiniteGraph cartesian(const FiniteGraph& g1, const FiniteGraph& g2);
Graph cartesian(const Graph& g1, const Graph& g2);

/// Restricts membership to vertices satisfying `in_component`. The predicate
/// must describe a union of connected components (closed under adjacency).
ImplicitGraph restrict_component(const ImplicitGraph& g, ImplicitGraph::MemberFn in_component,
                                 std::string name);

/// Predicate: all listed axes carry coordinates of equal parity.
ImplicitGraph::MemberFn equal_parity(std::vector<std::size_t> axes);

/// Checks on a ball of `radius` that the component predicate of `g` is closed
/// under adjacency and that every vertex reached by BFS satisfies it.
bool validate_component(const ImplicitGraph& g, const Vertex& root, int radius,
                        std::size_t vertex_budget = default_vertex_budget);

// -- finite truncation and structure -------------------------------------------

/// Induced subgraph on vertices within graph distance `radius` of `root`.
/// Vertices are ordered by (distance, coordinates); the root has index 0.
FiniteGraph ball(const Graph& g, const Vertex& root, int radius,
                 std::size_t vertex_budget = default_vertex_budget);
FiniteGraph ball(const ImplicitGraph& g, const Vertex& root, int radius,
                 std::size_t vertex_budget = default_vertex_budget);

/// Induced subgraph on the vertices accepted by `keep`, original order kept.
FiniteGraph induced_subgraph(const FiniteGraph& g, const std::function<bool(const Vertex&)>& keep);

/// Maximal connected induced subgraphs, ordered by smallest vertex.
std::vector<FiniteGraph> connected_components(const FiniteGraph& g);

/// BFS distance of every vertex from the root (-1 if unreachable).
std::vector<int> root_distances(const FiniteGraph& g);

/// Degree -> count over vertices within `interior_radius` of the root of a
/// ball. Requires interior_radius < ball radius.
std::map<std::size_t, std::size_t> degree_histogram(const FiniteGraph& ball_graph,
                                                    int interior_radius);

/// Edges as normalized coordinate pairs (smaller vertex first).
std::set<std::pair<Vertex, Vertex>> edge_set(const FiniteGraph& g);

/// "# dim=<d> root=<coords>" followed by one "a -- b" line per edge.
void write_edge_list(std::ostream& out, const FiniteGraph& g);

} // namespace latwalk
