#pragma once

#include "latwalk/bigcount.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/lattice_catalog.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace latwalk {

/// Closed-walk counts W_0..W_{max_m} at a root.
struct WalkTable {
    std::string graph;
    Vertex root;
    std::vector<BigCount> counts;

    int max_m() const noexcept { return static_cast<int>(counts.size()) - 1; }
    const BigCount& at(int m) const;
};

/// Number of closed m-step walks at `o`, i.e. the diagonal entry (A^m)_oo.
///
/// The count is obtained by iterating u <- A u from the indicator of `o` on the
/// ball of radius floor(m/2), which contains every closed m-walk.
BigCount walk_count(const Graph& g, const Vertex& o, int m,
                    std::size_t vertex_budget = default_vertex_budget);

/// Same count on an explicit graph, bypassing the ball construction.
BigCount walk_count(const FiniteGraph& g, FiniteGraph::index_type o, int m);

/// W_0..W_{max_m} from a single vector iteration.
WalkTable walk_table(const Graph& g, const Vertex& o, int max_m,
                     std::size_t vertex_budget = default_vertex_budget);

/// Entry-wise product: the closed-walk table of the Kronecker product.
WalkTable kronecker_walk_product(const WalkTable& w1, const WalkTable& w2);

/// sum_k binom(m,k) w1[k] w2[m-k]: the count at the Cartesian product root.
BigCount cartesian_walk_convolution(const WalkTable& w1, const WalkTable& w2, int m);

/// W_m(0; P_n) by exact transfer iteration along the path.
BigCount path_endpoint_walks(int n, int m);

/// Closed-form W_m at the root of a named lattice. Zero for odd m.
BigCount closed_form_walks(const LatticeKind& kind, int m);

/// Checks sum_k binom(2m,2k) binom(2k,k) binom(2m-2k,m-k) == binom(2m,m)^2.
bool verify_binomial_identity(int m);
/// The left-hand sum of the identity above.
BigCount binomial_identity_lhs(int m);

struct CoincidenceRow {
    int m;
    BigCount a;
    BigCount b;
    bool equal;
};

struct CoincidenceReport {
    std::string graph_a;
    std::string graph_b;
    std::vector<CoincidenceRow> rows;
    bool all_equal = true;
};

/// Tabulates W_m for two rooted graphs side by side for m <= max_m.
CoincidenceReport moment_coincidence_report(const Graph& ga, const Vertex& oa, const Graph& gb,
                                            const Vertex& ob, int max_m,
                                            std::size_t vertex_budget = default_vertex_budget);

/// CSV with header "m,count"; counts as decimal strings.
void write_walk_table_csv(std::ostream& out, const WalkTable& table);

} // namespace latwalk
