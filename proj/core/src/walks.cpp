#include "latwalk/walks.hpp"

#include "latwalk/error.hpp"

#include <ostream>

namespace latwalk {

const BigCount& WalkTable::at(int m) const
{
    if (m < 0 || m > max_m()) {
        throw InvalidParameter("walk table for " + graph + " has no entry m=" + std::to_string(m));
    }
    return counts[static_cast<std::size_t>(m)];
}

namespace {

// Runs u <- A u for `steps` steps starting from the indicator of `root` and
// records u(root) after every step.
std::vector<BigCount> diagonal_sequence(const FiniteGraph& g, FiniteGraph::index_type root,
                                        int steps)
{
    std::vector<BigCount> u(g.size());
    std::vector<BigCount> next(g.size());
    u[root] = 1;
    std::vector<BigCount> diag{1};
    diag.reserve(static_cast<std::size_t>(steps) + 1);
    for (int t = 0; t < steps; ++t) {
        for (FiniteGraph::index_type x = 0; x < g.size(); ++x) {
            BigCount acc = 0;
            for (auto y : g.neighbors(x)) {
                if (!u[y].is_zero()) {
                    acc += u[y];
                }
            }
            next[x] = std::move(acc);
        }
        u.swap(next);
        diag.push_back(u[root]);
    }
    return diag;
}

void check_steps(int m)
{
    if (m < 0) {
        throw InvalidParameter("walk length must be >= 0, got " + std::to_string(m));
    }
}

} // namespace

BigCount walk_count(const Graph& g, const Vertex& o, int m, std::size_t vertex_budget)
{
    check_steps(m);
    const ImplicitGraph view = as_implicit(g);
    if (!view.contains(o)) {
        throw InvalidParameter("walk_count: " + o.to_string() + " is not a vertex of " +
                               view.name());
    }
    const FiniteGraph b = ball(view, o, m / 2, vertex_budget);
    return diagonal_sequence(b, 0, m).back();
}

BigCount walk_count(const FiniteGraph& g, FiniteGraph::index_type o, int m)
{
    check_steps(m);
    if (o >= g.size()) {
        throw InvalidParameter("walk_count: root index out of range");
    }
    return diagonal_sequence(g, o, m).back();
}

WalkTable walk_table(const Graph& g, const Vertex& o, int max_m, std::size_t vertex_budget)
{
    check_steps(max_m);
    const ImplicitGraph view = as_implicit(g);
    if (!view.contains(o)) {
        throw InvalidParameter("walk_table: " + o.to_string() + " is not a vertex of " +
                               view.name());
    }
    const FiniteGraph b = ball(view, o, max_m / 2, vertex_budget);
    return WalkTable{view.name(), o, diagonal_sequence(b, 0, max_m)};
}

WalkTable kronecker_walk_product(const WalkTable& w1, const WalkTable& w2)
{
    if (w1.max_m() != w2.max_m()) {
        throw InvalidParameter("kronecker_walk_product: tables cover different ranges (" +
                               std::to_string(w1.max_m()) + " vs " + std::to_string(w2.max_m()) +
                               ")");
    }
    WalkTable out{"(" + w1.graph + " xK " + w2.graph + ")", Vertex::concat(w1.root, w2.root), {}};
    out.counts.reserve(w1.counts.size());
    for (std::size_t m = 0; m < w1.counts.size(); ++m) {
        out.counts.push_back(w1.counts[m] * w2.counts[m]);
    }
    return out;
}

BigCount cartesian_walk_convolution(const WalkTable& w1, const WalkTable& w2, int m)
{
    check_steps(m);
    if (w1.max_m() < m || w2.max_m() < m) {
        throw InvalidParameter("cartesian_walk_convolution: tables do not cover m=" +
                               std::to_string(m));
    }
    BigCount sum = 0;
    BigCount c = 1; // binom(m, k), updated incrementally
    for (int k = 0; k <= m; ++k) {
        sum += c * w1.counts[k] * w2.counts[m - k];
        c = c * (m - k) / (k + 1);
    }
    return sum;
}

BigCount path_endpoint_walks(int n, int m)
{
    if (n < 1) {
        throw InvalidParameter("path_endpoint_walks: n must be >= 1");
    }
    check_steps(m);
    std::vector<BigCount> u(static_cast<std::size_t>(n));
    std::vector<BigCount> next(u.size());
    u[0] = 1;
    for (int t = 0; t < m; ++t) {
        for (int i = 0; i < n; ++i) {
            BigCount acc = 0;
            if (i > 0) {
                acc += u[i - 1];
            }
            if (i + 1 < n) {
                acc += u[i + 1];
            }
            next[i] = std::move(acc);
        }
        u.swap(next);
    }
    return u[0];
}

namespace {

// sum_k binom(2h,2k) C_k C_{h-k}
BigCount quarter_plane_count(long h)
{
    BigCount s = 0;
    for (long k = 0; k <= h; ++k) {
        s += binomial(2 * h, 2 * k) * catalan(k) * catalan(h - k);
    }
    return s;
}

// sum_k (2h)! (2k)! / ((h-k)!^2 k!^4)
BigCount cubic_count(long h)
{
    const BigCount f2h = factorial(2 * h);
    BigCount s = 0;
    for (long k = 0; k <= h; ++k) {
        const BigCount fk = factorial(k);
        const BigCount fhk = factorial(h - k);
        s += f2h * factorial(2 * k) / (fhk * fhk * fk * fk * fk * fk);
    }
    return s;
}

// sum_k (2h)! (2k)! / ((h-k)! (h-k+1)! k!^2 (k+1)!^2)
BigCount chamber_count(long h)
{
    const BigCount f2h = factorial(2 * h);
    BigCount s = 0;
    for (long k = 0; k <= h; ++k) {
        const BigCount fk = factorial(k);
        const BigCount fk1 = factorial(k + 1);
        s += f2h * factorial(2 * k) /
             (factorial(h - k) * factorial(h - k + 1) * fk * fk * fk1 * fk1);
    }
    return s;
}

// sum_k binom(2h,2k) C_k^2 C_{h-k}
BigCount mixed_count(long h)
{
    BigCount s = 0;
    for (long k = 0; k <= h; ++k) {
        const BigCount ck = catalan(k);
        s += binomial(2 * h, 2 * k) * ck * ck * catalan(h - k);
    }
    return s;
}

} // namespace

BigCount closed_form_walks(const LatticeKind& kind, int m)
{
    check_steps(m);
    if (m % 2 != 0) {
        return 0;
    }
    const long h = m / 2;
    using Id = LatticeKind::Id;
    switch (kind.id) {
    case Id::z:
        return central_binomial(h);
    case Id::zplus:
        return catalan(h);
    case Id::zplus_at_one:
        return catalan(h + 1);
    case Id::full_z2: {
        const BigCount b = central_binomial(h);
        return b * b;
    }
    case Id::half_plane:
        return catalan(h) * central_binomial(h);
    case Id::wedge: {
        const BigCount c = catalan(h);
        return c * c;
    }
    case Id::quarter_plane:
        return quarter_plane_count(h);
    case Id::strip:
        return central_binomial(h) * path_endpoint_walks(kind.n, m);
    case Id::diamond:
        return path_endpoint_walks(kind.k, m) * path_endpoint_walks(kind.l, m);
    case Id::bcc3: {
        const BigCount b = central_binomial(h);
        return b * b * b;
    }
    case Id::z3_cartesian:
        return cubic_count(h);
    case Id::chamber3:
        return chamber_count(h);
    case Id::mixed3:
        return mixed_count(h);
    case Id::z_x_zplus:
    case Id::zplus2_shifted:
        return catalan(h) * catalan(h + 1);
    }
    throw InvalidParameter("closed_form_walks: unsupported kind");
}

BigCount binomial_identity_lhs(int m)
{
    if (m < 0) {
        throw InvalidParameter("binomial identity: m must be >= 0");
    }
    BigCount s = 0;
    for (long k = 0; k <= m; ++k) {
        s += binomial(2L * m, 2 * k) * central_binomial(k) * central_binomial(m - k);
    }
    return s;
}

bool verify_binomial_identity(int m)
{
    const BigCount rhs = central_binomial(m);
    return binomial_identity_lhs(m) == rhs * rhs;
}

CoincidenceReport moment_coincidence_report(const Graph& ga, const Vertex& oa, const Graph& gb,
                                            const Vertex& ob, int max_m,
                                            std::size_t vertex_budget)
{
    const WalkTable ta = walk_table(ga, oa, max_m, vertex_budget);
    const WalkTable tb = walk_table(gb, ob, max_m, vertex_budget);
    CoincidenceReport rep{ta.graph, tb.graph, {}, true};
    for (int m = 0; m <= max_m; ++m) {
        const bool eq = ta.at(m) == tb.at(m);
        rep.rows.push_back({m, ta.at(m), tb.at(m), eq});
        rep.all_equal = rep.all_equal && eq;
    }
    return rep;
}

void write_walk_table_csv(std::ostream& out, const WalkTable& table)
{
    out << "m,count\n";
    for (int m = 0; m <= table.max_m(); ++m) {
        out << m << ',' << to_decimal(table.at(m)) << '\n';
    }
}

} // namespace latwalk
