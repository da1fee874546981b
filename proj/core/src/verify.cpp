#include "latwalk/verify.hpp"

#include "latwalk/elliptic.hpp"
#include "latwalk/error.hpp"
#include "latwalk/isomorphism.hpp"
#include "latwalk/random_graph.hpp"
#include "latwalk/spectral.hpp"
#include "latwalk/walks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace latwalk {

void SuiteReport::add(Check c)
{
    pass = pass && c.pass;
    checks.push_back(std::move(c));
}

namespace {

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double rel_err(double actual, double expected)
{
    return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

SuiteReport identity_suite()
{
    SuiteReport r{"identity", {}, true};
    for (int m = 0; m <= 30; ++m) {
        const BigCount b = central_binomial(m);
        const BigCount rhs = b * b;
        const BigCount lhs = binomial_identity_lhs(m);
        r.add({"sum_k binom(2m,2k)binom(2k,k)binom(2m-2k,m-k) m=" + std::to_string(m),
               to_decimal(rhs), to_decimal(lhs), 0.0, lhs == rhs});
    }
    return r;
}

SuiteReport iso_suite(const SuiteOptions& o)
{
    SuiteReport r{"iso", {}, true};
    auto run = [&](const IsoCase& c, int radius) {
        const IsoReport rep = verify_isomorphism(c, radius, o.vertex_budget);
        std::string actual = rep.message + " (" + std::to_string(rep.source_vertices) +
                             " vertices, " + std::to_string(rep.edges_checked) + " edges)";
        if (rep.witness) {
            actual += " witness " + rep.witness->first.to_string() + " / " +
                      rep.witness->second.to_string();
        }
        r.add({c.label + " r=" + std::to_string(radius), "ok", actual, 0.0, rep.ok});
    };
    run(iso_plane(), 8);
    run(iso_strip(3), 6);
    run(iso_strip(4), 6);
    run(iso_strip(5), 6);
    run(iso_half_plane(), 6);
    run(iso_diamond(4, 4), 6);
    run(iso_diamond(3, 5), 6);
    run(iso_wedge(), 6);
    return r;
}

std::size_t degree_count(const FiniteGraph& b, int interior, std::size_t degree)
{
    const auto hist = degree_histogram(b, interior);
    auto it = hist.find(degree);
    return it == hist.end() ? 0 : it->second;
}

SuiteReport coincidence_suite(const SuiteOptions& o)
{
    SuiteReport r{"coincidence", {}, true};
    const auto mixed = LatticeKind::make(LatticeKind::Id::mixed3);
    const auto chamber = LatticeKind::make(LatticeKind::Id::chamber3);
    const auto rep = moment_coincidence_report(lattice_graph(mixed), lattice_root(mixed),
                                               lattice_graph(chamber), lattice_root(chamber), 12,
                                               o.vertex_budget);
    for (const auto& row : rep.rows) {
        r.add({"W_" + std::to_string(row.m) + " " + rep.graph_a + " vs " + rep.graph_b,
               to_decimal(row.b), to_decimal(row.a), 0.0, row.equal});
    }
    r.add({"W_4 on L{x>=y>=z}", "12", to_decimal(rep.rows.at(4).b), 0.0, rep.rows.at(4).b == 12});

    const auto zxzp = LatticeKind::make(LatticeKind::Id::z_x_zplus);
    const auto shifted = LatticeKind::make(LatticeKind::Id::zplus2_shifted);
    const auto rep2 = moment_coincidence_report(lattice_graph(zxzp), lattice_root(zxzp),
                                                lattice_graph(shifted), lattice_root(shifted), 16,
                                                o.vertex_budget);
    for (const auto& row : rep2.rows) {
        const BigCount expected = closed_form_walks(zxzp, row.m);
        r.add({"W_" + std::to_string(row.m) + " " + rep2.graph_a + " vs " + rep2.graph_b,
               to_decimal(expected), to_decimal(row.a) + " / " + to_decimal(row.b), 0.0,
               row.equal && row.a == expected});
    }

    // Z+ xC Z+ is the pair whose origin counts equal C_m C_{m+1}; Z xC Z+ is not.
    const auto quarter = LatticeKind::make(LatticeKind::Id::quarter_plane);
    const auto rep3 = moment_coincidence_report(lattice_graph(quarter), lattice_root(quarter),
                                                lattice_graph(shifted), lattice_root(shifted), 16,
                                                o.vertex_budget);
    for (const auto& row : rep3.rows) {
        const BigCount expected = closed_form_walks(zxzp, row.m);
        r.add({"W_" + std::to_string(row.m) + " " + rep3.graph_a + " vs " + rep3.graph_b,
               to_decimal(expected), to_decimal(row.a) + " / " + to_decimal(row.b), 0.0,
               row.equal && row.a == expected});
    }

    const auto bm = ball(lattice_graph(mixed), lattice_root(mixed), 6, o.vertex_budget);
    const auto bc = ball(lattice_graph(chamber), lattice_root(chamber), 6, o.vertex_budget);
    const auto nm = degree_count(bm, 4, 2);
    const auto nc = degree_count(bc, 4, 2);
    r.add({"degree-2 vertices within 4 of origin in " + mixed.name(), "1", std::to_string(nm), 0.0,
           nm == 1});
    r.add({"degree-2 vertices within 4 of origin in " + chamber.name(), ">=2", std::to_string(nc),
           0.0, nc >= 2});
    return r;
}

SuiteReport density_suite(const SuiteOptions& o)
{
    SuiteReport r{"density", {}, true};
    const DensityKind kinds[] = {DensityKind::aa, DensityKind::wa, DensityKind::ww};
    for (auto kind : kinds) {
        const double norm = density_moment(kind, 0, 1e-10);
        r.add({"normalization " + to_string(kind), "1", fmt(norm), 1e-8,
               std::abs(norm - 1.0) <= 1e-8});
    }
    for (auto kind : kinds) {
        const auto dist = SpectralDistribution::named(kind);
        for (int m = 2; m <= 10; m += 2) {
            const double expected = moment(dist, m).to_double();
            const double actual = density_moment(kind, m, 1e-10);
            const double err = std::abs(actual - expected) / expected;
            r.add({"moment " + std::to_string(m) + " " + to_string(kind), fmt(expected),
                   fmt(actual), o.tol, err <= o.tol});
        }
    }
    for (auto kind : kinds) {
        const auto [f, g] = density_factors(kind);
        double worst = 0.0;
        double worst_x = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = 4.0 * (i + 0.5) / 20.0;
            const double err = std::abs(mellin_density_convolve(f, g, x, 1e-10) - density(kind, x));
            if (err > worst) {
                worst = err;
                worst_x = x;
            }
        }
        r.add({"Mellin convolution vs closed form " + to_string(kind) + " (20 points)",
               "<= " + fmt(o.tol), fmt(worst) + " at x=" + fmt(worst_x), o.tol, worst <= o.tol});
    }
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double k = i / 10.0;
        const double kp = std::sqrt(1.0 - k * k);
        const auto a = elliptic_KE(k);
        const auto b = elliptic_KE(kp);
        worst = std::max(worst, std::abs(a.K * b.E + b.K * a.E - a.K * b.K - std::numbers::pi / 2));
    }
    r.add({"Legendre relation k=0.1..0.9", "pi/2", "max deviation " + fmt(worst), 1e-11,
           worst <= 1e-11});
    return r;
}

SuiteReport path_spectrum_suite()
{
    SuiteReport r{"path-spectrum", {}, true};
    for (int n = 2; n <= 12; ++n) {
        const auto ps = path_spectrum(n);
        const auto pn = path_graph(n);
        double worst = 0.0;
        for (int m = 0; m <= 2 * n; m += 2) {
            const double exact = walk_count(pn, 0, m).convert_to<double>();
            worst = std::max(worst, std::abs(ps.moment(m) - exact) / exact);
        }
        r.add({"P_" + std::to_string(n) + " moments 2m<=" + std::to_string(2 * n), "<= 1e-08",
               fmt(worst), 1e-8, worst <= 1e-8});
    }
    const auto p4 = path_spectrum(4);
    const double s5 = std::sqrt(5.0);
    for (int m = 0; m <= 6; ++m) {
        const double golden = (5 - s5) / 10 * std::pow((3 + s5) / 2, m) +
                              (5 + s5) / 10 * std::pow((3 - s5) / 2, m);
        const double actual = p4.moment(2 * m);
        r.add({"P_4 closed form W_" + std::to_string(2 * m), fmt(golden), fmt(actual), 1e-9,
               rel_err(actual, golden) <= 1e-9});
    }
    return r;
}

SuiteReport walks_suite(const SuiteOptions& o)
{
    SuiteReport r{"walks", {}, true};
    using Id = LatticeKind::Id;
    std::vector<LatticeKind> kinds = {
        LatticeKind::make(Id::z),           LatticeKind::make(Id::zplus),
        LatticeKind::make(Id::full_z2),     LatticeKind::make(Id::half_plane),
        LatticeKind::make(Id::wedge),       LatticeKind::make(Id::quarter_plane),
        LatticeKind::strip(3),              LatticeKind::strip(4),
        LatticeKind::strip(5),              LatticeKind::diamond(3, 3),
        LatticeKind::diamond(4, 4),         LatticeKind::make(Id::bcc3),
        LatticeKind::make(Id::z3_cartesian), LatticeKind::make(Id::chamber3),
        LatticeKind::make(Id::z_x_zplus),   LatticeKind::make(Id::zplus_at_one),
    };
    for (const auto& kind : kinds) {
        const int max_m = kind.dim() == 1 ? 30 : kind.dim() == 2 ? 16 : 12;
        const auto table = walk_table(lattice_graph(kind), lattice_root(kind), max_m, o.vertex_budget);
        int bad = -1;
        for (int m = 0; m <= max_m; ++m) {
            if (table.at(m) != closed_form_walks(kind, m)) {
                bad = m;
                break;
            }
        }
        const std::string tag = kind.name() + " 2m<=" + std::to_string(max_m);
        if (bad < 0) {
            r.add({tag, "closed form", "W_" + std::to_string(max_m) + "=" +
                                           to_decimal(table.at(max_m)), 0.0, true});
        } else {
            r.add({tag, to_decimal(closed_form_walks(kind, bad)),
                   "W_" + std::to_string(bad) + "=" + to_decimal(table.at(bad)), 0.0, false});
        }
    }
    return r;
}

SuiteReport products_suite(const SuiteOptions& o)
{
    SuiteReport r{"products", {}, true};
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> density_p(0.1, 0.7);
    int kron_ok = 0;
    int cart_ok = 0;
    int comp_ok = 0;
    int comp_total = 0;
    constexpr int max_m = 10;
    for (int t = 0; t < o.random_pairs; ++t) {
        const auto g1 = random_graph(rng, size(rng), density_p(rng));
        const auto g2 = random_graph(rng, size(rng), density_p(rng));
        const auto kp = kronecker(g1, g2);
        const auto cp = cartesian(g1, g2);
        WalkTable w1{g1.name(), g1.vertex(*g1.root()), {}};
        WalkTable w2{g2.name(), g2.vertex(*g2.root()), {}};
        for (int m = 0; m <= max_m; ++m) {
            w1.counts.push_back(walk_count(g1, *g1.root(), m));
            w2.counts.push_back(walk_count(g2, *g2.root(), m));
        }
        const auto product = kronecker_walk_product(w1, w2);
        bool k_ok = true;
        bool c_ok = true;
        for (int m = 0; m <= max_m; ++m) {
            k_ok = k_ok && walk_count(kp, *kp.root(), m) == product.at(m);
            c_ok = c_ok && walk_count(cp, *cp.root(), m) == cartesian_walk_convolution(w1, w2, m);
        }
        kron_ok += k_ok;
        cart_ok += c_ok;

        const auto h1 = random_connected_graph(rng, 2 + size(rng) % 7, density_p(rng));
        const auto h2 = random_connected_graph(rng, 2 + size(rng) % 7, density_p(rng));
        ++comp_total;
        comp_ok += connected_components(kronecker(h1, h2)).size() <= 2;
    }
    const auto n = std::to_string(o.random_pairs);
    r.add({"Kronecker walk multiplication, m<=10", n + "/" + n,
           std::to_string(kron_ok) + "/" + n, 0.0, kron_ok == o.random_pairs});
    r.add({"Cartesian binomial convolution, m<=10", n + "/" + n,
           std::to_string(cart_ok) + "/" + n, 0.0, cart_ok == o.random_pairs});
    r.add({"Kronecker of connected pairs has <= 2 components",
           std::to_string(comp_total) + "/" + std::to_string(comp_total),
           std::to_string(comp_ok) + "/" + std::to_string(comp_total), 0.0, comp_ok == comp_total});
    return r;
}

} // namespace

std::vector<std::string> suite_names()
{
    return {"identity", "iso", "coincidence", "density", "path-spectrum", "walks", "products"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options)
{
    if (name == "identity") {
        return identity_suite();
    }
    if (name == "iso") {
        return iso_suite(options);
    }
    if (name == "coincidence") {
        return coincidence_suite(options);
    }
    if (name == "density") {
        return density_suite(options);
    }
    if (name == "path-spectrum") {
        return path_spectrum_suite();
    }
    if (name == "walks") {
        return walks_suite(options);
    }
    if (name == "products") {
        return products_suite(options);
    }
    if (name == "all") {
        SuiteReport all{"all", {}, true};
        for (const auto& s : suite_names()) {
            for (auto& c : run_suite(s, options).checks) {
                c.name = s + ": " + c.name;
                all.add(std::move(c));
            }
        }
        return all;
    }
    throw InvalidParameter("unknown suite '" + name + "'");
}

} // namespace latwalk
