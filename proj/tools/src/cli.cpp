#include "latwalk_cli/cli.hpp"

#include "latwalk/elliptic.hpp"
#include "latwalk/error.hpp"
#include "latwalk/isomorphism.hpp"
#include "latwalk/lattice_catalog.hpp"
#include "latwalk/spectral.hpp"
#include "latwalk/verify.hpp"
#include "latwalk/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <utility>

namespace latwalk::cli {

namespace {

using Json = nlohmann::ordered_json;
using Params = std::vector<std::pair<std::string, std::string>>;

constexpr const char* budget_env = "LATTICE_WALKS_BUDGET";

struct Common {
    std::string format = "csv";
    std::string out;
    long long budget = 0; // 0: not given on the command line
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + '"';
}

std::size_t resolve_budget(const Common& c)
{
    if (c.budget > 0) {
        return static_cast<std::size_t>(c.budget);
    }
    if (const char* env = std::getenv(budget_env); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (*end != '\0' || v <= 0) {
            throw InvalidParameter(std::string(budget_env) + " must be a positive integer, got '" +
                                   env + "'");
        }
        return static_cast<std::size_t>(v);
    }
    return default_vertex_budget;
}

void write_params_csv(std::ostream& out, const Params& p)
{
    out << "# params";
    for (const auto& [k, v] : p) {
        out << ' ' << k << '=' << v;
    }
    out << '\n';
}

Json params_json(const Params& p)
{
    Json j = Json::object();
    for (const auto& [k, v] : p) {
        j[k] = v;
    }
    return j;
}

/// Sends rendered output to --out when given, otherwise to the default stream.
int emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& render)
{
    if (c.out.empty()) {
        render(out);
        return exit_ok;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
        throw InvalidParameter("cannot open output file '" + c.out + "'");
    }
    render(file);
    if (!file) {
        throw Error("failed writing '" + c.out + "'");
    }
    return exit_ok;
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format)
{
    c.format = default_format;
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "Write output to PATH instead of standard output");
    sub->add_option("--radius-budget", c.budget,
                    "Maximum number of ball vertices (overrides LATTICE_WALKS_BUDGET)")
        ->check(CLI::PositiveNumber);
}

// -- walks -------------------------------------------------------------------

struct WalksArgs {
    Common common;
    std::string kind;
    int mmax = 12;
    int n = 3;
    int k = 3;
    int l = 3;
};

int cmd_walks(const WalksArgs& a, std::ostream& out)
{
    const LatticeKind kind = parse_lattice_kind(a.kind, a.n, a.k, a.l);
    const int cap = kind.dim() >= 3 ? max_m_3d : max_m_default;
    if (a.mmax < 0) {
        throw InvalidParameter("--mmax must be >= 0");
    }
    if (a.mmax > cap) {
        throw InvalidParameter("refusing --mmax " + std::to_string(a.mmax) + ": cap is " +
                               std::to_string(cap) + " for " + std::to_string(kind.dim()) +
                               "-dimensional kind " + kind.token());
    }
    const std::size_t budget = resolve_budget(a.common);
    Params p{{"command", "walks"}, {"kind", kind.token()}, {"lattice", kind.name()}};
    if (kind.id == LatticeKind::Id::strip) {
        p.emplace_back("n", std::to_string(kind.n));
    }
    if (kind.id == LatticeKind::Id::diamond) {
        p.emplace_back("k", std::to_string(kind.k));
        p.emplace_back("l", std::to_string(kind.l));
    }
    p.emplace_back("root", lattice_root(kind).to_string());
    p.emplace_back("mmax", std::to_string(a.mmax));
    p.emplace_back("radius_budget", std::to_string(budget));

    const WalkTable table = walk_table(lattice_graph(kind), lattice_root(kind), a.mmax, budget);
    struct Row {
        std::string count;
        std::string closed;
        bool match;
    };
    std::vector<Row> rows;
    for (int m = 0; m <= a.mmax; ++m) {
        const BigCount closed = closed_form_walks(kind, m);
        rows.push_back({to_decimal(table.at(m)), to_decimal(closed), closed == table.at(m)});
    }
    return emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["params"] = params_json(p);
            j["rows"] = Json::array();
            for (int m = 0; m <= a.mmax; ++m) {
                const auto& r = rows[static_cast<std::size_t>(m)];
                j["rows"].push_back(
                    {{"m", m}, {"ball_count", r.count}, {"closed_form", r.closed}, {"match", r.match}});
            }
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        os << "m,ball_count,closed_form,match\n";
        for (int m = 0; m <= a.mmax; ++m) {
            const auto& r = rows[static_cast<std::size_t>(m)];
            os << m << ',' << r.count << ',' << r.closed << ',' << (r.match ? "true" : "false")
               << '\n';
        }
    });
}

// -- moments -----------------------------------------------------------------

struct MomentsArgs {
    Common common;
    std::string kind;
    int mmax = 10;
    int n = 4;
    int k = 3;
    int l = 3;
};

constexpr int max_moment_m = 60;

int cmd_moments(const MomentsArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.mmax < 0 || a.mmax > max_moment_m) {
        throw InvalidParameter("--mmax must lie in [0, " + std::to_string(max_moment_m) + "]");
    }
    Params p{{"command", "moments"}, {"kind", a.kind}};
    auto path = [&](int n) {
        const PathSpectrum ps = path_spectrum(n);
        if (ps.conditioning_warning) {
            err << "warning: P" << n << " spectrum solve is ill-conditioned (condition "
                << fmt(ps.condition) << ")\n";
        }
        return ps.to_distribution();
    };
    SpectralDistribution d = SpectralDistribution::arcsine();
    if (a.kind == "arcsine") {
        d = SpectralDistribution::arcsine();
    } else if (a.kind == "semicircle") {
        d = SpectralDistribution::semicircle();
    } else if (a.kind == "aa" || a.kind == "wa" || a.kind == "ww") {
        d = SpectralDistribution::named(parse_density_kind(a.kind));
    } else if (a.kind == "quarter") {
        d = classical_convolve(SpectralDistribution::semicircle(),
                               SpectralDistribution::semicircle());
    } else if (a.kind == "path") {
        p.emplace_back("n", std::to_string(a.n));
        d = path(a.n);
    } else if (a.kind == "strip") {
        p.emplace_back("n", std::to_string(a.n));
        d = mellin_convolve(path(a.n), SpectralDistribution::arcsine());
    } else if (a.kind == "diamond") {
        p.emplace_back("k", std::to_string(a.k));
        p.emplace_back("l", std::to_string(a.l));
        d = mellin_convolve(path(a.k), path(a.l));
    } else {
        throw InvalidParameter("unknown moments kind '" + a.kind + "'");
    }
    p.emplace_back("distribution", d.name());
    p.emplace_back("mmax", std::to_string(a.mmax));
    const std::vector<Moment> table = moments(d, a.mmax);
    return emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["params"] = params_json(p);
            j["rows"] = Json::array();
            for (std::size_t m = 0; m < table.size(); ++m) {
                j["rows"].push_back({{"m", m},
                                     {"moment", table[m].to_string()},
                                     {"exact", table[m].is_exact()}});
            }
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        write_moment_table_csv(os, table);
    });
}

// -- density -----------------------------------------------------------------

struct DensityArgs {
    Common common;
    std::string kind;
    int grid = 9;
};

int cmd_density(const DensityArgs& a, std::ostream& out)
{
    const DensityKind kind = parse_density_kind(a.kind);
    if (a.grid < 2) {
        throw InvalidParameter("--grid must be >= 2");
    }
    const Params p{{"command", "density"},
                   {"kind", to_string(kind)},
                   {"grid", std::to_string(a.grid)},
                   {"support", "[-4,4]"}};
    return emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["params"] = params_json(p);
            j["rows"] = Json::array();
            for (int i = 0; i < a.grid; ++i) {
                const double x = 4.0 * (2 * i - (a.grid - 1)) / (a.grid - 1);
                const double v = density(kind, x);
                Json row{{"x", x}};
                if (std::isinf(v)) {
                    row["density"] = "inf";
                } else {
                    row["density"] = v;
                }
                j["rows"].push_back(std::move(row));
            }
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        write_density_csv(os, kind, a.grid);
    });
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::string suite = "all";
    double tol = 1e-6;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (!(a.tol > 0.0)) {
        throw InvalidParameter("--tol must be positive");
    }
    SuiteOptions opts;
    opts.vertex_budget = resolve_budget(a.common);
    opts.tol = a.tol;
    const SuiteReport report = run_suite(a.suite, opts);
    const Params p{{"command", "verify"},
                   {"suite", a.suite},
                   {"tol", fmt(a.tol)},
                   {"radius_budget", std::to_string(opts.vertex_budget)}};
    emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["suite"] = report.suite;
            j["params"] = params_json(p);
            j["checks"] = Json::array();
            for (const auto& c : report.checks) {
                j["checks"].push_back({{"name", c.name},
                                       {"expected", c.expected},
                                       {"actual", c.actual},
                                       {"tol", c.tol},
                                       {"pass", c.pass}});
            }
            j["pass"] = report.pass;
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        os << "name,expected,actual,tol,pass\n";
        for (const auto& c : report.checks) {
            os << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.actual)
               << ',' << fmt(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    });
    if (report.pass) {
        return exit_ok;
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const Check& c) { return !c.pass; });
    err << "verify: " << failed << " of " << report.checks.size() << " checks failed in suite "
        << report.suite << '\n';
    for (const auto& c : report.checks) {
        if (!c.pass) {
            err << "  FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual
                << '\n';
        }
    }
    return exit_check_failed;
}

// -- components --------------------------------------------------------------

struct ComponentsArgs {
    Common common;
    std::string kind = "kronecker";
    int k = 3;
    int l = 3;
    int n = 3;
};

int cmd_components(const ComponentsArgs& a, std::ostream& out)
{
    if (a.k < 1 || a.l < 1 || a.n < 1) {
        throw InvalidParameter("--k, --l and --n must be >= 1");
    }
    FiniteGraph g = path_graph(1);
    Params p{{"command", "components"}, {"kind", a.kind}, {"k", std::to_string(a.k)},
             {"l", std::to_string(a.l)}};
    if (a.kind == "kronecker") {
        g = kronecker(path_graph(a.k), path_graph(a.l));
    } else if (a.kind == "cartesian") {
        g = cartesian(path_graph(a.k), path_graph(a.l));
    } else if (a.kind == "triple") {
        p.emplace_back("n", std::to_string(a.n));
        g = kronecker(kronecker(path_graph(a.k), path_graph(a.l)), path_graph(a.n));
    } else {
        throw InvalidParameter("unknown components kind '" + a.kind +
                               "' (expected kronecker, cartesian or triple)");
    }
    p.emplace_back("graph", g.name());
    const auto comps = connected_components(g);
    return emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["params"] = params_json(p);
            j["rows"] = Json::array();
            for (std::size_t i = 0; i < comps.size(); ++i) {
                j["rows"].push_back({{"component", i},
                                     {"vertices", comps[i].size()},
                                     {"edges", comps[i].edge_count()},
                                     {"first_vertex", comps[i].vertex(0).to_string()}});
            }
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        os << "component,vertices,edges,first_vertex\n";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            os << i << ',' << comps[i].size() << ',' << comps[i].edge_count() << ','
               << csv_field(comps[i].vertex(0).to_string()) << '\n';
        }
    });
}

// -- iso ---------------------------------------------------------------------

struct IsoArgs {
    Common common;
    std::string kind = "plane";
    std::optional<int> radius;
    int n = 3;
    int k = 4;
    int l = 4;
};

int cmd_iso(const IsoArgs& a, std::ostream& out, std::ostream& err)
{
    Params p{{"command", "iso"}, {"kind", a.kind}};
    std::optional<IsoCase> c;
    if (a.kind == "plane") {
        c = iso_plane();
    } else if (a.kind == "strip") {
        p.emplace_back("n", std::to_string(a.n));
        c = iso_strip(a.n);
    } else if (a.kind == "halfplane") {
        c = iso_half_plane();
    } else if (a.kind == "diamond") {
        p.emplace_back("k", std::to_string(a.k));
        p.emplace_back("l", std::to_string(a.l));
        c = iso_diamond(a.k, a.l);
    } else if (a.kind == "wedge") {
        c = iso_wedge();
    } else {
        throw InvalidParameter("unknown iso kind '" + a.kind +
                               "' (expected plane, strip, halfplane, diamond or wedge)");
    }
    const int radius = a.radius.value_or(a.kind == "plane" ? 8 : 6);
    if (radius < 0) {
        throw InvalidParameter("radius (--mmax) must be >= 0");
    }
    const std::size_t budget = resolve_budget(a.common);
    p.emplace_back("radius", std::to_string(radius));
    p.emplace_back("radius_budget", std::to_string(budget));
    const IsoReport r = verify_isomorphism(*c, radius, budget);
    const std::string witness =
        r.witness ? r.witness->first.to_string() + " / " + r.witness->second.to_string() : "";
    emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "json") {
            Json j;
            j["params"] = params_json(p);
            j["case"] = c->label;
            j["radius"] = radius;
            j["source_vertices"] = r.source_vertices;
            j["target_vertices"] = r.target_vertices;
            j["edges_checked"] = r.edges_checked;
            j["ok"] = r.ok;
            j["message"] = r.message;
            j["witness"] = witness;
            os << j.dump(2) << '\n';
            return;
        }
        write_params_csv(os, p);
        os << "case,radius,source_vertices,target_vertices,edges_checked,ok,message,witness\n";
        os << csv_field(c->label) << ',' << radius << ',' << r.source_vertices << ','
           << r.target_vertices << ',' << r.edges_checked << ',' << (r.ok ? "true" : "false")
           << ',' << csv_field(r.message) << ',' << csv_field(witness) << '\n';
    });
    if (!r.ok) {
        err << "iso: " << c->label << " failed: " << r.message << '\n';
        return exit_check_failed;
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact walk counts, spectral moments and densities on lattices and graph "
                 "products",
                 "lattice-walks"};
    app.require_subcommand(1, 1);

    WalksArgs walks;
    auto* walks_cmd = app.add_subcommand("walks", "Closed-walk table: ball count vs closed form");
    walks_cmd->add_option("--kind", walks.kind, "Lattice kind")
        ->required()
        ->check(CLI::IsMember(lattice_kind_tokens()));
    walks_cmd->add_option("--mmax", walks.mmax, "Largest walk length")->capture_default_str();
    walks_cmd->add_option("--n", walks.n, "Strip width")->capture_default_str();
    walks_cmd->add_option("--k", walks.k, "First diamond side")->capture_default_str();
    walks_cmd->add_option("--l", walks.l, "Second diamond side")->capture_default_str();
    add_common(walks_cmd, walks.common, "csv");

    MomentsArgs mom;
    auto* mom_cmd = app.add_subcommand("moments", "Moment table of a spectral distribution");
    mom_cmd->add_option("--kind", mom.kind, "Distribution")
        ->required()
        ->check(CLI::IsMember(
            {"arcsine", "semicircle", "aa", "wa", "ww", "quarter", "path", "strip", "diamond"}));
    mom_cmd->add_option("--mmax", mom.mmax, "Largest moment order")->capture_default_str();
    mom_cmd->add_option("--n", mom.n, "Path length for path and strip")->capture_default_str();
    mom_cmd->add_option("--k", mom.k, "First diamond side")->capture_default_str();
    mom_cmd->add_option("--l", mom.l, "Second diamond side")->capture_default_str();
    add_common(mom_cmd, mom.common, "csv");

    DensityArgs dens;
    auto* dens_cmd = app.add_subcommand("density", "Samples of a closed-form density on [-4,4]");
    dens_cmd->add_option("--kind", dens.kind, "aa, wa or ww")->required();
    dens_cmd->add_option("--grid", dens.grid, "Number of samples")->capture_default_str();
    add_common(dens_cmd, dens.common, "csv");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.emplace_back("all");
    ver_cmd->add_option("--suite", ver.suite, "Suite name")
        ->check(CLI::IsMember(suites))
        ->capture_default_str();
    ver_cmd->add_option("--tol", ver.tol, "Tolerance for quadrature-based checks")
        ->capture_default_str();
    add_common(ver_cmd, ver.common, "json");

    ComponentsArgs comp;
    auto* comp_cmd =
        app.add_subcommand("components", "Connected components of products of paths");
    comp_cmd->add_option("--kind", comp.kind, "kronecker, cartesian or triple")
        ->capture_default_str();
    comp_cmd->add_option("--k", comp.k, "First path size")->capture_default_str();
    comp_cmd->add_option("--l", comp.l, "Second path size")->capture_default_str();
    comp_cmd->add_option("--n", comp.n, "Third path size (triple)")->capture_default_str();
    add_common(comp_cmd, comp.common, "csv");

    IsoArgs iso;
    auto* iso_cmd = app.add_subcommand("iso", "Verify a lattice isomorphism on balls");
    iso_cmd->add_option("--kind", iso.kind, "plane, strip, halfplane, diamond or wedge")
        ->capture_default_str();
    iso_cmd->add_option("--mmax", iso.radius, "Ball radius (default 8 for plane, 6 otherwise)");
    iso_cmd->add_option("--n", iso.n, "Strip width")->capture_default_str();
    iso_cmd->add_option("--k", iso.k, "First diamond side")->capture_default_str();
    iso_cmd->add_option("--l", iso.l, "Second diamond side")->capture_default_str();
    add_common(iso_cmd, iso.common, "csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*walks_cmd) {
            return cmd_walks(walks, out);
        }
        if (*mom_cmd) {
            return cmd_moments(mom, out, err);
        }
        if (*dens_cmd) {
            return cmd_density(dens, out);
        }
        if (*ver_cmd) {
            return cmd_verify(ver, out, err);
        }
        if (*comp_cmd) {
            return cmd_components(comp, out);
        }
        if (*iso_cmd) {
            return cmd_iso(iso, out, err);
        }
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_usage;
}

} // namespace latwalk::cli
