#include "latwalk/spectral.hpp"

#include "latwalk/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

namespace latwalk {

// -- Moment ------------------------------------------------------------------

const BigCount& Moment::exact_value() const
{
    if (!is_exact()) {
        throw InvalidParameter("moment is not exact");
    }
    return std::get<BigCount>(value_);
}

double Moment::to_double() const
{
    if (is_exact()) {
        return std::get<BigCount>(value_).convert_to<double>();
    }
    return std::get<double>(value_);
}

std::string Moment::to_string() const
{
    if (is_exact()) {
        return to_decimal(std::get<BigCount>(value_));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(value_));
    return buf;
}

Moment operator*(const Moment& a, const Moment& b)
{
    if (a.is_exact() && b.is_exact()) {
        return Moment::exact(a.exact_value() * b.exact_value());
    }
    return Moment::approx(a.to_double() * b.to_double());
}

Moment operator+(const Moment& a, const Moment& b)
{
    if (a.is_exact() && b.is_exact()) {
        return Moment::exact(a.exact_value() + b.exact_value());
    }
    return Moment::approx(a.to_double() + b.to_double());
}

Moment operator*(const BigCount& c, const Moment& a)
{
    if (a.is_exact()) {
        return Moment::exact(c * a.exact_value());
    }
    return Moment::approx(c.convert_to<double>() * a.to_double());
}

// -- DensityKind ---------------------------------------------------------------

std::string to_string(DensityKind kind)
{
    switch (kind) {
    case DensityKind::aa:
        return "aa";
    case DensityKind::wa:
        return "wa";
    case DensityKind::ww:
        return "ww";
    }
    return "?";
}

DensityKind parse_density_kind(const std::string& raw)
{
    std::string token = raw;
    for (auto& c : token) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (token == "aa") {
        return DensityKind::aa;
    }
    if (token == "wa") {
        return DensityKind::wa;
    }
    if (token == "ww") {
        return DensityKind::ww;
    }
    throw InvalidParameter("unknown density kind '" + raw + "' (expected aa, wa or ww)");
}

// -- SpectralDistribution --------------------------------------------------------

struct SpectralDistribution::Node {
    Kind kind;
    std::vector<Atom> atoms;
    std::optional<SpectralDistribution> left;
    std::optional<SpectralDistribution> right;
    DensityKind density = DensityKind::aa;
};

namespace {

constexpr double atom_tol = 1e-12;

void check_discrete(std::vector<Atom>& atoms)
{
    if (atoms.empty()) {
        throw InvalidParameter("discrete distribution needs at least one atom");
    }
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!std::isfinite(a.position) || !std::isfinite(a.weight)) {
            throw InvalidParameter("non-finite atom");
        }
        total += a.weight;
    }
    if (std::abs(total - 1.0) > atom_tol) {
        throw InvalidParameter("atom weights sum to " + std::to_string(total) + ", not 1");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    // Sorted ascending, the mirror image of atom i is atom n-1-i.
    const std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = atoms[i];
        const auto& b = atoms[n - 1 - i];
        if (std::abs(a.position + b.position) > atom_tol || std::abs(a.weight - b.weight) > atom_tol) {
            throw InvalidParameter("discrete distribution is not symmetric");
        }
    }
}

std::vector<Moment> discrete_moments(const std::vector<Atom>& atoms, int max_m)
{
    std::vector<double> acc(static_cast<std::size_t>(max_m) + 1, 0.0);
    for (const auto& a : atoms) {
        double p = a.weight;
        for (int m = 0; m <= max_m; ++m) {
            acc[m] += p;
            p *= a.position;
        }
    }
    std::vector<Moment> out;
    out.reserve(acc.size());
    for (double v : acc) {
        out.push_back(Moment::approx(v));
    }
    return out;
}

} // namespace

SpectralDistribution SpectralDistribution::arcsine()
{
    return SpectralDistribution(std::make_shared<const Node>(Node{Kind::arcsine, {}, {}, {}}));
}

SpectralDistribution SpectralDistribution::semicircle()
{
    return SpectralDistribution(std::make_shared<const Node>(Node{Kind::semicircle, {}, {}, {}}));
}

SpectralDistribution SpectralDistribution::discrete(std::vector<Atom> atoms)
{
    check_discrete(atoms);
    return SpectralDistribution(
        std::make_shared<const Node>(Node{Kind::discrete, std::move(atoms), {}, {}}));
}

SpectralDistribution SpectralDistribution::point_mass_at_zero()
{
    return discrete({{0.0, 1.0}});
}

SpectralDistribution SpectralDistribution::classical(const SpectralDistribution& a,
                                                     const SpectralDistribution& b)
{
    return SpectralDistribution(std::make_shared<const Node>(Node{Kind::classical, {}, a, b}));
}

SpectralDistribution SpectralDistribution::mellin(const SpectralDistribution& a,
                                                  const SpectralDistribution& b)
{
    return SpectralDistribution(std::make_shared<const Node>(Node{Kind::mellin, {}, a, b}));
}

SpectralDistribution SpectralDistribution::named(DensityKind kind)
{
    const auto w = semicircle();
    const auto alpha = arcsine();
    Node node{Kind::named, {}, {}, {}, kind};
    switch (kind) {
    case DensityKind::aa:
        node.left = alpha;
        node.right = alpha;
        break;
    case DensityKind::wa:
        node.left = w;
        node.right = alpha;
        break;
    case DensityKind::ww:
        node.left = w;
        node.right = w;
        break;
    }
    return SpectralDistribution(std::make_shared<const Node>(std::move(node)));
}

SpectralDistribution::Kind SpectralDistribution::kind() const noexcept
{
    return node_->kind;
}

std::string SpectralDistribution::name() const
{
    switch (node_->kind) {
    case Kind::arcsine:
        return "alpha";
    case Kind::semicircle:
        return "w";
    case Kind::discrete:
        return "discrete[" + std::to_string(node_->atoms.size()) + "]";
    case Kind::classical:
        return "(" + left().name() + " * " + right().name() + ")";
    case Kind::mellin:
        return "(" + left().name() + " *M " + right().name() + ")";
    case Kind::named:
        return "density:" + to_string(node_->density);
    }
    return "?";
}

const std::vector<Atom>& SpectralDistribution::atoms() const
{
    return node_->atoms;
}

const SpectralDistribution& SpectralDistribution::left() const
{
    if (!node_->left) {
        throw InvalidParameter(name() + " has no factors");
    }
    return *node_->left;
}

const SpectralDistribution& SpectralDistribution::right() const
{
    if (!node_->right) {
        throw InvalidParameter(name() + " has no factors");
    }
    return *node_->right;
}

// -- moments ---------------------------------------------------------------------

std::vector<Moment> moments(const SpectralDistribution& d, int max_m)
{
    if (max_m < 0) {
        throw InvalidParameter("moment order must be >= 0");
    }
    using Kind = SpectralDistribution::Kind;
    std::vector<Moment> out;
    out.reserve(static_cast<std::size_t>(max_m) + 1);
    switch (d.kind()) {
    case Kind::arcsine:
        for (int m = 0; m <= max_m; ++m) {
            out.push_back(Moment::exact(m % 2 ? BigCount(0) : central_binomial(m / 2)));
        }
        return out;
    case Kind::semicircle:
        for (int m = 0; m <= max_m; ++m) {
            out.push_back(Moment::exact(m % 2 ? BigCount(0) : catalan(m / 2)));
        }
        return out;
    case Kind::discrete:
        return discrete_moments(d.atoms(), max_m);
    case Kind::classical: {
        const auto a = moments(d.left(), max_m);
        const auto b = moments(d.right(), max_m);
        for (int m = 0; m <= max_m; ++m) {
            Moment s = Moment::exact(0);
            BigCount c = 1;
            for (int k = 0; k <= m; ++k) {
                s = s + c * (a[k] * b[m - k]);
                c = c * (m - k) / (k + 1);
            }
            out.push_back(std::move(s));
        }
        return out;
    }
    case Kind::mellin:
    case Kind::named: {
        const auto a = moments(d.left(), max_m);
        const auto b = moments(d.right(), max_m);
        for (int m = 0; m <= max_m; ++m) {
            out.push_back(a[m] * b[m]);
        }
        return out;
    }
    }
    return out;
}

Moment moment(const SpectralDistribution& d, int m)
{
    if (m < 0) {
        throw InvalidParameter("moment order must be >= 0, got " + std::to_string(m));
    }
    return moments(d, m).back();
}

SpectralDistribution mellin_convolve(const SpectralDistribution& a, const SpectralDistribution& b)
{
    return SpectralDistribution::mellin(a, b);
}

SpectralDistribution classical_convolve(const SpectralDistribution& a,
                                        const SpectralDistribution& b)
{
    return SpectralDistribution::classical(a, b);
}

MomentSequence moment_sequence(const SpectralDistribution& d, int count)
{
    if (count < 1) {
        throw InvalidParameter("moment_sequence: count must be >= 1");
    }
    const auto all = moments(d, 2 * (count - 1));
    MomentSequence seq;
    for (int j = 0; j < count; ++j) {
        seq.even_moments.push_back(all[2 * j]);
    }
    return seq;
}

bool hankel_windows_nonnegative(const MomentSequence& seq, double tol)
{
    const auto& e = seq.even_moments;
    for (std::size_t j = 0; j + 2 < e.size(); ++j) {
        if (e[j].is_exact() && e[j + 1].is_exact() && e[j + 2].is_exact()) {
            if (e[j].exact_value() * e[j + 2].exact_value() <
                e[j + 1].exact_value() * e[j + 1].exact_value()) {
                return false;
            }
        } else {
            const double lhs = e[j].to_double() * e[j + 2].to_double();
            const double rhs = e[j + 1].to_double() * e[j + 1].to_double();
            if (lhs - rhs < -tol * std::max(1.0, std::abs(rhs))) {
                return false;
            }
        }
    }
    return true;
}

bool weak_equality_by_moments(const SpectralDistribution& a, const SpectralDistribution& b,
                              int max_m, double tol)
{
    const auto ma = moments(a, max_m);
    const auto mb = moments(b, max_m);
    for (int m = 0; m <= max_m; ++m) {
        if (ma[m].is_exact() && mb[m].is_exact()) {
            if (ma[m].exact_value() != mb[m].exact_value()) {
                return false;
            }
            continue;
        }
        const double x = ma[m].to_double();
        const double y = mb[m].to_double();
        if (!(std::abs(x - y) <= tol * std::max(1.0, std::abs(x)))) {
            return false;
        }
    }
    return true;
}

// -- path spectrum ------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<double>>;

struct LU {
    Matrix lu;
    std::vector<std::size_t> perm;
};

LU lu_decompose(Matrix a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (a[pivot][col] == 0.0) {
            throw NumericalFailure("Vandermonde system is singular");
        }
        std::swap(a[col], a[pivot]);
        std::swap(perm[col], perm[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            a[r][col] = f;
            for (std::size_t c = col + 1; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    return {std::move(a), std::move(perm)};
}

std::vector<double> lu_solve(const LU& f, const std::vector<double>& b)
{
    const std::size_t n = b.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j) {
            s -= f.lu[i][j] * y[j];
        }
        y[i] = s;
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= f.lu[i][j] * x[j];
        }
        x[i] = s / f.lu[i][i];
    }
    return x;
}

double norm1(const Matrix& a)
{
    double best = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        double s = 0.0;
        for (const auto& row : a) {
            s += std::abs(row[c]);
        }
        best = std::max(best, s);
    }
    return best;
}

} // namespace

double PathSpectrum::moment(int m) const
{
    if (m < 0) {
        throw InvalidParameter("moment order must be >= 0");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        s += weights[k] * std::pow(eigenvalues[k], m);
    }
    return s;
}

SpectralDistribution PathSpectrum::to_distribution() const
{
    const std::size_t sz = eigenvalues.size();
    std::vector<Atom> atoms(sz);
    double total = 0.0;
    for (std::size_t i = 0; i < sz; ++i) {
        const std::size_t j = sz - 1 - i;
        const double pos = 0.5 * (eigenvalues[i] - eigenvalues[j]);
        const double w = 0.5 * (weights[i] + weights[j]);
        atoms[i] = {i == j ? 0.0 : pos, w};
        total += w;
    }
    for (auto& a : atoms) {
        a.weight /= total;
    }
    return SpectralDistribution::discrete(std::move(atoms));
}

PathSpectrum path_spectrum(int n)
{
    if (n < 2 || n > max_path_spectrum_n) {
        throw InvalidParameter("path_spectrum: n must lie in [2, " +
                               std::to_string(max_path_spectrum_n) + "], got " + std::to_string(n));
    }
    PathSpectrum ps;
    ps.n = n;
    ps.conditioning_warning = n > well_conditioned_path_n;
    const auto un = static_cast<std::size_t>(n);
    for (int k = 1; k <= n; ++k) {
        ps.eigenvalues.push_back(2.0 * std::cos(k * std::numbers::pi / (n + 1)));
    }

    // Rows m = 0..n-1: W_m(0; P_n) agrees with W_m(0; Z+) for these m.
    Matrix lambda(un, std::vector<double>(un));
    std::vector<double> b(un);
    for (std::size_t m = 0; m < un; ++m) {
        for (std::size_t k = 0; k < un; ++k) {
            lambda[m][k] = std::pow(ps.eigenvalues[k], static_cast<double>(m));
        }
        b[m] = m % 2 ? 0.0 : catalan(static_cast<long>(m / 2)).convert_to<double>();
    }

    const LU f = lu_decompose(lambda);
    ps.weights = lu_solve(f, b);

    double bmax = 1.0;
    double res = 0.0;
    for (std::size_t m = 0; m < un; ++m) {
        double s = 0.0;
        for (std::size_t k = 0; k < un; ++k) {
            s += lambda[m][k] * ps.weights[k];
        }
        res = std::max(res, std::abs(s - b[m]));
        bmax = std::max(bmax, std::abs(b[m]));
    }
    ps.residual = res / bmax;

    Matrix inverse(un, std::vector<double>(un));
    for (std::size_t c = 0; c < un; ++c) {
        std::vector<double> e(un, 0.0);
        e[c] = 1.0;
        const auto col = lu_solve(f, e);
        for (std::size_t r = 0; r < un; ++r) {
            inverse[r][c] = col[r];
        }
    }
    ps.condition = norm1(lambda) * norm1(inverse);

    if (!(ps.residual <= path_spectrum_residual_tol)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "path_spectrum(%d): residual %.3e exceeds %.0e (condition %.3e)", n,
                      ps.residual, path_spectrum_residual_tol, ps.condition);
        throw NumericalFailure(buf);
    }
    return ps;
}

void write_moment_table_csv(std::ostream& out, const std::vector<Moment>& table)
{
    out << "m,moment\n";
    for (std::size_t m = 0; m < table.size(); ++m) {
        out << m << ',' << table[m].to_string() << '\n';
    }
}

} // namespace latwalk
