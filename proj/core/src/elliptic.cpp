#include "latwalk/elliptic.hpp"

#include "latwalk/error.hpp"
#include "latwalk/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace latwalk {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int agm_max_iterations = 64;

// AGM with a_0 = 1, b_0 = k', c_0 = k; E/K = 1 - sum_n 2^(n-1) c_n^2.
EllipticPair agm(double k, double kprime)
{
    double a = 1.0;
    double b = kprime;
    double c = k;
    double weight = 0.5;
    double sum = weight * c * c;
    int it = 0;
    while (std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a) {
        if (++it > agm_max_iterations) {
            throw NumericalFailure("elliptic AGM did not converge");
        }
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        weight *= 2.0;
        sum += weight * c * c;
    }
    const double K = pi / (2.0 * a);
    return {k, K, K * (1.0 - sum), it};
}

} // namespace

EllipticPair elliptic_KE(double k)
{
    if (!(k >= 0.0 && k < 1.0)) {
        throw DomainError("elliptic_KE: modulus must lie in [0, 1), got " + std::to_string(k));
    }
    return agm(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

EllipticPair elliptic_KE_complementary(double kprime)
{
    if (!(kprime > 0.0 && kprime <= 1.0)) {
        throw DomainError("elliptic_KE_complementary: k' must lie in (0, 1], got " +
                          std::to_string(kprime));
    }
    return agm(std::sqrt((1.0 - kprime) * (1.0 + kprime)), kprime);
}

double arcsine_density(double x)
{
    const double ax = std::abs(x);
    return ax < 2.0 ? 1.0 / (pi * std::sqrt((2.0 - ax) * (2.0 + ax))) : 0.0;
}

double semicircle_density(double x)
{
    const double ax = std::abs(x);
    return ax <= 2.0 ? std::sqrt((2.0 - ax) * (2.0 + ax)) / (2.0 * pi) : 0.0;
}

double density(DensityKind kind, double x)
{
    const double ax = std::abs(x);
    if (ax > 4.0) {
        return 0.0;
    }
    if (ax == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    // The complementary modulus of xi(x) is |x|/4 exactly.
    const EllipticPair ke = elliptic_KE_complementary(ax / 4.0);
    switch (kind) {
    case DensityKind::aa:
        return ke.K / (2.0 * pi * pi);
    case DensityKind::wa:
        return (ke.K - ke.E) / (pi * pi);
    case DensityKind::ww:
        return 2.0 * ((1.0 + ax * ax / 16.0) * ke.K - 2.0 * ke.E) / (pi * pi);
    }
    return 0.0;
}

double mellin_density_convolve(const std::function<double(double)>& f,
                               const std::function<double(double)>& g, double x, double tol)
{
    if (x == 0.0 || !std::isfinite(x)) {
        throw InvalidParameter("mellin_density_convolve: x must be finite and nonzero");
    }
    const double ax = std::abs(x);
    if (ax >= 4.0) {
        return 0.0;
    }
    const double lo = std::max(ax / 2.0, std::numeric_limits<double>::min());
    const double hi = 2.0;
    const double mid = 0.5 * (lo + hi);
    auto kernel = [&](double y) { return f(ax / y) * g(y) / y; };

    // y = lo + t^2 and y = hi - t^2 absorb inverse square-root behavior at
    // either end of the range.
    const QuadratureOptions opts{tol / 4.0, 0.0, 100'000};
    const auto left = integrate(
        [&](double t) { return 2.0 * t * kernel(lo + t * t); }, 0.0, std::sqrt(mid - lo), opts);
    const auto right = integrate(
        [&](double t) { return 2.0 * t * kernel(hi - t * t); }, 0.0, std::sqrt(hi - mid), opts);
    return 2.0 * (left.value + right.value);
}

std::pair<std::function<double(double)>, std::function<double(double)>>
density_factors(DensityKind kind)
{
    switch (kind) {
    case DensityKind::aa:
        return {arcsine_density, arcsine_density};
    case DensityKind::wa:
        return {semicircle_density, arcsine_density};
    case DensityKind::ww:
        return {semicircle_density, semicircle_density};
    }
    throw InvalidParameter("unknown density kind");
}

double density_moment(DensityKind kind, int m, double tol)
{
    if (m < 0 || m % 2 != 0) {
        throw InvalidParameter("density_moment: m must be even and >= 0, got " + std::to_string(m));
    }
    // Near 0 each density equals c1 ln(16/x) + c0 up to O(x^2 ln x) terms,
    // which are below 1e-13 on the panel and dropped.
    double c1 = 0.0;
    double c0 = 0.0;
    switch (kind) {
    case DensityKind::aa:
        c1 = 1.0 / (2.0 * pi * pi);
        break;
    case DensityKind::wa:
        c1 = 1.0 / (pi * pi);
        c0 = -1.0 / (pi * pi);
        break;
    case DensityKind::ww:
        c1 = 2.0 / (pi * pi);
        c0 = -4.0 / (pi * pi);
        break;
    }
    const double eps = singular_panel_width;
    const double p = m + 1.0;
    const double epsp = std::pow(eps, p) / p;
    const double near = c1 * epsp * (std::log(16.0 / eps) + 1.0 / p) + c0 * epsp;

    const auto far = integrate([&](double x) { return std::pow(x, m) * density(kind, x); }, eps,
                               4.0, QuadratureOptions{tol / 2.0, tol / 2.0, 100'000});
    return 2.0 * (near + far.value);
}

void write_density_csv(std::ostream& out, DensityKind kind, int grid)
{
    if (grid < 2) {
        throw InvalidParameter("density grid must have at least 2 points");
    }
    out << "x,density\n";
    char buf[64];
    for (int i = 0; i < grid; ++i) {
        // Integer numerator keeps the grid exactly symmetric about 0.
        const double x = 4.0 * (2 * i - (grid - 1)) / (grid - 1);
        std::snprintf(buf, sizeof buf, "%.15g", x);
        out << buf << ',';
        const double d = density(kind, x);
        if (std::isinf(d)) {
            out << "inf";
        } else {
            std::snprintf(buf, sizeof buf, "%.15g", d);
            out << buf;
        }
        out << '\n';
    }
}

} // namespace latwalk
