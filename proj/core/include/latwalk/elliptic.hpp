#pragma once

#include "latwalk/spectral.hpp"

#include <functional>
#include <iosfwd>

namespace latwalk {

/// Complete elliptic integrals of the first and second kind at modulus k.
struct EllipticPair {
    double k = 0.0;
    double K = 0.0;
    double E = 0.0;
    int iterations = 0;
};

/// K(k) and E(k) by the arithmetic-geometric mean, 0 <= k < 1.
/// Throws DomainError outside that range.
EllipticPair elliptic_KE(double k);

/// Same integrals parameterized by the complementary modulus k' = sqrt(1-k^2),
/// 0 < k' <= 1. Keeps full precision as k -> 1, where K has a log singularity.
EllipticPair elliptic_KE_complementary(double kprime);

/// Arcsine density 1/(pi sqrt(4-x^2)) on (-2, 2).
double arcsine_density(double x);
/// Semicircle density sqrt(4-x^2)/(2 pi) on [-2, 2].
double semicircle_density(double x);

/// Closed-form densities on [-4, 4], with xi(x) = sqrt(1 - x^2/16):
///   aa: K(xi) / (2 pi^2)
///   wa: (K(xi) - E(xi)) / pi^2
///   ww: 2 ((1 + x^2/16) K(xi) - 2 E(xi)) / pi^2
/// Zero for |x| > 4. All three diverge logarithmically at x = 0, where
/// +infinity is returned.
double density(DensityKind kind, double x);

/// Density of the Mellin convolution of two symmetric densities supported in
/// [-2, 2]: 2 * int_{x/2}^{2} f(x/y) g(y) dy/y, to absolute error `tol`.
/// Zero for |x| >= 4; even in x; x = 0 is rejected.
double mellin_density_convolve(const std::function<double(double)>& f,
                               const std::function<double(double)>& g, double x,
                               double tol = 1e-9);

/// Factor densities (f, g) whose Mellin convolution is the given kernel.
std::pair<std::function<double(double)>, std::function<double(double)>>
density_factors(DensityKind kind);

/// Width of the panel next to the origin that is integrated analytically.
inline constexpr double singular_panel_width = 1e-6;

/// 2 * int_0^4 x^m density(kind, x) dx for even m >= 0, to absolute error
/// tol * max(1, result).
double density_moment(DensityKind kind, int m, double tol = 1e-9);

/// CSV "x,density" on a uniform grid of `grid` points over [-4, 4]; the
/// singular point is written as "inf".
void write_density_csv(std::ostream& out, DensityKind kind, int grid);

} // namespace latwalk
