#pragma once

#include <cstddef>
#include <functional>

namespace latwalk {

struct QuadratureOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    /// Cap on integrand evaluations.
    std::size_t max_evaluations = 100'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    std::size_t panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol |I|). Integrand values are never
/// requested at a or b, so integrable endpoint singularities are allowed.
/// Throws NumericalFailure when the evaluation budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

} // namespace latwalk
