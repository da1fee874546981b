#pragma once

// Independent reference computations used only by tests. None of these share
// code paths with the library's ball/vector-iteration or quadrature engines.

#include "latwalk/graph.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// Closed walks of length m from o by exhaustive depth-first enumeration.
inline std::uint64_t enumerate_closed_walks(const latwalk::ImplicitGraph& g,
                                            const latwalk::Vertex& o, int m)
{
    std::function<std::uint64_t(const latwalk::Vertex&, int)> go =
        [&](const latwalk::Vertex& v, int left) -> std::uint64_t {
        if (left == 0) {
            return v == o ? 1 : 0;
        }
        std::uint64_t total = 0;
        for (const auto& w : g.neighbors(v)) {
            total += go(w, left - 1);
        }
        return total;
    };
    return go(o, m);
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

inline Matrix adjacency_matrix(const latwalk::FiniteGraph& g)
{
    Matrix a(g.size(), std::vector<std::uint64_t>(g.size(), 0));
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        for (auto j : g.neighbors(i)) {
            a[i][j] = 1;
        }
    }
    return a;
}

inline Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix c(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

/// (A^m)_{oo} by dense matrix powering; exact while entries fit in 64 bits.
inline std::uint64_t matrix_power_walks(const latwalk::FiniteGraph& g, std::uint32_t o, int m)
{
    const Matrix a = adjacency_matrix(g);
    Matrix p(g.size(), std::vector<std::uint64_t>(g.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i) {
        p[i][i] = 1;
    }
    for (int s = 0; s < m; ++s) {
        p = multiply(p, a);
    }
    return p[o][o];
}

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

/// K(k) and E(k) straight from their defining integrals over [0, pi/2].
inline double elliptic_K(double k)
{
    return simpson([k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); },
                   0.0, std::numbers::pi / 2, 4000);
}

inline double elliptic_E(double k)
{
    return simpson([k](double t) { return std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); }, 0.0,
                   std::numbers::pi / 2, 4000);
}

inline std::uint64_t binom(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

inline std::uint64_t catalan(int m)
{
    return binom(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

} // namespace oracle
