#include "latwalk/quadrature.hpp"

#include "latwalk/error.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <queue>
#include <vector>

namespace latwalk {

namespace {

// Kronrod abscissae on [0,1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * wgk[7];
    double gauss = fc * wg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += wgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += wg[j / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options)
{
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidParameter("integrate: bounds must be finite");
    }
    QuadratureResult res;
    if (a == b) {
        return res;
    }
    if (a > b) {
        auto r = integrate(f, b, a, options);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Panel> work;
    std::vector<Panel> done; // panels too narrow to split further
    work.push(gauss_kronrod_15(f, a, b));
    res.evaluations = 15;

    auto totals = [&] {
        double v = 0.0;
        double e = 0.0;
        auto copy = work;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().error;
            copy.pop();
        }
        for (const auto& p : done) {
            v += p.value;
            e += p.error;
        }
        return std::pair{v, e};
    };

    double value = work.top().value;
    double error = work.top().error;
    while (true) {
        if (!std::isfinite(value) || !std::isfinite(error)) {
            throw NumericalFailure("integrate: non-finite integrand value on [" +
                                   std::to_string(a) + ", " + std::to_string(b) + "]");
        }
        if (error <= std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
            break;
        }
        if (work.empty()) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "integrate: error estimate %.3e stalled above tolerance on [%g, %g]",
                          error, a, b);
            throw NumericalFailure(buf);
        }
        if (res.evaluations + 30 > options.max_evaluations) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "integrate: %zu evaluations exhausted with error estimate %.3e on "
                          "[%g, %g]",
                          res.evaluations, error, a, b);
            throw NumericalFailure(buf);
        }
        const Panel worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            done.push_back(worst);
            continue;
        }
        const Panel left = gauss_kronrod_15(f, worst.a, mid);
        const Panel right = gauss_kronrod_15(f, mid, worst.b);
        res.evaluations += 30;
        // Incremental update; resummed periodically to shed rounding drift.
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        if (work.size() % 64 == 0) {
            std::tie(value, error) = totals();
        }
    }
    std::tie(res.value, res.error) = totals();
    res.panels = work.size() + done.size();
    return res;
}

} // namespace latwalk
