#pragma once

// Globally adaptive Gauss-Kronrod (7, 15) integration: the panel with the
// largest |K - G| is bisected until the summed estimate meets
// max(abs_tol, rel_tol |I|). Nodes and weights come from Boost.Math.

#include "capillary/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <string>

namespace capillary::detail {

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using Gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * wk[0];
    double gauss = fc * wg[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double dx = half * x[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += wk[i] * sum;
        // Even Kronrod abscissae are the Gauss nodes.
        if (i % 2 == 0) gauss += wg[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

template <class F>
Estimate integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol, int max_subdivisions) {
    if (a == b) return {};
    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod_panel(f, a, b);
    double value = first.value;
    double error = first.error;
    panels.push(first);
    int subdivisions = 1;

    const auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(value)); };
    while (error > target()) {
        if (subdivisions >= max_subdivisions) {
            throw ConvergenceError("quadrature did not reach tolerance within " + std::to_string(max_subdivisions) +
                                       " subdivisions",
                                   value, error);
        }
        Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw ConvergenceError("quadrature panel collapsed below machine resolution", value, error);
        }
        panels.pop();
        Panel left = gauss_kronrod_panel(f, worst.a, mid);
        Panel right = gauss_kronrod_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the rounding drift of incremental updates.
    double total = 0.0;
    double total_error = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        total_error += panels.top().error;
        panels.pop();
    }
    return Estimate{total, total_error, subdivisions};
}

} // namespace capillary::detail
