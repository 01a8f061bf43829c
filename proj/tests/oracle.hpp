#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library: composite trapezoid sums on fine uniform grids and
// direct evaluation of closed forms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace capillary::oracle {

/// Composite trapezoid rule with `nodes` points on [a, b].
template <class F>
double trapezoid(F&& f, double a, double b, std::size_t nodes) {
    const double h = (b - a) / static_cast<double>(nodes - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < nodes; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

/// int_a^b cos t / sqrt(2 (c - cos t)) dt for c > 1 (regular integrand).
inline double displacement(double c, double a, double b, std::size_t nodes = 10'000'000) {
    return trapezoid([c](double t) { return std::cos(t) / std::sqrt(2.0 * (c - std::cos(t))); }, a, b, nodes);
}

/// xi0 from the integrated-by-parts form, sqrt(2) xi0 = 2 int_{s0}^0
/// sqrt(t - s0) / (1 - t^2)^{3/2} dt, with t = s0 + w^2 so the trapezoid sees a
/// smooth integrand.
inline double half_extent(double psi0, std::size_t nodes = 1'000'000) {
    const double s0 = -std::cos(psi0);
    const auto f = [s0](double w) {
        const double t = s0 + w * w;
        return 2.0 * w * w / std::pow(1.0 - t * t, 1.5);
    };
    return 2.0 * trapezoid(f, 0.0, std::sqrt(-s0), nodes) / std::numbers::sqrt2;
}

/// Solution "I": xi(psi) through (xi2, psi2).
inline double critical_xi(double psi, double psi2, double xi2) {
    return xi2 + std::log(std::tan(psi / 4.0) / std::tan(psi2 / 4.0)) +
           2.0 * (std::cos(psi / 2.0) - std::cos(psi2 / 2.0));
}

/// Tabulated attracting curve: psi grid on [-pi/2, pi/2], xi by cumulative
/// trapezoid from the minimum.
struct Table {
    std::vector<double> xi;
    std::vector<double> height;
    std::vector<double> psi;
};

inline Table attracting_table(double u0, std::size_t nodes) {
    const double c = 1.0 + 0.5 * u0 * u0;
    const double h = std::numbers::pi / static_cast<double>(nodes - 1);
    Table t;
    t.psi.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) t.psi[i] = -std::numbers::pi / 2.0 + h * static_cast<double>(i);
    const auto f = [c](double s) { return std::cos(s) / std::sqrt(2.0 * (c - std::cos(s))); };
    t.xi.assign(nodes, 0.0);
    for (std::size_t i = 1; i < nodes; ++i) t.xi[i] = t.xi[i - 1] + 0.5 * h * (f(t.psi[i - 1]) + f(t.psi[i]));
    const double mid = t.xi[(nodes - 1) / 2];
    for (auto& x : t.xi) x -= mid;
    t.height.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) t.height[i] = std::sqrt(2.0 * (c - std::cos(t.psi[i])));
    return t;
}

inline double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = std::clamp<std::size_t>(static_cast<std::size_t>(it - xs.begin()), 1, xs.size() - 1);
    const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

/// Sup-norm distance between the attracting curve of minimum height u0,
/// shifted so its psi2 point sits at xi2, and solution "I" anchored at
/// (psi2, xi2), over `grid` equally spaced points of [lo, hi].
inline double limit_distance(double u0, double psi2, double xi2, double lo, double hi,
                             std::size_t nodes = 400'001, std::size_t grid = 201) {
    Table t = attracting_table(u0, nodes);
    const double anchor = interpolate(t.psi, t.xi, psi2);
    for (auto& x : t.xi) x += xi2 - anchor;

    double dist = 0.0;
    for (std::size_t k = 0; k < grid; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
        double a = 1e-300;
        double b = std::numbers::pi / 2.0;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            (critical_xi(m, psi2, xi2) < x ? a : b) = m;
        }
        const double critical = 2.0 * std::sin(0.25 * (a + b));
        dist = std::max(dist, std::abs(interpolate(t.xi, t.height, x) - critical));
    }
    return dist;
}

} // namespace capillary::oracle
