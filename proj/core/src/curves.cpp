#include "capillary/curves.hpp"

#include "capillary/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace capillary {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_samples(std::size_t n) {
    if (n < 3) throw DomainError("a sampled curve needs at least 3 points, got " + std::to_string(n));
}

// sqrt(2 (cos p - cos psi)) for psi >= p >= 0.
double repelling_height(double p, double psi) {
    return 2.0 * std::sqrt(std::sin(0.5 * (psi + p)) * std::sin(0.5 * (psi - p)));
}

// State of the arclength system: xi, U, v and the signed root w = +-sqrt(1 - v^2).
using State = std::array<double, 4>;

void rhs(const State& y, State& dyds, double /*s*/) {
    const double u = y[1], v = y[2], w = y[3];
    dyds = {w, v, u * w, -u * v};
}

using Stepper = boost::numeric::odeint::runge_kutta_dopri5<State>;

CurvePoint to_point(const State& y, double s) {
    return CurvePoint::at(y[0], y[1], std::atan2(y[2], y[3]), s);
}

bool is_vertical(const State& y, double eps) {
    return 1.0 - std::abs(std::sin(std::atan2(y[2], y[3]))) <= eps;
}

} // namespace

void CriticalAnchor::validate() const {
    if (!(psi2 > 0.0 && psi2 < std::numbers::pi) || !std::isfinite(xi2)) {
        throw DomainError("critical anchor needs 0 < psi2 < pi, got " + std::to_string(psi2));
    }
}

void IntegratorSettings::validate() const {
    if (!(step > 0.0) || !(tol > 0.0) || !(max_step > 0.0)) {
        throw DomainError("integrator step, max_step and tol must be positive");
    }
    if (!(vertical_eps > 0.0 && vertical_eps < 1.0)) throw DomainError("vertical_eps must lie in (0, 1)");
    if (branch_sign != 1 && branch_sign != -1) throw DomainError("branch_sign must be +1 or -1");
    if (continue_past_vertical && branch_sign == 1) {
        throw DomainError("the positive root past a vertical point admits only the degenerate vertical line");
    }
}

SampledCurve attracting_curve(double u0, std::size_t n, const QuadratureSettings& settings, double psi_margin) {
    require_samples(n);
    if (!(psi_margin >= 0.0 && psi_margin < kHalfPi)) throw DomainError("psi_margin must lie in [0, pi/2)");
    const FamilyParameter family = FamilyParameter::attracting(u0);
    const double psi_max = kHalfPi - psi_margin;
    const double span = static_cast<double>(n - 1);

    SampledCurve curve;
    curve.family = family;
    curve.route = Route::PsiQuadrature;
    curve.normalized = true;
    curve.points.resize(n);
    for (std::size_t k = 0; 2 * k <= n - 1; ++k) {
        const std::size_t mirror = n - 1 - k;
        // Exact antisymmetry of the grid.
        const double psi = psi_max * (static_cast<double>(2 * mirror) - span) / span;
        const double xi = delta_xi(family.c, 0.0, psi, settings);
        const double half = std::sin(0.5 * psi);
        const double height = std::sqrt(u0 * u0 + 4.0 * half * half);
        curve.points[mirror] = CurvePoint::at(xi, height, psi);
        curve.points[k] = CurvePoint::at(-xi, height, -psi);
    }
    return curve;
}

CurvePoint critical_point(const CriticalAnchor& anchor, double psi) {
    anchor.validate();
    if (!(psi > 0.0 && psi < std::numbers::pi)) {
        throw DomainError("solution I is defined for 0 < psi < pi, got " + std::to_string(psi));
    }
    const double xi = anchor.xi2 + std::log(std::tan(0.25 * psi) / std::tan(0.25 * anchor.psi2)) +
                      2.0 * (std::cos(0.5 * psi) - std::cos(0.5 * anchor.psi2));
    return CurvePoint::at(xi, 2.0 * std::sin(0.5 * psi), psi);
}

SampledCurve critical_curve(const CriticalAnchor& anchor, std::size_t n, double psi_min) {
    anchor.validate();
    require_samples(n);
    const double psi_max = std::min(anchor.psi2, kHalfPi);
    if (!(psi_min > 0.0 && psi_min < psi_max)) {
        throw DomainError("critical sampling needs 0 < psi_min < min(psi2, pi/2)");
    }
    SampledCurve curve;
    curve.family = FamilyParameter::critical();
    curve.route = Route::ClosedForm;
    curve.normalized = true;
    curve.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double psi = k + 1 == n ? psi_max
                                      : psi_min + (psi_max - psi_min) * static_cast<double>(k) /
                                                      static_cast<double>(n - 1);
        curve.points.push_back(critical_point(anchor, psi));
    }
    return curve;
}

SampledCurve repelling_curve(double psi0, std::size_t n, const QuadratureSettings& settings) {
    require_samples(n);
    if (!(psi0 > 0.0 && psi0 < kHalfPi)) {
        throw DomainError("repelling curve needs 0 < psi0 < pi/2, got " + std::to_string(psi0));
    }
    const FamilyParameter family = FamilyParameter::repelling(psi0);
    const std::size_t half = n / 2 + 1;

    std::vector<CurvePoint> upper;
    upper.reserve(half);
    upper.push_back(CurvePoint::at(0.0, 0.0, psi0));
    for (std::size_t j = 1; j < half; ++j) {
        const bool last = j + 1 == half;
        const double psi =
            last ? kHalfPi : psi0 + (kHalfPi - psi0) * static_cast<double>(j) / static_cast<double>(half - 1);
        const double xi = delta_xi_from_crossing(psi0, psi0, psi, settings).value;
        const double height = last ? family.u0 : repelling_height(psi0, psi);
        upper.push_back(CurvePoint::at(xi, height, psi));
    }

    SampledCurve curve;
    curve.family = family;
    curve.route = Route::PsiQuadrature;
    curve.normalized = true;
    curve.points.reserve(2 * half - 1);
    for (std::size_t j = half - 1; j >= 1; --j) curve.points.push_back(reflect_origin(upper[j]));
    curve.points.insert(curve.points.end(), upper.begin(), upper.end());
    return curve;
}

SampledCurve integrate_arclength(const CurvePoint& start, double s_max, const IntegratorSettings& settings) {
    settings.validate();
    if (!(std::abs(start.v) <= 1.0)) throw DomainError("start point has |v| > 1");
    if (!(s_max > 0.0) || !std::isfinite(s_max)) throw DomainError("arclength budget must be positive");

    State y{start.xi, start.height, start.v, std::sqrt((1.0 - start.v) * (1.0 + start.v))};
    const double s_start = start.s.value_or(0.0);

    SampledCurve curve;
    curve.family = FamilyParameter::from_c(0.5 * y[1] * y[1] + y[3]);
    curve.route = Route::ArclengthODE;
    curve.normalized = false;
    curve.points.push_back(to_point(y, s_start));

    // Expected sign of w on the current branch; an event fires when it flips.
    // Away from U = 0 the tangent passes through the vertical transversally.
    int sign = 1;
    bool armed = !is_vertical(y, settings.vertical_eps);
    if (!armed && !settings.continue_past_vertical) return curve;

    auto controlled = boost::numeric::odeint::make_controlled(settings.tol, settings.tol, settings.max_step, Stepper());
    Stepper plain;
    State dy{}, next{}, dnext{};

    double s = 0.0;
    double h = std::min({settings.step, settings.max_step, s_max});
    const double h_min = 1e-14;

    while (s < s_max) {
        h = std::min(h, s_max - s);
        rhs(y, dy, s);
        double s_next = s;
        if (controlled.try_step(rhs, y, dy, s_next, next, dnext, h) != boost::numeric::odeint::success) {
            if (h < h_min * std::max(1.0, s)) {
                throw ConvergenceError("arclength step underflow at s = " + std::to_string(s), s, h);
            }
            continue;
        }

        double taken = s_next - s;
        bool hit = false;
        if (armed) {
            if (sign * next[3] < 0.0) {
                // Locate the vertical point inside the step by bisection on its length.
                double lo = 0.0, hi = taken;
                State best = y, trial{}, dtrial{};
                while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * taken) {
                    const double mid = 0.5 * (lo + hi);
                    plain.do_step(rhs, y, dy, s, trial, dtrial, mid);
                    if (sign * trial[3] < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        best = trial;
                    }
                }
                taken = lo;
                next = best;
                hit = true;
            }
        } else if (!is_vertical(next, settings.vertical_eps)) {
            armed = true;
        }

        y = next;
        s += taken;
        curve.points.push_back(to_point(y, s_start + s));

        if (hit) {
            if (!settings.continue_past_vertical) break;
            curve.graph = false;
            sign = settings.branch_sign * sign;
            armed = false;
        }
    }
    return curve;
}

namespace {

// Prepends the image of every non-initial point under `reflect`, with negated arclength.
SampledCurve complete_by_symmetry(SampledCurve half, CurvePoint (*reflect)(const CurvePoint&)) {
    std::vector<CurvePoint> points;
    points.reserve(2 * half.points.size() - 1);
    for (std::size_t j = half.points.size() - 1; j >= 1; --j) {
        CurvePoint q = reflect(half.points[j]);
        if (q.s) q.s = -*q.s;
        points.push_back(q);
    }
    points.insert(points.end(), half.points.begin(), half.points.end());
    half.points = std::move(points);
    half.normalized = true;
    return half;
}

} // namespace

SampledCurve attracting_curve_arclength(double u0, double s_max, const IntegratorSettings& settings) {
    const FamilyParameter family = FamilyParameter::attracting(u0);
    SampledCurve half = integrate_arclength(CurvePoint::at(0.0, u0, 0.0, 0.0), s_max, settings);
    half.family = family;
    return complete_by_symmetry(std::move(half), &reflect_vertical_axis);
}

SampledCurve repelling_curve_arclength(double psi0, double s_max, const IntegratorSettings& settings) {
    if (!(psi0 > 0.0 && psi0 < kHalfPi)) {
        throw DomainError("repelling curve needs 0 < psi0 < pi/2, got " + std::to_string(psi0));
    }
    const FamilyParameter family = FamilyParameter::repelling(psi0);
    SampledCurve half = integrate_arclength(CurvePoint::at(0.0, 0.0, psi0, 0.0), s_max, settings);
    half.family = family;
    return complete_by_symmetry(std::move(half), &reflect_origin);
}

SampledCurve critical_curve_arclength(const CriticalAnchor& anchor, double psi_start, double s_max,
                                      const IntegratorSettings& settings) {
    if (!(psi_start > 0.0 && psi_start < kHalfPi)) throw DomainError("psi_start must lie in (0, pi/2)");
    CurvePoint start = critical_point(anchor, psi_start);
    start.s = 0.0;
    SampledCurve curve = integrate_arclength(start, s_max, settings);
    curve.family = FamilyParameter::critical();
    curve.normalized = true;
    return curve;
}

} // namespace capillary
