// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "capillary/curves.hpp"
#include "capillary/errors.hpp"
#include "capillary/forces.hpp"
#include "capillary/quadrature.hpp"
#include "capillary/regions.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace capillary;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// Recorded from tests/oracle.hpp before the library was written.
constexpr double kFinalLimitDistance = 0.0034198322619;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-40s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), ms);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::mt19937_64 rng(20260218);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double literal_drift = 0.0;

Outcome first_integrals() {
    // psi-form over the whole of s in [0, 10], through vertical points; the
    // sqrt(1 - v^2) forms on the graph part of each curve, where cos psi >= 0.
    IntegratorSettings through;
    through.continue_past_vertical = true;
    double psi_form = 0.0, arclength_form = 0.0;
    for (int k = 0; k < 20; ++k) {
        const CurvePoint start = CurvePoint::at(0.0, uniform(-1.5, 1.5), uniform(-1.5, 1.5), 0.0);
        const double c = 0.5 * start.height * start.height + std::cos(start.psi);
        const double big_c = start.height * start.height + std::cos(start.psi);
        for (const auto& p : integrate_arclength(start, 10.0, through).points) {
            psi_form = std::max(psi_form, std::abs(0.5 * p.height * p.height + std::cos(p.psi) - c));
        }
        for (const auto& p : integrate_arclength(start, 10.0).points) {
            arclength_form = std::max(arclength_form, std::abs(arclength_first_integral(p) - c));
            literal_drift = std::max(literal_drift,
                                     std::abs(p.height * p.height + std::sqrt((1.0 - p.v) * (1.0 + p.v)) - big_c));
        }
    }
    return {psi_form <= 1e-8 && arclength_form <= 1e-8,
            fmt("psi-form %.2e, 1/2 U^2 + sqrt(1-v^2) %.2e (tol 1e-8)", psi_form, arclength_form)};
}

Outcome closed_form() {
    const CriticalAnchor anchor{};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double psi = 0.05 + (kHalfPi - 0.05) * i / 199.0;
        const double closed = critical_point(anchor, psi).xi;
        const double quad = anchor.xi2 + delta_xi(1.0, anchor.psi2, psi);
        worst = std::max(worst, std::abs(closed - quad));
    }
    return {worst <= 1e-9, fmt("max |dxi| %.2e over 200 points (tol 1e-9)", worst)};
}

Outcome regularization() {
    QuadratureSettings sub, reg;
    sub.singular_endpoint_strategy = SingularEndpointStrategy::SubstitutionSqrt;
    reg.singular_endpoint_strategy = SingularEndpointStrategy::Regularized;
    double worst = 0.0, prev = INFINITY;
    bool decreasing = true;
    for (int k = 1; k <= 50; ++k) {
        const double psi0 = kHalfPi * k / 50.0;
        const double a = xi0(psi0, sub).xi0;
        const double b = xi0(psi0, reg).xi0;
        worst = std::max(worst, std::abs(a - b));
        decreasing = decreasing && b < prev;
        prev = b;
    }
    const double end = std::abs(xi0(kHalfPi).xi0);
    return {worst <= 1e-8 && end <= 1e-10 && decreasing,
            fmt("routes differ by %.2e (tol 1e-8), |xi0(pi/2)| %.2e (tol 1e-10), decreasing %.0f", worst, end,
                decreasing)};
}

Outcome derivative() {
    double worst = 0.0;
    for (double psi0 : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
        const double u0 = std::sqrt(2.0 * std::cos(psi0));
        const double h = 1e-4;
        const auto at = [](double u) { return xi0(std::acos(0.5 * u * u)).xi0; };
        const double fd = (at(u0 + h) - at(u0 - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(dxi0_dU0(psi0) - fd));
    }
    std::vector<double> tail;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) tail.push_back(std::abs(dxi0_dU0(kHalfPi - eps)));
    const bool vanishing = std::is_sorted(tail.rbegin(), tail.rend()) && tail.back() < 1e-3;
    return {worst <= 1e-5 && vanishing,
            fmt("max |analytic - FD| %.2e (tol 1e-5), |d| at pi/2 - 1e-4 = %.2e", worst, tail.back())};
}

Outcome extent_bound() {
    double margin = INFINITY;
    for (double u0 : {0.25, 0.5, 1.0, 2.0}) {
        const auto curve = attracting_curve(u0, 201);
        const double extent = curve.points.back().xi - curve.points.front().xi;
        const double delta = 0.5 * u0 * u0;
        margin = std::min(margin, std::sqrt(2.0 / delta) - extent);
    }
    return {margin > 0.0, fmt("min sqrt(2/delta) - extent = %.4f", margin)};
}

Outcome repelling_range() {
    double f_min = INFINITY, f_max = -INFINITY, asym = 0.0, u_max = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double psi0 = kHalfPi * k / 101.0;
        const double f = repelling_force(psi0).f;
        f_min = std::min(f_min, f);
        f_max = std::max(f_max, f);
        asym = std::max(asym, std::abs(f - repelling_force(-psi0).f));
        for (const auto& p : repelling_curve(psi0, 41).points) u_max = std::max(u_max, std::abs(p.height));
    }
    const bool pass = f_min > -2.0 && f_max <= 0.0 && asym == 0.0 && u_max < std::sqrt(2.0);
    return {pass, fmt("F in [%.6f, %.6f], max |U| %.12f < sqrt 2", f_min, f_max, u_max) +
                      (asym == 0.0 ? ", F even" : ", F not even")};
}

Outcome force_values() {
    const double rep = repelling_force(kPi / 3.0).f;
    const double ulps = std::abs(rep + 1.0) / std::numeric_limits<double>::epsilon();
    const double att = attracting_force(1.0).f;
    int mismatches = 0;
    for (int k = 0; k < 20; ++k) {
        const double u0 = uniform(0.2, 2.0);
        const double f = attracting_force(u0).f;
        for (int j = 0; j < 20; ++j) {
            PlateConfig cfg{uniform(0.0, kHalfPi), uniform(0.0, kHalfPi)};
            if (plate_separation(FamilyParameter::attracting(u0), cfg).force.f != f) ++mismatches;
        }
        const double psi0 = uniform(0.1, 1.4);
        const double g = repelling_force(psi0).f;
        for (int j = 0; j < 20; ++j) {
            PlateConfig cfg{uniform(0.0, kHalfPi - psi0), uniform(0.0, kHalfPi - psi0), PlateSide::RightFacing,
                            PlateSide::RightFacing};
            if (plate_separation(FamilyParameter::repelling(psi0), cfg).force.f != g) ++mismatches;
        }
    }
    return {ulps <= 4.0 && att == 1.0 && mismatches == 0,
            fmt("F(pi/3) = -1 within %.0f ulp, F(u0=1) = %.17g, placement mismatches %.0f", ulps, att, mismatches)};
}

Outcome cross_route() {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double u0 = uniform(0.1, 2.0);
        const auto curve = attracting_curve_arclength(u0);
        const double c = curve.family.c;
        for (const auto& p : curve.points) {
            worst = std::max(worst, std::abs(p.xi - delta_xi(c, 0.0, p.psi)));
            worst = std::max(worst, std::abs(p.height - std::sqrt(2.0 * (c - std::cos(p.psi)))));
        }
    }
    for (int k = 0; k < 10; ++k) {
        const double psi0 = uniform(0.1, 1.45);
        const auto curve = repelling_curve_arclength(psi0);
        const double c = curve.family.c;
        for (const auto& p : curve.points) {
            if (p.psi <= psi0) continue;
            const double side = p.height < 0.0 ? -1.0 : 1.0;
            const double quad = delta_xi_from_crossing(psi0, psi0, p.psi).value;
            worst = std::max(worst, std::abs(p.xi - side * quad));
            worst = std::max(worst, std::abs(p.height - side * std::sqrt(2.0 * (c - std::cos(p.psi)))));
        }
    }
    for (int k = 0; k < 10; ++k) {
        const CriticalAnchor anchor{uniform(0.5, kHalfPi), uniform(-1.0, 1.0)};
        const auto curve = critical_curve_arclength(anchor, uniform(0.05, 0.45));
        for (const auto& p : curve.points) {
            worst = std::max(worst, std::abs(p.xi - anchor.xi2 - delta_xi(1.0, anchor.psi2, p.psi)));
            worst = std::max(worst, std::abs(p.height - std::sqrt(2.0 * (1.0 - std::cos(p.psi)))));
        }
    }
    return {worst <= 1e-6, fmt("max pointwise difference %.2e over 30 curves (tol 1e-6)", worst)};
}

Outcome limit() {
    const auto r = limit_sweep({0.2, 0.1, 0.05, 0.025}, CriticalAnchor{}, Window{-3.0, -0.5});
    bool decreasing = true;
    for (std::size_t i = 1; i < r.entries.size(); ++i) {
        decreasing = decreasing && r.entries[i].distance < r.entries[i - 1].distance;
    }
    const double last = r.entries.back().distance;
    const double off = std::abs(last - kFinalLimitDistance);
    return {decreasing && off <= 1e-8,
            fmt("distances %.4g ... %.10f, oracle offset %.2e (tol 1e-8)", r.entries.front().distance, last, off)};
}

Outcome inverse() {
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double u0 = uniform(0.1, 3.0);
        PlateConfig cfg{uniform(0.0, 1.4), uniform(0.0, 1.4)};
        cfg.separation = plate_separation(FamilyParameter::attracting(u0), cfg).separation;
        worst = std::max(worst, std::abs(solve_plates(cfg, Regime::Attracting).family.u0 - u0));
    }
    for (int k = 0; k < 8; ++k) {
        const double psi0 = uniform(0.1, 1.3);
        PlateConfig cfg{uniform(0.0, kHalfPi - psi0), uniform(0.0, kHalfPi - psi0), PlateSide::RightFacing,
                        PlateSide::RightFacing};
        cfg.separation = plate_separation(FamilyParameter::repelling(psi0), cfg).separation;
        worst = std::max(worst, std::abs(solve_plates(cfg, Regime::Repelling).family.psi0 - psi0));
    }
    bool rejected = false;
    PlateConfig far{0.0, 0.0};
    far.separation = 10.0;
    try {
        solve_plates(far, Regime::Attracting);
    } catch (const NoSolutionError&) {
        rejected = true;
    }
    return {worst <= 1e-8 && rejected,
            fmt("max parameter error %.2e (tol 1e-8), separation 10 rejected %.0f", worst, rejected)};
}

} // namespace

int main() {
    report(1, "first-integral conservation", first_integrals);
    std::printf("[NOTE]  1 printed arclength form U^2 + sqrt(1-v^2) drifts by %.3f: not an invariant, "
                "the conserved quantity carries 1/2 U^2\n",
                literal_drift);
    report(2, "closed-form critical curve", closed_form);
    report(3, "singular-integral regularization", regularization);
    report(4, "half-extent derivative", derivative);
    report(5, "attracting extent bound", extent_bound);
    report(6, "repelling force range and symmetry", repelling_range);
    report(7, "force values and position independence", force_values);
    report(8, "cross-route curve equivalence", cross_route);
    report(9, "limit construction", limit);
    report(10, "inverse plate problem", inverse);
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
