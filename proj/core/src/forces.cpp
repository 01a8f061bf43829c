#include "capillary/forces.hpp"

#include "capillary/curves.hpp"
#include "capillary/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace capillary {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::optional<double> dimensional(double f, const std::optional<PhysicalScale>& scale) {
    if (scale && scale->sigma()) return *scale->sigma() * f;
    return std::nullopt;
}

struct ScanResult {
    double lo = 0.0;
    double hi = 0.0;
    int brackets = 0;
    double min_separation = std::numeric_limits<double>::infinity();
    double max_separation = -std::numeric_limits<double>::infinity();
};

// Log-spaced scan of residual(p) over [p_min, p_max]; keeps the first sign change.
ScanResult scan(const std::function<double(double)>& separation, double target, double p_min, double p_max,
                int samples) {
    ScanResult r;
    double prev_p = 0.0, prev_g = 0.0;
    bool found = false;
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        const double p = i + 1 == samples ? p_max : p_min * std::pow(p_max / p_min, t);
        const double sep = separation(p);
        r.min_separation = std::min(r.min_separation, sep);
        r.max_separation = std::max(r.max_separation, sep);
        const double g = sep - target;
        if (i > 0 && (g == 0.0 || (prev_g < 0.0) != (g < 0.0))) {
            ++r.brackets;
            if (!found) {
                r.lo = prev_p;
                r.hi = p;
                found = true;
            }
        }
        prev_p = p;
        prev_g = g;
    }
    return r;
}

double bisect(const std::function<double(double)>& residual, double lo, double hi, double tol) {
    double g_lo = residual(lo);
    if (g_lo == 0.0) return lo;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = residual(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

[[noreturn]] void infeasible(const std::string& what) {
    throw InfeasibleConfigurationError(what);
}

} // namespace

void PlateConfig::validate() const {
    for (double g : {gamma1, gamma2}) {
        if (!(g >= 0.0 && g <= std::numbers::pi)) {
            throw DomainError("contact angle " + std::to_string(g) + " outside [0, pi]");
        }
    }
    if (separation && !(*separation >= 0.0)) throw DomainError("plate separation must be non-negative");
}

ForceResult attracting_force(double u0, const std::optional<PhysicalScale>& scale) {
    if (!(u0 >= 0.0) || !std::isfinite(u0)) {
        throw DomainError("minimum height must be non-negative, got " + std::to_string(u0));
    }
    FamilyParameter family = FamilyParameter::from_c(1.0 + 0.5 * u0 * u0);
    family.u0 = u0;
    family.delta = 0.5 * u0 * u0;
    const double f = u0 * u0;
    return ForceResult{f, family, dimensional(f, scale)};
}

ForceResult repelling_force(double psi0, const std::optional<PhysicalScale>& scale) {
    if (!(std::abs(psi0) < kHalfPi)) {
        throw DomainError("repelling force needs |psi0| < pi/2, got " + std::to_string(psi0));
    }
    FamilyParameter family = FamilyParameter::from_c(std::cos(psi0));
    if (family.regime == Regime::Repelling) family.psi0 = psi0;
    const double f = -2.0 * (1.0 - std::cos(psi0));
    return ForceResult{f, family, dimensional(f, scale)};
}

ForceResult family_force(const FamilyParameter& family, const std::optional<PhysicalScale>& scale) {
    switch (family.regime) {
    case Regime::Attracting: return attracting_force(family.u0, scale);
    case Regime::Repelling: return repelling_force(family.psi0, scale);
    case Regime::Critical: return ForceResult{0.0, family, dimensional(0.0, scale)};
    case Regime::NoGraphSolution: break;
    }
    throw DomainError("c <= 0 admits no graph solution and no plate force");
}

double plate_inclination(double gamma, PlateSide side) {
    if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
        throw DomainError("contact angle " + std::to_string(gamma) + " outside [0, pi]");
    }
    return side == PlateSide::RightFacing ? kHalfPi - gamma : gamma - kHalfPi;
}

PlateGeometry plate_separation(const FamilyParameter& family, const PlateConfig& config,
                               const QuadratureSettings& settings) {
    config.validate();
    PlateGeometry g;
    g.psi1 = plate_inclination(config.gamma1, config.side1);
    g.psi2 = plate_inclination(config.gamma2, config.side2);
    g.force = family_force(family);

    switch (family.regime) {
    case Regime::Attracting: {
        if (g.psi1 > 0.0) infeasible("plate 1 inclination must lie on the descending branch (psi <= 0)");
        if (g.psi2 < 0.0) infeasible("plate 2 inclination must lie on the ascending branch (psi >= 0)");
        g.xi1 = delta_xi(family.c, 0.0, g.psi1, settings);
        g.xi2 = delta_xi(family.c, 0.0, g.psi2, settings);
        g.separation = delta_xi(family.c, g.psi1, g.psi2, settings);
        const auto height = [&](double psi) {
            const double h = std::sin(0.5 * psi);
            return std::sqrt(family.u0 * family.u0 + 4.0 * h * h);
        };
        g.height1 = height(g.psi1);
        g.height2 = height(g.psi2);
        break;
    }
    case Regime::Repelling: {
        const double p = std::abs(family.psi0);
        const double sign = family.psi0 < 0.0 ? -1.0 : 1.0;
        for (double psi : {g.psi1, g.psi2}) {
            if (!(sign * psi >= p)) {
                infeasible("plate inclination " + std::to_string(psi) + " is not attained on the repelling curve "
                           "with crossing angle " + std::to_string(family.psi0));
            }
        }
        // Upper-half offsets from the origin; the curve is odd about it.
        const double r1 = delta_xi_from_crossing(p, p, std::abs(g.psi1), settings).value;
        const double r2 = delta_xi_from_crossing(p, p, std::abs(g.psi2), settings).value;
        const auto height = [&](double psi) {
            return 2.0 * std::sqrt(std::sin(0.5 * (std::abs(psi) + p)) * std::sin(0.5 * (std::abs(psi) - p)));
        };
        g.xi1 = -r1;
        g.xi2 = r2;
        g.separation = r1 + r2;
        // Plate 1 sits left of the crossing: below the axis for psi0 > 0, above it for psi0 < 0.
        g.height1 = -sign * height(g.psi1);
        g.height2 = sign * height(g.psi2);
        break;
    }
    case Regime::Critical: {
        if (!(g.psi1 > 0.0 && g.psi2 > 0.0) || g.psi1 > g.psi2) {
            infeasible("solution I needs 0 < psi1 <= psi2 <= pi/2");
        }
        const CriticalAnchor anchor{};
        const CurvePoint a = critical_point(anchor, g.psi1);
        const CurvePoint b = critical_point(anchor, g.psi2);
        g.xi1 = a.xi;
        g.xi2 = b.xi;
        g.height1 = a.height;
        g.height2 = b.height;
        g.separation = b.xi - a.xi;
        break;
    }
    case Regime::NoGraphSolution:
        infeasible("c <= 0 admits no graph solution");
    }
    return g;
}

PlateSolution solve_plates(const PlateConfig& config, Regime hint, const SolveSettings& settings) {
    config.validate();
    if (!config.separation || !(*config.separation > 0.0)) {
        throw DomainError("the inverse plate problem needs a positive separation");
    }
    if (settings.scan_samples < 2) throw DomainError("scan needs at least 2 samples");
    const double target = *config.separation;
    const double psi1 = plate_inclination(config.gamma1, config.side1);
    const double psi2 = plate_inclination(config.gamma2, config.side2);

    std::function<FamilyParameter(double)> make;
    double p_min = 0.0, p_max = 0.0;
    switch (hint) {
    case Regime::Attracting:
        if (psi1 > 0.0 || psi2 < 0.0) {
            infeasible("attracting plates need psi1 <= 0 <= psi2, got " + std::to_string(psi1) + ", " +
                       std::to_string(psi2));
        }
        make = [](double u0) { return FamilyParameter::attracting(u0); };
        p_min = settings.u0_min;
        p_max = settings.u0_max;
        break;
    case Regime::Repelling: {
        if (psi1 == 0.0 || psi2 == 0.0 || (psi1 < 0.0) != (psi2 < 0.0)) {
            infeasible("repelling plates need inclinations of one common nonzero sign");
        }
        const double sign = psi1 < 0.0 ? -1.0 : 1.0;
        make = [sign](double psi0) { return FamilyParameter::repelling(sign * psi0); };
        p_min = settings.psi0_min;
        p_max = std::min({std::abs(psi1), std::abs(psi2), kHalfPi * (1.0 - 1e-12)});
        break;
    }
    case Regime::Critical: {
        const FamilyParameter family = FamilyParameter::critical();
        const PlateGeometry g = plate_separation(family, config, settings.quadrature);
        if (std::abs(g.separation - target) > 1e-9) {
            throw NoSolutionError("solution I fixes the separation for these angles", g.separation, g.separation);
        }
        return PlateSolution{family, g.force, g, 1};
    }
    case Regime::NoGraphSolution:
        throw DomainError("no plate configuration exists for c <= 0");
    }
    if (!(p_min > 0.0 && p_min < p_max)) throw DomainError("empty family parameter range for the scan");

    const auto separation = [&](double p) { return plate_separation(make(p), config, settings.quadrature).separation; };
    const ScanResult r = scan(separation, target, p_min, p_max, settings.scan_samples);
    if (r.brackets == 0) {
        throw NoSolutionError("separation " + std::to_string(target) + " is outside the attainable range [" +
                                  std::to_string(r.min_separation) + ", " + std::to_string(r.max_separation) + "]",
                              r.min_separation, r.max_separation);
    }
    const double p = bisect([&](double q) { return separation(q) - target; }, r.lo, r.hi, settings.parameter_tol);
    const FamilyParameter family = make(p);
    PlateSolution out;
    out.family = family;
    out.geometry = plate_separation(family, config, settings.quadrature);
    out.force = out.geometry.force;
    out.brackets = r.brackets;
    return out;
}

} // namespace capillary
