#include "capillary/types.hpp"

#include "capillary/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace capillary {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_graph_angle(double psi) {
    if (!(std::abs(psi) <= kHalfPi)) {
        throw DomainError("inclination " + std::to_string(psi) + " outside [-pi/2, pi/2]");
    }
}

} // namespace

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
    case Regime::NoGraphSolution: return "none";
    case Regime::Repelling: return "repelling";
    case Regime::Critical: return "critical";
    case Regime::Attracting: return "attracting";
    }
    return "none";
}

std::optional<Regime> regime_from_string(std::string_view name) noexcept {
    for (auto r : {Regime::NoGraphSolution, Regime::Repelling, Regime::Critical, Regime::Attracting}) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

std::string_view to_string(Route route) noexcept {
    switch (route) {
    case Route::PsiQuadrature: return "psi-quadrature";
    case Route::ClosedForm: return "closed-form";
    case Route::ArclengthODE: return "arclength-ode";
    }
    return "psi-quadrature";
}

std::optional<Route> route_from_string(std::string_view name) noexcept {
    for (auto r : {Route::PsiQuadrature, Route::ClosedForm, Route::ArclengthODE}) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

CurvePoint CurvePoint::at(double xi, double height, double psi, std::optional<double> s) {
    return CurvePoint{xi, height, psi, std::sin(psi), s};
}

FamilyParameter FamilyParameter::from_c(double c) {
    FamilyParameter f;
    f.c = c;
    f.regime = classify(c);
    switch (f.regime) {
    case Regime::Attracting:
        f.delta = c - 1.0;
        f.u0 = std::sqrt(2.0 * f.delta);
        break;
    case Regime::Repelling:
        f.psi0 = std::acos(c);
        f.u0 = std::sqrt(2.0 * c);
        break;
    case Regime::Critical:
    case Regime::NoGraphSolution:
        break;
    }
    return f;
}

FamilyParameter FamilyParameter::attracting(double u0) {
    if (!(u0 > 0.0) || !std::isfinite(u0)) {
        throw DomainError("attracting family needs a positive minimum height, got " + std::to_string(u0));
    }
    FamilyParameter f;
    f.delta = 0.5 * u0 * u0;
    f.c = 1.0 + f.delta;
    f.u0 = u0;
    f.regime = classify(f.c);
    if (f.regime != Regime::Attracting) {
        throw DomainError("minimum height " + std::to_string(u0) + " is indistinguishable from the critical curve");
    }
    return f;
}

FamilyParameter FamilyParameter::repelling(double psi0) {
    if (!(std::abs(psi0) < kHalfPi) || psi0 == 0.0) {
        throw DomainError("repelling family needs 0 < |psi0| < pi/2, got " + std::to_string(psi0));
    }
    FamilyParameter f;
    f.c = std::cos(psi0);
    f.regime = classify(f.c);
    if (f.regime != Regime::Repelling) {
        throw DomainError("crossing angle " + std::to_string(psi0) + " is indistinguishable from the critical curve");
    }
    f.psi0 = psi0;
    f.u0 = std::sqrt(2.0 * f.c);
    return f;
}

FamilyParameter FamilyParameter::critical() {
    return FamilyParameter{};
}

PhysicalScale::PhysicalScale(double kappa, std::optional<double> sigma) : kappa_(kappa), sigma_(sigma) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw DomainError("capillarity constant must be positive, got " + std::to_string(kappa));
    }
    if (sigma && !(*sigma > 0.0)) {
        throw DomainError("surface tension must be positive");
    }
}

PhysicalScale PhysicalScale::from_fluid(double rho, double g, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("surface tension must be positive");
    return PhysicalScale(rho * g / sigma, rho, g, sigma);
}

PhysicalScale::PhysicalScale(double kappa, double rho, double g, double sigma)
    : PhysicalScale(kappa, sigma) {
    if (std::abs(kappa - rho * g / sigma) > 1e-9 * kappa) {
        throw DomainError("kappa is inconsistent with rho g / sigma");
    }
    rho_ = rho;
    g_ = g;
}

double first_integral(const CurvePoint& point) {
    require_graph_angle(point.psi);
    return 0.5 * point.height * point.height + std::cos(point.psi);
}

double arclength_first_integral(const CurvePoint& point) {
    if (!(std::abs(point.v) <= 1.0)) throw DomainError("|v| exceeds 1");
    return 0.5 * point.height * point.height + std::sqrt((1.0 - point.v) * (1.0 + point.v));
}

Regime classify(double c) {
    if (!std::isfinite(c)) throw DomainError("first-integral constant is not finite");
    if (std::abs(c - 1.0) <= kCriticalTolerance) return Regime::Critical;
    if (c <= 0.0) return Regime::NoGraphSolution;
    return c < 1.0 ? Regime::Repelling : Regime::Attracting;
}

std::pair<double, double> to_nondimensional(double x, double u, const PhysicalScale& scale) {
    const double root = std::sqrt(scale.kappa());
    return {root * x, root * u};
}

std::pair<double, double> to_physical(double xi, double height, const PhysicalScale& scale) {
    const double root = std::sqrt(scale.kappa());
    return {xi / root, height / root};
}

CurvePoint reflect_vertical_axis(const CurvePoint& p) {
    return CurvePoint{-p.xi, p.height, -p.psi, -p.v, p.s};
}

CurvePoint reflect_horizontal_axis(const CurvePoint& p) {
    return CurvePoint{p.xi, -p.height, -p.psi, -p.v, p.s};
}

CurvePoint reflect_origin(const CurvePoint& p) {
    return CurvePoint{-p.xi, -p.height, p.psi, p.v, p.s};
}

SampledCurve translate(SampledCurve curve, double dxi) {
    for (auto& p : curve.points) p.xi += dxi;
    curve.normalized = curve.normalized && dxi == 0.0;
    return curve;
}

} // namespace capillary
