#pragma once

// Domain types for the two-dimensional capillarity equation in universal
// coordinates xi = sqrt(kappa) x, U = sqrt(kappa) u, in which the planar
// curvature of a meniscus equals its height and every solution satisfies
//
//     U^2 / 2 + cos(psi) = c.
//
// All angles are radians.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace capillary {

/// Solutions with |c - 1| below this are treated as the critical curve.
inline constexpr double kCriticalTolerance = 1e-12;

enum class Regime { NoGraphSolution, Repelling, Critical, Attracting };

std::string_view to_string(Regime regime) noexcept;
std::optional<Regime> regime_from_string(std::string_view name) noexcept;

/// One sample of a solution curve. psi and v = sin(psi) are both stored.
struct CurvePoint {
    double xi = 0.0;
    double height = 0.0;
    double psi = 0.0;
    double v = 0.0;
    std::optional<double> s;

    /// Builds a point from its inclination; v is derived.
    static CurvePoint at(double xi, double height, double psi, std::optional<double> s = std::nullopt);
};

/// The first-integral constant c together with its regime and the
/// quantities derived from it.
struct FamilyParameter {
    double c = 1.0;
    Regime regime = Regime::Critical;
    /// c - 1; zero unless attracting.
    double delta = 0.0;
    /// Attracting: minimum height sqrt(2 delta). Repelling: height of the
    /// vertical endpoints sqrt(2 cos psi0). Zero otherwise.
    double u0 = 0.0;
    /// Axis-crossing angle of a repelling curve; zero otherwise.
    double psi0 = 0.0;

    /// Classifies c. Repelling families get psi0 = acos(c) >= 0.
    static FamilyParameter from_c(double c);
    static FamilyParameter attracting(double u0);
    /// Signed crossing angle, 0 < |psi0| < pi/2.
    static FamilyParameter repelling(double psi0);
    static FamilyParameter critical();
};

enum class Route { PsiQuadrature, ClosedForm, ArclengthODE };

std::string_view to_string(Route route) noexcept;
std::optional<Route> route_from_string(std::string_view name) noexcept;

struct SampledCurve {
    std::vector<CurvePoint> points;
    FamilyParameter family;
    Route route = Route::PsiQuadrature;
    /// Canonical horizontal translation applied.
    bool normalized = false;
    /// False once an arclength integration has been continued past a vertical point.
    bool graph = true;
};

/// Capillarity constant kappa = rho g / sigma, in 1/length^2.
class PhysicalScale {
public:
    explicit PhysicalScale(double kappa, std::optional<double> sigma = std::nullopt);
    /// kappa derived from density difference, gravity and surface tension.
    static PhysicalScale from_fluid(double rho, double g, double sigma);
    /// Validates consistency of an explicit kappa with rho g / sigma.
    PhysicalScale(double kappa, double rho, double g, double sigma);

    double kappa() const noexcept { return kappa_; }
    std::optional<double> sigma() const noexcept { return sigma_; }
    std::optional<double> rho() const noexcept { return rho_; }
    std::optional<double> g() const noexcept { return g_; }

private:
    double kappa_;
    std::optional<double> sigma_;
    std::optional<double> rho_;
    std::optional<double> g_;
};

/// U^2 / 2 + cos(psi).
double first_integral(const CurvePoint& point);

/// U^2 / 2 + sqrt(1 - v^2), the same constant expressed through v, valid on
/// graph points (cos psi >= 0).
double arclength_first_integral(const CurvePoint& point);

Regime classify(double c);

/// (xi, U) = sqrt(kappa) (x, u).
std::pair<double, double> to_nondimensional(double x, double u, const PhysicalScale& scale);
/// (x, u) = (xi, U) / sqrt(kappa).
std::pair<double, double> to_physical(double xi, double height, const PhysicalScale& scale);

/// Mirror in the vertical axis: (xi, U, psi) -> (-xi, U, -psi).
CurvePoint reflect_vertical_axis(const CurvePoint& point);
/// Mirror in the xi-axis: (xi, U, psi) -> (xi, -U, -psi).
CurvePoint reflect_horizontal_axis(const CurvePoint& point);
/// Point reflection through the origin: (xi, U, psi) -> (-xi, -U, psi).
CurvePoint reflect_origin(const CurvePoint& point);
SampledCurve translate(SampledCurve curve, double dxi);

} // namespace capillary
