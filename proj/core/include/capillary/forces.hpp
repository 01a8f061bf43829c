#pragma once

// Normalized horizontal force between two vertical plates cut by a common
// solution curve, per unit plate length and per unit surface tension.
// Positive forces attract, negative forces repel. The force depends only on
// the family of the curve, never on where along it the plates stand.

#include "capillary/quadrature.hpp"
#include "capillary/types.hpp"

#include <optional>

namespace capillary {

/// Side of the meniscus bounded by a plate. A plate bounding the meniscus
/// from the left meets it at psi = gamma - pi/2, one bounding it from the
/// right at psi = pi/2 - gamma.
enum class PlateSide { LeftFacing, RightFacing };

struct PlateConfig {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    PlateSide side1 = PlateSide::LeftFacing;
    PlateSide side2 = PlateSide::RightFacing;
    std::optional<double> separation;

    void validate() const;
};

struct ForceResult {
    double f = 0.0;
    FamilyParameter family;
    /// sigma * f, when a surface tension is known.
    std::optional<double> dimensional_per_length;

    double magnitude() const noexcept { return f < 0.0 ? -f : f; }
};

/// F = u0^2.
ForceResult attracting_force(double u0, const std::optional<PhysicalScale>& scale = std::nullopt);
/// F = -2 (1 - cos psi0), |psi0| < pi/2; psi0 = 0 is the flat interface.
ForceResult repelling_force(double psi0, const std::optional<PhysicalScale>& scale = std::nullopt);
/// The force of any family: attracting, repelling, or zero for the critical curve.
ForceResult family_force(const FamilyParameter& family, const std::optional<PhysicalScale>& scale = std::nullopt);

double plate_inclination(double gamma, PlateSide side);

struct PlateGeometry {
    double separation = 0.0;
    double psi1 = 0.0;
    double psi2 = 0.0;
    /// Plate positions on the normalized curve.
    double xi1 = 0.0;
    double xi2 = 0.0;
    double height1 = 0.0;
    double height2 = 0.0;
    ForceResult force;
};

/// Places both plates on the normalized curve of `family`. Attracting: plate
/// 1 on the descending branch (psi1 <= 0), plate 2 on the ascending one.
/// Repelling: plate 1 below the axis and plate 2 above it (for psi0 > 0),
/// with |psi| >= |psi0| and the sign of psi0. Critical: plate 1 left of plate
/// 2 on solution "I" anchored vertical at the origin. Throws
/// InfeasibleConfigurationError when an inclination is not attained.
PlateGeometry plate_separation(const FamilyParameter& family, const PlateConfig& config,
                               const QuadratureSettings& settings = {});

struct SolveSettings {
    /// Attracting scan range of the minimum height.
    double u0_min = 0.02;
    double u0_max = 50.0;
    /// Smallest repelling crossing angle scanned; the largest is set by the plates.
    double psi0_min = 2e-6;
    int scan_samples = 64;
    double parameter_tol = 1e-12;
    QuadratureSettings quadrature;
};

struct PlateSolution {
    FamilyParameter family;
    ForceResult force;
    PlateGeometry geometry;
    /// Sign changes seen by the scan; more than one means the answer is not unique.
    int brackets = 0;
};

/// Finds the family whose plate_separation equals config.separation, by a
/// log-spaced scan over the family parameter followed by bisection on the
/// first bracket. Throws NoSolutionError carrying the scanned range of
/// separations when no bracket exists.
PlateSolution solve_plates(const PlateConfig& config, Regime hint, const SolveSettings& settings = {});

} // namespace capillary
