#pragma once

// Sampled solution curves for the three regimes:
//   attracting (c > 1)  symmetric about its minimum, normalized to xi = 0 there;
//   critical   (c = 1)  solution "I", U = 2 sin(psi/2), in closed form;
//   repelling  (c < 1)  odd about its axis crossing at the origin.
// Plus direct integration of the arclength system
//   xi' = sqrt(1 - v^2),  U' = v,  v' = U sqrt(1 - v^2).

#include "capillary/quadrature.hpp"
#include "capillary/types.hpp"

#include <cstddef>

namespace capillary {

/// Point (xi2, psi2) through which solution "I" is drawn, 0 < psi2 < pi.
struct CriticalAnchor {
    double psi2 = 1.5707963267948966;
    double xi2 = 0.0;

    void validate() const;
};

struct IntegratorSettings {
    double step = 1e-3;
    double tol = 1e-10;
    /// Largest accepted step; bounds the spacing of output samples.
    double max_step = 0.05;
    /// A point with 1 - |v| <= vertical_eps is a vertical point.
    double vertical_eps = 1e-9;
    bool continue_past_vertical = false;
    /// Sign of sqrt(1 - v^2) after a vertical point. Only -1, the analytic
    /// continuation in which the tangent turns past the vertical, is a
    /// solution of the curvature equation; +1 would pin v at +-1.
    int branch_sign = -1;

    void validate() const;
};

/// Attracting curve with minimum height u0 at xi = 0, sampled at n
/// inclinations uniform on [-(pi/2 - psi_margin), pi/2 - psi_margin].
SampledCurve attracting_curve(double u0, std::size_t n, const QuadratureSettings& settings = {},
                              double psi_margin = 0.0);

/// Solution "I" at inclination psi in (0, pi), closed form.
CurvePoint critical_point(const CriticalAnchor& anchor, double psi);

/// Solution "I" sampled at n inclinations uniform on
/// [psi_min, min(psi2, pi/2)].
SampledCurve critical_curve(const CriticalAnchor& anchor, std::size_t n, double psi_min = 1e-3);

/// Repelling curve through the origin at inclination psi0 in (0, pi/2),
/// ordered by increasing xi from the lower vertical endpoint (-xi0, -U0) to
/// the upper one (xi0, U0). The upper half is sampled at uniform inclinations
/// on [psi0, pi/2]; the lower half is its reflection through the origin.
/// An even n is rounded up so that the origin is a sample.
SampledCurve repelling_curve(double psi0, std::size_t n, const QuadratureSettings& settings = {});

/// Integrates the arclength system from `start` for at most s_max, stopping
/// at the first vertical point unless continuation is requested, in which
/// case integration continues up to the next vertical point and the result
/// is flagged as not a graph. Throws ConvergenceError on step underflow.
SampledCurve integrate_arclength(const CurvePoint& start, double s_max, const IntegratorSettings& settings = {});

/// Arclength counterparts of the quadrature constructions, completed by
/// symmetry: the attracting curve is integrated from its minimum and mirrored
/// in the vertical axis, the repelling one from the origin and reflected
/// through it. Arclength is signed, zero at the start point.
SampledCurve attracting_curve_arclength(double u0, double s_max = 50.0, const IntegratorSettings& settings = {});
SampledCurve repelling_curve_arclength(double psi0, double s_max = 50.0, const IntegratorSettings& settings = {});
/// Solution "I" integrated from its point of inclination psi_start up to the vertical.
SampledCurve critical_curve_arclength(const CriticalAnchor& anchor, double psi_start, double s_max = 50.0,
                                      const IntegratorSettings& settings = {});

/// Planar curvature; in universal coordinates it equals the height.
inline double curvature_at(const CurvePoint& point) noexcept {
    return point.height;
}

} // namespace capillary
