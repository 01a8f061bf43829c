#pragma once

// Horizontal displacement integrals along solution curves parametrized by
// inclination:
//
//     xi(b) - xi(a) = int_a^b cos(t) / sqrt(2 (c - cos t)) dt,
//
// and the half-extent xi0 of the repelling curve that crosses the axis at
// angle psi0. Where c - cos t vanishes at an endpoint the integrand has an
// inverse square-root singularity, removed either by t = t* + w^2 or by
// integrating by parts.

namespace capillary {

enum class SingularEndpointStrategy { Regularized, SubstitutionSqrt };

struct QuadratureSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    SingularEndpointStrategy singular_endpoint_strategy = SingularEndpointStrategy::Regularized;

    /// Throws DomainError unless tolerances are positive and max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Signed xi displacement from inclination psi_a to psi_b on the family with
/// constant c. Antisymmetric in its limits. Throws DomainError if c - cos
/// changes sign inside the interval, or on the non-integrable endpoint c = 1,
/// psi = 0; ConvergenceError if the tolerance is not met.
double delta_xi(double c, double psi_a, double psi_b, const QuadratureSettings& settings = {});
QuadratureResult delta_xi_estimate(double c, double psi_a, double psi_b,
                                   const QuadratureSettings& settings = {});

/// delta_xi on the repelling family c = cos(psi0), with the singular angle
/// taken as exactly |psi0| instead of acos(c).
QuadratureResult delta_xi_from_crossing(double psi0, double psi_a, double psi_b,
                                        const QuadratureSettings& settings = {});

struct RepellingExtent {
    double psi0 = 0.0;
    /// -cos(psi0).
    double s0 = 0.0;
    double xi0 = 0.0;
    double u0 = 0.0;
    double error = 0.0;
};

/// Half-extent of the repelling curve through the origin at angle psi0, in
/// (0, pi/2]. Regularized uses the integrated-by-parts integrand
/// 2 sqrt(t - s0) / (1 - t^2)^{3/2}; SubstitutionSqrt evaluates the singular
/// form -t / (sqrt(1 - t^2) sqrt(t - s0)) with t = s0 + w^2.
RepellingExtent xi0(double psi0, const QuadratureSettings& settings = {});

/// d xi0 / d U0 along the repelling family, U0 = sqrt(2 cos psi0), for psi0
/// in (0, pi/2):
///
///     (U0 / sqrt 2) int_{s0}^0 dt / ((1 - t^2)^{3/2} sqrt(t - s0)).
///
/// Positive: the half-extent grows with the endpoint height.
double dxi0_dU0(double psi0, const QuadratureSettings& settings = {});

} // namespace capillary
