#pragma once

// Loci of vertical points swept out by the attracting and repelling
// families, and the limit of attracting curves toward solution "I".

#include "capillary/curves.hpp"
#include "capillary/quadrature.hpp"
#include "capillary/types.hpp"

#include <utility>
#include <vector>

namespace capillary {

struct PlanePoint {
    double xi = 0.0;
    double height = 0.0;
};

struct EnvelopeLocus {
    std::vector<PlanePoint> points;
    /// Family parameter (u0 or psi0) generating each point.
    std::vector<double> parameters;
    Regime family_tag = Regime::Attracting;
    /// Signs of xi and U on this branch.
    int xi_sign = 1;
    int height_sign = 1;
};

/// Right vertical endpoints (delta_xi(1 + u0^2/2, 0, pi/2), sqrt(u0^2 + 2))
/// of the normalized attracting curves. u0_grid positive and increasing.
EnvelopeLocus attracting_envelope(const std::vector<double>& u0_grid, const QuadratureSettings& settings = {});

/// Mirror image of a locus in the vertical axis.
EnvelopeLocus mirror(const EnvelopeLocus& locus);

struct RepellingEnvelope {
    EnvelopeLocus upper;  // E+: (xi0, sqrt(2 cos psi0))
    EnvelopeLocus lower;  // E-: reflection of E+ through the origin
};

/// Vertical endpoints of the repelling curves through the origin, for psi0
/// in (0, pi/2]; psi0 = pi/2 gives the origin.
RepellingEnvelope repelling_envelope(const std::vector<double>& psi0_grid, const QuadratureSettings& settings = {});

struct Window {
    double lo = -3.0;
    double hi = -0.5;
};

struct LimitSweepEntry {
    double u0 = 0.0;
    /// Horizontal translation applied to the normalized attracting curve.
    double shift = 0.0;
    /// Sup-norm height difference to solution "I" over the window grid.
    double distance = 0.0;
    /// Bound on the error of `distance` from root-finding and quadrature.
    double error_budget = 0.0;
};

struct LimitSweepReport {
    std::vector<LimitSweepEntry> entries;
    CriticalAnchor anchor;
    Window window;
};

/// For each u0 the attracting curve is translated so that its point of
/// inclination anchor.psi2 lies at anchor.xi2, and its height is compared with
/// solution "I" at `grid` equally spaced abscissae of the window. Heights are
/// evaluated exactly at each abscissa by inverting xi(psi) on both curves.
LimitSweepReport limit_sweep(const std::vector<double>& u0_sequence, const CriticalAnchor& anchor,
                             const Window& window, std::size_t grid = 201, const QuadratureSettings& settings = {});

} // namespace capillary
