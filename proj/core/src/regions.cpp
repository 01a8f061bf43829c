#include "capillary/regions.hpp"

#include "detail/roots.hpp"
#include "capillary/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace capillary {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kAngleTol = 1e-14;

} // namespace

EnvelopeLocus attracting_envelope(const std::vector<double>& u0_grid, const QuadratureSettings& settings) {
    EnvelopeLocus locus;
    locus.family_tag = Regime::Attracting;
    double previous = 0.0;
    for (double u0 : u0_grid) {
        if (!(u0 > 0.0) || !std::isfinite(u0)) throw DomainError("u0 grid entries must be positive");
        if (!(u0 > previous)) throw DomainError("u0 grid must be strictly increasing");
        previous = u0;
        const double c = 1.0 + 0.5 * u0 * u0;
        locus.points.push_back({delta_xi(c, 0.0, kHalfPi, settings), std::sqrt(u0 * u0 + 2.0)});
        locus.parameters.push_back(u0);
    }
    return locus;
}

EnvelopeLocus mirror(const EnvelopeLocus& locus) {
    EnvelopeLocus out = locus;
    for (auto& p : out.points) p.xi = -p.xi;
    out.xi_sign = -locus.xi_sign;
    return out;
}

RepellingEnvelope repelling_envelope(const std::vector<double>& psi0_grid, const QuadratureSettings& settings) {
    RepellingEnvelope env;
    env.upper.family_tag = env.lower.family_tag = Regime::Repelling;
    env.lower.xi_sign = env.lower.height_sign = -1;
    for (double psi0 : psi0_grid) {
        if (!(psi0 > 0.0 && psi0 <= kHalfPi)) {
            throw DomainError("psi0 grid entries must lie in (0, pi/2], got " + std::to_string(psi0));
        }
        const RepellingExtent extent = xi0(psi0, settings);
        env.upper.points.push_back({extent.xi0, extent.u0});
        env.lower.points.push_back({-extent.xi0, -extent.u0});
        env.upper.parameters.push_back(psi0);
        env.lower.parameters.push_back(psi0);
    }
    return env;
}

LimitSweepReport limit_sweep(const std::vector<double>& u0_sequence, const CriticalAnchor& anchor,
                             const Window& window, std::size_t grid, const QuadratureSettings& settings) {
    anchor.validate();
    if (!(anchor.psi2 <= kHalfPi)) throw DomainError("limit sweep anchors need psi2 <= pi/2");
    if (u0_sequence.empty()) throw DomainError("limit sweep needs at least one height");
    for (std::size_t i = 0; i < u0_sequence.size(); ++i) {
        if (!(u0_sequence[i] > 0.0)) throw DomainError("limit sweep heights must be positive");
        if (i > 0 && !(u0_sequence[i] < u0_sequence[i - 1])) {
            throw DomainError("limit sweep heights must be strictly decreasing");
        }
    }
    if (!(window.lo < window.hi) || !std::isfinite(window.lo) || !std::isfinite(window.hi)) {
        throw DomainError("limit sweep window must be a finite interval lo < hi");
    }
    if (grid < 2) throw DomainError("limit sweep grid needs at least 2 points");

    const double critical_end = critical_point(anchor, kHalfPi).xi;
    if (window.hi > critical_end) {
        throw DomainError("window extends past the vertical point of solution I at xi = " +
                          std::to_string(critical_end));
    }

    // Inclination of solution "I" at abscissa x; xi increases with psi on (0, pi/2].
    const auto critical_height = [&](double x) {
        double lo = 1e-3;
        while (critical_point(anchor, lo).xi >= x) {
            lo *= 0.5;
            if (lo < 1e-300) throw DomainError("abscissa too far left for solution I");
        }
        const double psi =
            detail::find_root([&](double p) { return critical_point(anchor, p).xi - x; }, lo, kHalfPi, kAngleTol);
        return 2.0 * std::sin(0.5 * psi);
    };

    LimitSweepReport report;
    report.anchor = anchor;
    report.window = window;
    for (double u0 : u0_sequence) {
        const FamilyParameter family = FamilyParameter::attracting(u0);
        const double c = family.c;
        const double half_extent = delta_xi(c, 0.0, kHalfPi, settings);
        LimitSweepEntry entry;
        entry.u0 = u0;
        entry.shift = anchor.xi2 - delta_xi(c, 0.0, anchor.psi2, settings);
        if (window.lo < entry.shift - half_extent || window.hi > entry.shift + half_extent) {
            throw DomainError("window is not covered by the translated attracting curve for u0 = " +
                              std::to_string(u0));
        }

        const auto attracting_psi = [&](double x) {
            return detail::find_root([&](double p) { return delta_xi(c, 0.0, p, settings) + entry.shift - x; },
                                     -kHalfPi, kHalfPi, kAngleTol);
        };

        for (std::size_t k = 0; k < grid; ++k) {
            const double x = window.lo + (window.hi - window.lo) * static_cast<double>(k) /
                                             static_cast<double>(grid - 1);
            const double psi = attracting_psi(x);
            const double h = std::sin(0.5 * psi);
            const double height = std::sqrt(u0 * u0 + 4.0 * h * h);
            entry.distance = std::max(entry.distance, std::abs(height - critical_height(x)));
            // A displacement error e moves the matched height by e tan(psi).
            const double budget = (2.0 * settings.abs_tol) * (1.0 + std::abs(std::tan(psi))) + 4.0 * kAngleTol;
            entry.error_budget = std::max(entry.error_budget, budget);
        }
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace capillary
