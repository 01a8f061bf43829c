#include "capillary/quadrature.hpp"

#include "detail/gauss_kronrod.hpp"
#include "capillary/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace capillary {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

detail::Estimate integrate(auto&& f, double a, double b, const QuadratureSettings& s) {
    return detail::integrate_adaptive(f, a, b, s.abs_tol, s.rel_tol, s.max_subdivisions);
}

void require_angle(double psi, const char* name) {
    if (!(std::abs(psi) <= kHalfPi)) {
        throw DomainError(std::string(name) + " = " + std::to_string(psi) + " outside [-pi/2, pi/2]");
    }
}

// int_lo^hi cos t / sqrt(2 (cos p - cos t)) dt with p <= lo < hi <= pi/2.
QuadratureResult crossing_integral(double p, double lo, double hi, const QuadratureSettings& s) {
    // cos p - cos t, free of cancellation near t = p.
    const auto gap = [p](double t, double half_offset_sine) {
        return 2.0 * std::sin(0.5 * (t + p)) * half_offset_sine;
    };

    if (s.singular_endpoint_strategy == SingularEndpointStrategy::SubstitutionSqrt) {
        // t = p + w^2, dt = 2 w dt.
        const auto integrand = [&](double w) {
            const double w2 = w * w;
            const double t = p + w2;
            return 2.0 * w * std::cos(t) / std::sqrt(2.0 * gap(t, std::sin(0.5 * w2)));
        };
        const auto e = integrate(integrand, std::sqrt(lo - p), std::sqrt(hi - p), s);
        return {e.value, e.error};
    }

    if (lo > p) {
        const auto integrand = [&](double t) {
            return std::cos(t) / std::sqrt(2.0 * gap(t, std::sin(0.5 * (t - p))));
        };
        const auto e = integrate(integrand, lo, hi, s);
        return {e.value, e.error};
    }

    // With F(t) = sqrt(2 (cos p - cos t)), cos t / F = cot t F' and F(p) = 0:
    // int_p^hi = cot(hi) F(hi) + int_p^hi F / sin^2 t dt.
    const auto height = [&](double t) { return std::sqrt(2.0 * gap(t, std::sin(0.5 * (t - p)))); };
    const auto integrand = [&](double t) {
        const double st = std::sin(t);
        return height(t) / (st * st);
    };
    const auto e = integrate(integrand, p, hi, s);
    return {std::cos(hi) / std::sin(hi) * height(hi) + e.value, e.error};
}

// Reduces an interval on the repelling family to the positive branch.
QuadratureResult crossing_route(double p, double a, double b, const QuadratureSettings& s) {
    // a < b here; the integrand is even in t.
    if (a >= p) return crossing_integral(p, a, b, s);
    if (b <= -p) return crossing_integral(p, -b, -a, s);
    throw DomainError("interval [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] enters |psi| < " + std::to_string(p) + " where the height is imaginary");
}

} // namespace

void QuadratureSettings::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
}

QuadratureResult delta_xi_estimate(double c, double psi_a, double psi_b, const QuadratureSettings& s) {
    s.validate();
    if (!std::isfinite(c)) throw DomainError("family constant is not finite");
    require_angle(psi_a, "psi_a");
    require_angle(psi_b, "psi_b");
    if (psi_a == psi_b) return {};
    if (psi_a > psi_b) {
        const auto r = delta_xi_estimate(c, psi_b, psi_a, s);
        return {-r.value, r.error};
    }

    if (c > 1.0) {
        const double excess = c - 1.0;
        const auto integrand = [excess](double t) {
            const double h = std::sin(0.5 * t);
            return std::cos(t) / std::sqrt(2.0 * (excess + 2.0 * h * h));
        };
        const auto e = integrate(integrand, psi_a, psi_b, s);
        return {e.value, e.error};
    }
    if (c == 1.0) {
        if (psi_a <= 0.0 && psi_b >= 0.0) {
            throw DomainError("c = 1 has a non-integrable singularity at psi = 0");
        }
        const auto integrand = [](double t) { return std::cos(t) / (2.0 * std::abs(std::sin(0.5 * t))); };
        const auto e = integrate(integrand, psi_a, psi_b, s);
        return {e.value, e.error};
    }
    if (c <= 0.0) {
        throw DomainError("no real heights for c = " + std::to_string(c));
    }

    const double p = std::acos(c);
    // acos is ill-conditioned near c = 1; endpoints within its rounding are the singular angle.
    const double snap = 1e-13 + 8.0 * std::numeric_limits<double>::epsilon() / std::sin(p);
    const auto snapped = [&](double x) {
        if (std::abs(x - p) <= snap) return p;
        if (std::abs(x + p) <= snap) return -p;
        return x;
    };
    return crossing_route(p, snapped(psi_a), snapped(psi_b), s);
}

double delta_xi(double c, double psi_a, double psi_b, const QuadratureSettings& s) {
    return delta_xi_estimate(c, psi_a, psi_b, s).value;
}

QuadratureResult delta_xi_from_crossing(double psi0, double psi_a, double psi_b, const QuadratureSettings& s) {
    s.validate();
    const double p = std::abs(psi0);
    if (!(p > 0.0 && p < kHalfPi)) throw DomainError("crossing angle must satisfy 0 < |psi0| < pi/2");
    require_angle(psi_a, "psi_a");
    require_angle(psi_b, "psi_b");
    if (psi_a == psi_b) return {};
    if (psi_a > psi_b) {
        const auto r = delta_xi_from_crossing(psi0, psi_b, psi_a, s);
        return {-r.value, r.error};
    }
    return crossing_route(p, psi_a, psi_b, s);
}

RepellingExtent xi0(double psi0, const QuadratureSettings& s) {
    s.validate();
    if (!(psi0 > 0.0 && psi0 <= kHalfPi)) {
        throw DomainError("xi0 needs psi0 in (0, pi/2], got " + std::to_string(psi0));
    }
    const double cp = std::max(0.0, std::cos(psi0));
    const double half = std::sin(0.5 * psi0);
    const double one_plus_s0 = 2.0 * half * half;
    const double one_minus_s0 = 1.0 + cp;

    RepellingExtent out;
    out.psi0 = psi0;
    out.s0 = -cp;
    out.u0 = std::sqrt(2.0 * cp);
    if (cp == 0.0) return out;

    detail::Estimate e;
    if (s.singular_endpoint_strategy == SingularEndpointStrategy::Regularized) {
        // t = s0 + d: sqrt(2) xi0 = 2 int_0^{cos psi0} sqrt(d) / ((1 - t)(1 + t))^{3/2} dd.
        const auto integrand = [&](double d) {
            const double q = (one_minus_s0 - d) * (one_plus_s0 + d);
            return std::sqrt(d) / (q * std::sqrt(q));
        };
        e = integrate(integrand, 0.0, cp, s);
        out.xi0 = std::numbers::sqrt2 * e.value;
        out.error = std::numbers::sqrt2 * e.error;
    } else {
        // t = s0 + w^2: sqrt(2) xi0 = 2 int_0^{sqrt(cos psi0)} (-t) / sqrt(1 - t^2) dw.
        const auto integrand = [&](double w) {
            const double w2 = w * w;
            return (cp - w2) / std::sqrt((one_minus_s0 - w2) * (one_plus_s0 + w2));
        };
        e = integrate(integrand, 0.0, std::sqrt(cp), s);
        out.xi0 = std::numbers::sqrt2 * e.value;
        out.error = std::numbers::sqrt2 * e.error;
    }
    return out;
}

double dxi0_dU0(double psi0, const QuadratureSettings& s) {
    s.validate();
    if (!(psi0 > 0.0 && psi0 < kHalfPi)) {
        throw DomainError("dxi0_dU0 needs psi0 in (0, pi/2), got " + std::to_string(psi0));
    }
    const double cp = std::cos(psi0);
    const double half = std::sin(0.5 * psi0);
    const double one_plus_s0 = 2.0 * half * half;
    const double one_minus_s0 = 1.0 + cp;
    // t = s0 + w^2 removes 1 / sqrt(t - s0).
    const auto integrand = [&](double w) {
        const double w2 = w * w;
        const double q = (one_minus_s0 - w2) * (one_plus_s0 + w2);
        return 2.0 / (q * std::sqrt(q));
    };
    const auto e = integrate(integrand, 0.0, std::sqrt(cp), s);
    const double u0 = std::sqrt(2.0 * cp);
    return u0 / std::numbers::sqrt2 * e.value;
}

} // namespace capillary
