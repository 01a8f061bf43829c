#pragma once

// Bracketed root finding (TOMS 748 via Boost.Math) to an absolute bracket width.

#include "capillary/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>

namespace capillary::detail {

template <class F>
double find_root(F&& f, double a, double b, double tol, int max_iter = 200) {
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0)) throw DomainError("root is not bracketed");

    std::uintmax_t iterations = static_cast<std::uintmax_t>(max_iter);
    const auto done = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iterations);
    if (!done(lo, hi)) throw ConvergenceError("root finder did not converge", 0.5 * (lo + hi), std::abs(hi - lo));
    return 0.5 * (lo + hi);
}

} // namespace capillary::detail
