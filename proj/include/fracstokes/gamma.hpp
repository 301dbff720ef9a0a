// Gamma function and related internal helpers.
//
// The public gamma(x) covers x > 0 only (nothing in the library's formulas
// needs a negative-argument Gamma value directly); negative arguments appear
// only through reciprocals 1/Gamma(s) inside series coefficients, where the
// poles of Gamma become harmless zeros -- that path is detail::rgamma_signed.
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fracstokes/double_double.hpp"

namespace fracstokes {

namespace detail {

// Lanczos approximation, g = 7, n = 9 (Godfrey's published coefficient set);
// relative error ~1e-14 on [0.5, 20].
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline double lanczos_gamma(double x) {
    // valid for x in [0.5, ~20]; callers reduce into this window
    double a = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (x - 1.0 + i);
    double t = x + kLanczosG - 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace detail

// Gamma(x) for x > 0, relative error <= ~1e-13 over the double range
// (overflows to +inf beyond x ~ 171.6).  Throws std::domain_error otherwise.
inline double gamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "gamma: argument must be positive, got " << x;
        throw std::domain_error(msg.str());
    }
    if (x == std::floor(x) && x <= 19.0) {
        // small-integer factorials are exactly representable; return them
        // exactly rather than through the Lanczos window
        double prod = 1.0;
        for (double k = 2.0; k < x; ++k) prod *= k;
        return prod;
    }
    if (x < 0.5) return detail::lanczos_gamma(x + 1.0) / x;
    if (x <= 20.0) return detail::lanczos_gamma(x);
    // shift down into the Lanczos window; the bare product keeps full
    // precision where exp(log Gamma) would lose ~x*log(x)*eps
    double prod = 1.0;
    double y = x;
    while (y > 20.0) {
        y -= 1.0;
        prod *= y;
    }
    return prod * detail::lanczos_gamma(y);
}

namespace detail {

// sin(pi x) with the argument reduction done on x itself (exact for |x| < 2^52)
inline double sin_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    double s = std::sin(std::numbers::pi * r);
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

// 1/Gamma(x) for any real x: entire, zero at the poles x = 0, -1, -2, ...
// Negative arguments go through the reflection 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi.
inline double rgamma_signed(double x) {
    if (x > 0.0) return 1.0 / fracstokes::gamma(x);
    if (x == std::floor(x)) return 0.0;  // pole
    return fracstokes::gamma(1.0 - x) * sin_pi(x) / std::numbers::pi;
}

// Gamma(x)/Gamma(y) for x, y > 0 in double-double precision, evaluated in
// log space where both log-Gamma values are exact to ~1e-30; the ratio feeds
// the Mittag-Leffler term recurrence, whose accumulated cancellation demands
// beyond-double term accuracy.
inline dd dd_gamma_ratio(const dd& x, const dd& y) {
    return dd_exp(dd_sub(dd_lngamma(x), dd_lngamma(y)));
}

}  // namespace detail

}  // namespace fracstokes
