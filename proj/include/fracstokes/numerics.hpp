// Small shared numeric utilities: compensated summation (fixed-order history
// sums must be bit-reproducible regardless of thread count), a least-squares
// slope fit in log-log coordinates (empirical convergence orders, shift-bound
// exponents), and a double-exponential quadrature panel.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracstokes::detail {

// Neumaier's variant of Kahan summation: the running compensation also absorbs
// the case |term| > |sum|.  Deterministic for a fixed order of add() calls.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }

    double value() const { return s + c; }
};

// Double-exponential (tanh-sinh) rule on a finite panel [a, b].  97 nodes
// reach full double precision for analytic integrands and handle integrable
// endpoint singularities gracefully (nodes cluster doubly-exponentially).
template <class F>
double tanh_sinh_panel(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    const double h = 3.7 / 48.0;
    const double pi_half = 0.5 * std::numbers::pi;
    double acc = 0.0;
    for (int k = -48; k <= 48; ++k) {
        double t = h * k;
        double u = pi_half * std::sinh(t);
        double x = std::tanh(u);
        double w = pi_half * std::cosh(t) / std::pow(std::cosh(u), 2);
        double xa = mid + half * x;
        if (xa <= a || xa >= b) continue;  // clamp the extreme tails
        double fx = f(xa);
        if (std::isfinite(fx)) acc += w * fx;
    }
    return acc * half * h;
}

// Least-squares slope of log(y) against log(x).  All inputs must be positive;
// a y of zero (an exactly-resolved quantity) cannot be placed on a log scale.
inline double fit_loglog_slope(const std::vector<double>& xs,
                               const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("fit_loglog_slope: need >= 2 matching samples");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            std::ostringstream msg;
            msg << "fit_loglog_slope: sample " << i << " not positive (x=" << xs[i]
                << ", y=" << ys[i] << ")";
            throw std::invalid_argument(msg.str());
        }
        double lx = std::log(xs[i]);
        double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (!(std::fabs(denom) > 0.0)) {
        throw std::invalid_argument("fit_loglog_slope: degenerate abscissae");
    }
    return (n * sxy - sx * sy) / denom;
}

}  // namespace fracstokes::detail
