// Discrete Riemann-Liouville integration J^alpha and Caputo differentiation
// cD^alpha of trajectories, the reconstruction map v = v0 + J^alpha g, and the
// analytic power-rule reference.
//
// J^alpha uses product integration: on each panel the trajectory is replaced
// by its linear interpolant and the singular-kernel moments
// int (t_j - s)^{alpha-1} {1, s} ds are evaluated in closed form.  Generic
// quadrature loses order against the (t-s)^{alpha-1} endpoint singularity;
// closed-form moments keep the full O(h^2)-type panel accuracy at O(N^2) cost.
// cD^alpha uses the L1 scheme (history sum of first differences), whose known
// order is 2 - alpha for smooth solutions and is restored on graded grids with
// exponent r = (2-alpha)/alpha for solutions with t^alpha startup behavior.
//
// History sums always run in ascending panel order with compensated
// accumulation; any parallelism is across output nodes only, so results are
// bit-identical for every thread count.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracstokes/gamma.hpp"
#include "fracstokes/numerics.hpp"
#include "fracstokes/parallel.hpp"
#include "fracstokes/time_grid.hpp"

namespace fracstokes {

struct FracOrder {
    double alpha = 0.5;

    void validate() const {
        if (!(alpha > 0.0) || !(alpha <= 1.0)) {
            std::ostringstream msg;
            msg << "FracOrder: alpha must lie in (0,1], got " << alpha;
            throw std::domain_error(msg.str());
        }
    }
};

// (J^alpha v)(t_j) at every node; node 0 is the zero vector.
inline Trajectory riemann_liouville_integral(const Trajectory& v, FracOrder order) {
    order.validate();
    v.validate();
    const double alpha = order.alpha;
    const auto& t = v.grid.nodes;
    const std::size_t m = v.dim();
    const double rg = 1.0 / gamma(alpha);

    Trajectory out;
    out.grid = v.grid;
    out.label = v.label.empty() ? std::string{} : "J^alpha " + v.label;
    out.values.assign(t.size(), std::vector<double>(m, 0.0));

    parallel_for(1, t.size(), [&](std::size_t j) {
        const double tj = t[j];
        std::vector<detail::NeumaierSum> acc(m);
        for (std::size_t i = 0; i < j; ++i) {
            const double a = t[i];
            const double b = t[i + 1];
            const double h = b - a;
            // moments of (t_j - s)^{alpha-1} against {1, s-a} over [a, b]
            const double ua = tj - a;
            const double ub = tj - b;  // 0 on the final panel
            const double pa = std::pow(ua, alpha);
            const double pb = ub > 0.0 ? std::pow(ub, alpha) : 0.0;
            const double m0 = (pa - pb) / alpha;
            const double m1 =
                ua * m0 - (pa * ua - pb * ub) / (alpha + 1.0);
            for (std::size_t k = 0; k < m; ++k) {
                const double slope = (v.values[i + 1][k] - v.values[i][k]) / h;
                acc[k].add(v.values[i][k] * m0 + slope * m1);
            }
        }
        for (std::size_t k = 0; k < m; ++k) out.values[j][k] = rg * acc[k].value();
    });
    return out;
}

// L1-scheme Caputo derivative at nodes t_1..t_N; node 0 carries NaN sentinels
// (t = 0 is exactly the singular point of the kernel -- consumers must skip it,
// never extrapolate).
inline Trajectory caputo_derivative(const Trajectory& v, FracOrder order) {
    if (!(order.alpha > 0.0) || !(order.alpha < 1.0)) {
        std::ostringstream msg;
        msg << "caputo_derivative: alpha must lie in (0,1), got " << order.alpha;
        throw std::domain_error(msg.str());
    }
    v.validate();
    const double alpha = order.alpha;
    const auto& t = v.grid.nodes;
    const std::size_t m = v.dim();
    const double rg2 = 1.0 / gamma(2.0 - alpha);

    Trajectory out;
    out.grid = v.grid;
    out.label = v.label.empty() ? std::string{} : "cD^alpha " + v.label;
    out.values.assign(t.size(), std::vector<double>(m, 0.0));
    out.values[0].assign(m, std::numeric_limits<double>::quiet_NaN());

    parallel_for(1, t.size(), [&](std::size_t j) {
        const double tj = t[j];
        std::vector<detail::NeumaierSum> acc(m);
        for (std::size_t i = 0; i < j; ++i) {
            const double da = std::pow(tj - t[i], 1.0 - alpha);
            const double db = j == i + 1 ? 0.0 : std::pow(tj - t[i + 1], 1.0 - alpha);
            const double b_ij = rg2 * (da - db) / (t[i + 1] - t[i]);
            for (std::size_t k = 0; k < m; ++k) {
                acc[k].add(b_ij * (v.values[i + 1][k] - v.values[i][k]));
            }
        }
        for (std::size_t k = 0; k < m; ++k) out.values[j][k] = acc[k].value();
    });
    return out;
}

// v = v0 + J^alpha g, with v(t_0) = v0 exactly.
inline Trajectory reconstruct_from_caputo(const Trajectory& g,
                                          const std::vector<double>& v0,
                                          FracOrder order) {
    if (v0.size() != g.dim()) {
        std::ostringstream msg;
        msg << "reconstruct_from_caputo: v0 has dimension " << v0.size()
            << ", trajectory has " << g.dim();
        throw std::invalid_argument(msg.str());
    }
    Trajectory v = riemann_liouville_integral(g, order);
    for (auto& row : v.values) {
        for (std::size_t k = 0; k < v0.size(); ++k) row[k] += v0[k];
    }
    v.label = g.label.empty() ? std::string{} : "reconstructed " + g.label;
    return v;
}

// Analytic Riemann-Liouville derivative of c t^beta:
//   D^alpha [c t^beta] = c Gamma(beta+1)/Gamma(1-alpha+beta) t^{beta-alpha}.
// Oracle only.  1-alpha+beta can land on a Gamma pole (e.g. beta = alpha-1),
// where the reciprocal -- and hence the derivative -- vanishes.
inline double power_rule_reference(double c, double beta, FracOrder order, double t) {
    order.validate();
    if (!(beta > -1.0)) {
        std::ostringstream msg;
        msg << "power_rule_reference: beta must exceed -1, got " << beta;
        throw std::domain_error(msg.str());
    }
    if (!(t > 0.0)) {
        std::ostringstream msg;
        msg << "power_rule_reference: t must be positive, got " << t;
        throw std::domain_error(msg.str());
    }
    if (c == 0.0) return 0.0;
    return c * gamma(beta + 1.0) * detail::rgamma_signed(1.0 - order.alpha + beta) *
           std::pow(t, beta - order.alpha);
}

}  // namespace fracstokes
