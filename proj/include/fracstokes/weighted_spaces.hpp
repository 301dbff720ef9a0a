// Weighted (alpha, p) Bochner-type spaces on (0, T): norms against the kernel
// weight (T-s)^{alpha-1}/Gamma(alpha), the isometry onto plain L^p, embedding
// constants between the spaces, and an analytic catalog of the endpoint-
// singular functions that witness strictness of the inclusions.
//
// Two evaluation paths, deliberately separate:
//   * numeric  — trajectory-based product integration, for bounded samples;
//   * analytic — exponent tests plus closed-form antiderivatives, for the
//     catalog families.  Divergence is decided by the exponent tests alone;
//     quadrature can never certify a divergent integral.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracstokes/gamma.hpp"
#include "fracstokes/numerics.hpp"
#include "fracstokes/time_grid.hpp"

namespace fracstokes {

// ---------------------------------------------------------------------------
// Space description
// ---------------------------------------------------------------------------

// alpha = 0 selects the essential-sup convention (the space is plain L^inf);
// alpha = 1 gives the unweighted L^p norm.
struct WeightedSpaceSpec {
    double alpha = 1.0;  // in [0, 1]
    double p = 2.0;      // in [1, inf)
    double T = 1.0;      // horizon, > 0

    void validate() const {
        if (!(alpha >= 0.0) || !(alpha <= 1.0) || !(p >= 1.0) ||
            !std::isfinite(p) || !(T > 0.0) || !std::isfinite(T)) {
            std::ostringstream msg;
            msg << "WeightedSpaceSpec: need alpha in [0,1], p in [1,inf), T > 0, "
                << "got alpha=" << alpha << " p=" << p << " T=" << T;
            throw std::domain_error(msg.str());
        }
    }
};

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

struct CheckReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool passed = false;
    double worst_location = 0.0;  // time (or index) where the margin is worst
    double margin = 0.0;          // rhs - lhs
    double tol = 0.0;             // slack used when deciding `passed`
};

inline CheckReport make_check(std::string name, double lhs, double rhs,
                              double worst_location, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.worst_location = worst_location;
    r.tol = tol;
    r.margin = rhs - lhs;
    r.passed = lhs <= rhs + tol;
    return r;
}

inline void write_check_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
    os << "name,lhs,rhs,margin,passed,worst_location\n";
    os.precision(17);
    for (const auto& r : reports) {
        os << r.name << ',' << r.lhs << ',' << r.rhs << ',' << r.margin << ','
           << (r.passed ? "true" : "false") << ',' << r.worst_location << '\n';
    }
}

// ---------------------------------------------------------------------------
// Numeric path: weighted norms of sampled trajectories
// ---------------------------------------------------------------------------

namespace detail {

inline double euclidean_norm(const std::vector<double>& x) {
    double ss = 0.0;
    for (double c : x) ss += c * c;
    return std::sqrt(ss);
}

// Exact panel moments of the right-endpoint kernel: with u = T - s and
// ua = T - a >= ub = T - b,
//   int_a^b (T-s)^{alpha-1} ds           = (ua^alpha - ub^alpha)/alpha
//   int_a^b (T-s)^{alpha-1} (s - a) ds   = ua*m0 - (ua^{alpha+1}-ub^{alpha+1})/(alpha+1)
struct WeightMoments {
    double m0;
    double m1;
};

inline WeightMoments weight_panel_moments(double T, double a, double b, double alpha) {
    const double ua = T - a;
    const double ub = T - b;
    const double pa = std::pow(ua, alpha);
    const double pb = ub > 0.0 ? std::pow(ub, alpha) : 0.0;
    const double m0 = (pa - pb) / alpha;
    const double m1 = ua * m0 - (pa * ua - pb * ub) / (alpha + 1.0);
    return {m0, m1};
}

}  // namespace detail

// Weighted norm (int_0^T (T-s)^{alpha-1}/Gamma(alpha) ||v(s)||^p ds)^{1/p},
// computed by linear interpolation of ||v(s)||^p against the exact weight
// moments.  alpha = 0 returns the max node norm (the L^inf convention).
// The trajectory may stop short of T (the function is then treated as
// supported on its grid); it must not extend past T.
inline double weighted_norm(const Trajectory& v, const WeightedSpaceSpec& spec) {
    spec.validate();
    v.validate();
    if (v.grid.horizon() > spec.T * (1.0 + 1e-14)) {
        throw std::domain_error("weighted_norm: trajectory extends beyond the space horizon");
    }
    const auto& t = v.grid.nodes;
    if (spec.alpha == 0.0) {
        double worst = 0.0;
        for (const auto& row : v.values) {
            worst = std::max(worst, detail::euclidean_norm(row));
        }
        return worst;
    }
    std::vector<double> phi(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        phi[j] = std::pow(detail::euclidean_norm(v.values[j]), spec.p);
    }
    detail::NeumaierSum acc;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const auto m = detail::weight_panel_moments(spec.T, t[i], t[i + 1], spec.alpha);
        const double slope = (phi[i + 1] - phi[i]) / (t[i + 1] - t[i]);
        acc.add(phi[i] * m.m0 + slope * m.m1);
    }
    return std::pow(acc.value() / gamma(spec.alpha), 1.0 / spec.p);
}

// ---------------------------------------------------------------------------
// Analytic path: the catalog of strictness witnesses
// ---------------------------------------------------------------------------

// The four families used in the strictness proofs.  log_weighted carries its
// own (alpha, p) pair — it is the canonical witness separating L^p_alpha from
// L^{p/alpha} and is a fixed function regardless of which space it is
// measured in.  It lives on (0, 1) only.
struct CatalogFunction {
    enum class Family { left_power, right_power, log_weighted, shifted_power };

    Family family = Family::left_power;
    double gamma_exp = 0.0;  // left_power / right_power: exponent gamma >= 0
    double alpha = 0.5;      // log_weighted's own alpha in (0,1)
    double p = 2.0;          // log_weighted's own p in [1,inf)
    double delta = 0.0;      // shifted_power: exponent delta >= 0
    double t0 = 0.5;         // shifted_power: singularity location
    double eps = 0.25;       // shifted_power: window half-width

    static CatalogFunction left_power(double g) {
        CatalogFunction f;
        f.family = Family::left_power;
        f.gamma_exp = g;
        return f;
    }
    static CatalogFunction right_power(double g) {
        CatalogFunction f;
        f.family = Family::right_power;
        f.gamma_exp = g;
        return f;
    }
    static CatalogFunction log_weighted(double alpha, double p) {
        CatalogFunction f;
        f.family = Family::log_weighted;
        f.alpha = alpha;
        f.p = p;
        return f;
    }
    static CatalogFunction shifted_power(double delta, double t0, double eps) {
        CatalogFunction f;
        f.family = Family::shifted_power;
        f.delta = delta;
        f.t0 = t0;
        f.eps = eps;
        return f;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (family) {
            case Family::left_power:
                os << "t^{-" << gamma_exp << "}";
                break;
            case Family::right_power:
                os << "(T-t)^{-" << gamma_exp << "}";
                break;
            case Family::log_weighted:
                os << "(1-t)^{-" << alpha << "/" << p << "} log(e/(1-t))^{-1/" << p << "}";
                break;
            case Family::shifted_power:
                os << "|t-" << t0 << "|^{-" << delta << "} on (" << t0 - eps << ","
                   << t0 + eps << ")";
                break;
        }
        return os.str();
    }

    // Validity that does not depend on the evaluation space.
    void validate() const {
        switch (family) {
            case Family::left_power:
            case Family::right_power:
                if (!(gamma_exp >= 0.0) || !std::isfinite(gamma_exp)) {
                    throw std::domain_error("CatalogFunction: power exponent must be >= 0");
                }
                break;
            case Family::log_weighted:
                if (!(alpha > 0.0) || !(alpha < 1.0) || !(p >= 1.0) || !std::isfinite(p)) {
                    throw std::domain_error(
                        "CatalogFunction: log_weighted needs alpha in (0,1), p >= 1");
                }
                break;
            case Family::shifted_power:
                if (!(delta >= 0.0) || !std::isfinite(delta) || !(eps > 0.0) ||
                    !(t0 > 0.0)) {
                    throw std::domain_error(
                        "CatalogFunction: shifted_power needs delta >= 0, t0 > 0, eps > 0");
                }
                break;
        }
    }
};

namespace detail {

// int_1^inf e^{-A u} u^{-B} du for A > 0 (any B), via x = A(u-1):
// e^{-A}/A * int_0^inf e^{-x} (1 + x/A)^{-B} dx, panels to x = 64 where the
// integrand is below 1e-28 of its peak.
inline double log_family_tail_integral(double A, double B) {
    auto f = [&](double x) { return std::exp(-x) * std::pow(1.0 + x / A, -B); };
    double acc = 0.0;
    double lo = 0.0;
    for (double hi : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
        acc += tanh_sinh_panel(f, lo, hi);
        lo = hi;
    }
    return acc * std::exp(-A) / A;
}

}  // namespace detail

// Exact norm of a catalog function in the given space, or std::nullopt when
// the defining integral diverges.  Membership is decided by the paper's
// exponent tests; finite values come from the same antiderivative
// computations (Beta/power integrals, the log substitution u = log(e/(1-s)),
// and a binomial expansion of the weight around an interior singularity).
inline std::optional<double> catalog_norm(const CatalogFunction& f,
                                          const WeightedSpaceSpec& spec) {
    f.validate();
    spec.validate();
    const double a = spec.alpha;
    const double p = spec.p;
    const double T = spec.T;
    using Family = CatalogFunction::Family;

    switch (f.family) {
        case Family::left_power: {
            if (f.gamma_exp == 0.0) {
                // constant 1: finite in every space
                if (a == 0.0) return 1.0;
                return std::pow(std::pow(T, a) / gamma(a + 1.0), 1.0 / p);
            }
            if (a == 0.0) return std::nullopt;  // unbounded at t -> 0+
            const double c = 1.0 - f.gamma_exp * p;
            if (!(c > 0.0)) return std::nullopt;
            // int_0^T (T-s)^{a-1} s^{c-1} ds = T^{a+c-1} B(c, a)
            const double norm_p = std::pow(T, a + c - 1.0) * gamma(c) / gamma(c + a);
            return std::pow(norm_p, 1.0 / p);
        }
        case Family::right_power: {
            if (f.gamma_exp == 0.0) {
                if (a == 0.0) return 1.0;
                return std::pow(std::pow(T, a) / gamma(a + 1.0), 1.0 / p);
            }
            if (a == 0.0) return std::nullopt;  // unbounded at t -> T-
            const double e = a - f.gamma_exp * p;
            if (!(e > 0.0)) return std::nullopt;
            const double norm_p = std::pow(T, e) / (e * gamma(a));
            return std::pow(norm_p, 1.0 / p);
        }
        case Family::log_weighted: {
            if (std::fabs(T - 1.0) > 1e-14) {
                throw std::domain_error("catalog_norm: log_weighted lives on (0,1); need T = 1");
            }
            if (a == 0.0) return std::nullopt;  // unbounded at t -> 1-
            // |v|^p (1-s)^{a-1} = (1-s)^{A-1} log(e/(1-s))^{-B} with
            const double A = a - f.alpha * p / f.p;
            const double B = p / f.p;
            // u = log(e/(1-s)) turns the integral into e^A int_1^inf e^{-Au} u^{-B} du
            if (A < 0.0) return std::nullopt;
            if (A == 0.0) {
                if (!(B > 1.0)) return std::nullopt;
                return std::pow(1.0 / ((B - 1.0) * gamma(a)), 1.0 / p);
            }
            const double integral = std::exp(A) * detail::log_family_tail_integral(A, B);
            return std::pow(integral / gamma(a), 1.0 / p);
        }
        case Family::shifted_power: {
            if (!(f.eps < std::min(f.t0, T - f.t0))) {
                throw std::domain_error(
                    "catalog_norm: shifted_power window must satisfy 0 < eps < min(t0, T-t0)");
            }
            if (f.delta == 0.0) {
                // indicator of the window
                if (a == 0.0) return 1.0;
                const double ua = T - (f.t0 - f.eps);
                const double ub = T - (f.t0 + f.eps);
                const double norm_p =
                    (std::pow(ua, a) - std::pow(ub, a)) / (a * gamma(a));
                return std::pow(norm_p, 1.0 / p);
            }
            if (a == 0.0) return std::nullopt;  // unbounded at t0
            const double c = 1.0 - f.delta * p;
            if (!(c > 0.0)) return std::nullopt;
            // (T-s)^{a-1} = tau^{a-1} (1 - x/tau)^{a-1} with x = s - t0, tau = T - t0;
            // odd powers of x integrate to zero over the symmetric window, so
            // norm^p Gamma(a) = tau^{a-1} sum_{k even} C(a-1,k) tau^{-k}
            //                   2 eps^{k+c}/(k+c).
            const double tau = T - f.t0;
            double binom = 1.0;  // C(a-1, k), built iteratively
            double sum = 0.0;
            for (int k = 0; k < 400; ++k) {
                if (k % 2 == 0) {
                    const double term = binom * std::pow(f.eps / tau, static_cast<double>(k)) *
                                        2.0 * std::pow(f.eps, c) / (k + c);
                    sum += term;
                    if (k > 2 && std::fabs(term) < 1e-17 * std::fabs(sum)) break;
                }
                binom *= (a - 1.0 - k) / (k + 1.0);
            }
            const double norm_p = std::pow(tau, a - 1.0) * sum / gamma(a);
            return std::pow(norm_p, 1.0 / p);
        }
    }
    throw std::logic_error("catalog_norm: unreachable");
}

// ---------------------------------------------------------------------------
// Embedding constants and checks
// ---------------------------------------------------------------------------

enum class EmbeddingKind { alpha_to_beta, p_to_q, Lq_into_Lpalpha };

// One parameter bag for all three kinds; each kind validates the fields it
// reads.  alpha/beta are space weights, p/q integrability exponents.
struct EmbeddingParams {
    double alpha = 0.5;
    double beta = 1.0;   // alpha_to_beta only
    double p = 2.0;
    double q = 2.0;      // p_to_q and Lq_into_Lpalpha
    double T = 1.0;
};

// The exact constants of the embedding inequalities:
//   alpha_to_beta:    ||v||_beta <= (T^{beta-alpha} Gamma(alpha)/Gamma(beta))^{1/p} ||v||_alpha
//                     (alpha = 0: (T^beta/Gamma(beta+1))^{1/p})
//   p_to_q:           ||v||_{p,alpha} <= (T^alpha/Gamma(alpha+1))^{(q-p)/(pq)} ||v||_{q,alpha}
//   Lq_into_Lpalpha:  ||v||_{p,alpha} <= ((q-p)/(alpha q-p))^{(q-p)/(pq)}
//                     T^{(alpha q-p)/(pq)} / Gamma(alpha)^{1/p} ||v||_{L^q},  q > p/alpha
inline double embedding_constant(EmbeddingKind kind, const EmbeddingParams& par) {
    switch (kind) {
        case EmbeddingKind::alpha_to_beta: {
            if (!(par.alpha >= 0.0) || !(par.alpha < par.beta) || !(par.beta <= 1.0) ||
                !(par.p >= 1.0) || !(par.T > 0.0)) {
                throw std::domain_error(
                    "embedding_constant(alpha_to_beta): need 0 <= alpha < beta <= 1, p >= 1, T > 0");
            }
            if (par.alpha == 0.0) {
                return std::pow(std::pow(par.T, par.beta) / gamma(par.beta + 1.0), 1.0 / par.p);
            }
            return std::pow(std::pow(par.T, par.beta - par.alpha) * gamma(par.alpha) /
                                gamma(par.beta),
                            1.0 / par.p);
        }
        case EmbeddingKind::p_to_q: {
            if (!(par.alpha > 0.0) || !(par.alpha <= 1.0) || !(par.p >= 1.0) ||
                !(par.q >= par.p) || !(par.T > 0.0)) {
                throw std::domain_error(
                    "embedding_constant(p_to_q): need alpha in (0,1], 1 <= p <= q, T > 0");
            }
            const double expo = (par.q - par.p) / (par.p * par.q);
            return std::pow(std::pow(par.T, par.alpha) / gamma(par.alpha + 1.0), expo);
        }
        case EmbeddingKind::Lq_into_Lpalpha: {
            if (!(par.alpha > 0.0) || !(par.alpha < 1.0) || !(par.p >= 1.0) ||
                !(par.q > par.p / par.alpha) || !(par.T > 0.0)) {
                throw std::domain_error(
                    "embedding_constant(Lq_into_Lpalpha): need alpha in (0,1), p >= 1, q > p/alpha, T > 0");
            }
            const double num = par.q - par.p;
            const double den = par.alpha * par.q - par.p;
            const double expo = num / (par.p * par.q);
            return std::pow(num / den, expo) * std::pow(par.T, den / (par.p * par.q)) /
                   std::pow(gamma(par.alpha), 1.0 / par.p);
        }
    }
    throw std::logic_error("embedding_constant: unreachable");
}

// Evaluates the cited inequality on a sampled trajectory: lhs is the norm in
// the LARGER space, rhs the constant times the norm in the smaller space.
// The inequalities are theorems, so passed should be true for every finite
// trajectory up to quadrature slack (relative tol 1e-9: both sides use the
// same panel decomposition and the pointwise kernel inequalities transfer).
inline CheckReport check_embedding(const Trajectory& v, EmbeddingKind kind,
                                   const EmbeddingParams& par) {
    const double constant = embedding_constant(kind, par);  // validates params
    double lhs = 0.0, rhs = 0.0;
    std::ostringstream name;
    switch (kind) {
        case EmbeddingKind::alpha_to_beta:
            lhs = weighted_norm(v, {par.beta, par.p, par.T});
            rhs = constant * weighted_norm(v, {par.alpha, par.p, par.T});
            name << "embed_alpha_to_beta a=" << par.alpha << " b=" << par.beta
                 << " p=" << par.p;
            break;
        case EmbeddingKind::p_to_q:
            lhs = weighted_norm(v, {par.alpha, par.p, par.T});
            rhs = constant * weighted_norm(v, {par.alpha, par.q, par.T});
            name << "embed_p_to_q a=" << par.alpha << " p=" << par.p << " q=" << par.q;
            break;
        case EmbeddingKind::Lq_into_Lpalpha:
            lhs = weighted_norm(v, {par.alpha, par.p, par.T});
            rhs = constant * weighted_norm(v, {1.0, par.q, par.T});
            name << "embed_Lq_into_Lpalpha a=" << par.alpha << " p=" << par.p
                 << " q=" << par.q;
            break;
    }
    // dominant contribution: the node with the largest sample norm
    double worst_t = v.grid.nodes.front();
    double worst_v = -1.0;
    for (std::size_t j = 0; j < v.values.size(); ++j) {
        double n = detail::euclidean_norm(v.values[j]);
        if (n > worst_v) {
            worst_v = n;
            worst_t = v.grid.nodes[j];
        }
    }
    return make_check(name.str(), lhs, rhs, worst_t, 1e-9 * rhs);
}

// ---------------------------------------------------------------------------
// The isometry G_p onto plain L^p
// ---------------------------------------------------------------------------

// (G_p v)(t) = ((T-t)^{alpha-1}/Gamma(alpha))^{1/p} v(t).  The weight blows
// up at t = T for alpha < 1, so a grid whose last node reaches T is a hard
// error there — silent infinities would corrupt every downstream norm.  Use a
// grid graded toward T and truncated strictly before it.
inline Trajectory weight_isometry(const Trajectory& v, const WeightedSpaceSpec& spec) {
    spec.validate();
    v.validate();
    if (!(spec.alpha > 0.0)) {
        throw std::domain_error("weight_isometry: need alpha in (0,1]");
    }
    if (v.grid.horizon() > spec.T * (1.0 + 1e-14)) {
        throw std::domain_error("weight_isometry: trajectory extends beyond the space horizon");
    }
    if (spec.alpha < 1.0 && v.grid.horizon() >= spec.T * (1.0 - 1e-14)) {
        throw std::domain_error(
            "weight_isometry: grid reaches t = T where the weight is singular (alpha < 1); "
            "truncate the grid before T");
    }
    Trajectory out = v;
    const double gscale = std::pow(gamma(spec.alpha), -1.0 / spec.p);
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        const double w =
            std::pow(spec.T - v.grid.nodes[j], (spec.alpha - 1.0) / spec.p) * gscale;
        for (double& c : out.values[j]) c *= w;
    }
    out.label = "G_p " + (v.label.empty() ? std::string("trajectory") : v.label);
    return out;
}

// ---------------------------------------------------------------------------
// Hoelder-lemma bound
// ---------------------------------------------------------------------------

// Pointwise constant in ||J^{1-alpha} v(t)|| <=
//   (t^{1-alpha}/((1-alpha) Gamma(1-alpha)))^{(p-1)/p} [J^{1-alpha}||v||^p(t)]^{1/p}.
inline double holder_kernel_bound(double t, double alpha, double p) {
    if (!(alpha > 0.0) || !(alpha < 1.0) || !(p >= 1.0) || !(t >= 0.0)) {
        throw std::domain_error("holder_kernel_bound: need alpha in (0,1), p >= 1, t >= 0");
    }
    const double base = std::pow(t, 1.0 - alpha) / ((1.0 - alpha) * gamma(1.0 - alpha));
    return std::pow(base, (p - 1.0) / p);
}

// ---------------------------------------------------------------------------
// Numeric divergence heuristic (diagnostic only, never ground truth)
// ---------------------------------------------------------------------------

// Midpoint product-rule norms on 4 successively refined uniform grids; growth
// of at least 10% on every refinement flags a suspected divergent integral.
// Midpoints never touch 0 or T, so endpoint-singular integrands stay finite.
template <class F>
bool divergence_suspected(F&& abs_value, const WeightedSpaceSpec& spec,
                          std::size_t base_segments = 64) {
    spec.validate();
    if (base_segments < 2) {
        throw std::invalid_argument("divergence_suspected: need base_segments >= 2");
    }
    std::vector<double> norms;
    for (int level = 0; level < 4; ++level) {
        const std::size_t n = base_segments << level;
        const double h = spec.T / static_cast<double>(n);
        if (spec.alpha == 0.0) {
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, std::fabs(abs_value((i + 0.5) * h)));
            }
            norms.push_back(worst);
        } else {
            detail::NeumaierSum acc;
            for (std::size_t i = 0; i < n; ++i) {
                const auto m = detail::weight_panel_moments(
                    spec.T, i * h, (i + 1.0) * h, spec.alpha);
                acc.add(std::pow(std::fabs(abs_value((i + 0.5) * h)), spec.p) * m.m0);
            }
            norms.push_back(std::pow(acc.value() / gamma(spec.alpha), 1.0 / spec.p));
        }
    }
    for (std::size_t k = 0; k + 1 < norms.size(); ++k) {
        if (!(norms[k + 1] >= 1.1 * norms[k])) return false;
    }
    return true;
}

}  // namespace fracstokes
