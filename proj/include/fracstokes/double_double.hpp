// Compensated (double-double) arithmetic: each value is an unevaluated sum
// hi + lo of two doubles, giving ~106 bits of significand.  Used by the
// Mittag-Leffler Taylor branch, where alternating series lose up to
// exp(|z|^(1/alpha)) of relative accuracy and plain doubles are not enough.
//
// The error-free transformations (two_sum, two_prod) are the textbook ones
// (Dekker/Knuth; two_prod via FMA).  Only the operations the library needs
// are provided; this is not a general arithmetic package.
#pragma once

#include <cmath>

namespace fracstokes::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

// a + b = s + err exactly, no assumption on |a| vs |b|
inline dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

// a + b = s + err exactly, assuming |a| >= |b|
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

// a * b = p + err exactly (FMA computes a*b - p without rounding)
inline dd two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

inline dd dd_from(double a) { return {a, 0.0}; }
inline double to_double(const dd& a) { return a.hi + a.lo; }

inline dd dd_add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    double e = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, e);
}

inline dd dd_add(const dd& a, double b) {
    dd s = two_sum(a.hi, b);
    double e = s.lo + a.lo;
    return quick_two_sum(s.hi, e);
}

inline dd dd_neg(const dd& a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    double e = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, e);
}

inline dd dd_mul(const dd& a, double b) {
    dd p = two_prod(a.hi, b);
    double e = p.lo + a.lo * b;
    return quick_two_sum(p.hi, e);
}

inline dd dd_div(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

inline dd dd_div(double a, const dd& b) { return dd_div(dd_from(a), b); }

inline constexpr dd kLn2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd kHalfLn2Pi{0.9189385332046728, -3.8782941580672414e-17};

// exp of a double-double, |x| moderate (the library never needs |x| > ~720)
inline dd dd_exp(const dd& x) {
    // range-reduce x = n*ln2 + r with |r| <= ln2/2, then Taylor in r
    double n = std::round(x.hi / kLn2.hi);
    dd r = dd_sub(x, dd_mul(kLn2, n));
    dd sum = dd_from(1.0);
    dd term = dd_from(1.0);
    for (int j = 1; j <= 26; ++j) {
        term = dd_mul(term, r);
        // divide exactly; multiplying by a rounded 1/j would cap the whole
        // routine at double precision
        term = dd_div(term, dd_from(static_cast<double>(j)));
        sum = dd_add(sum, term);
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    double scale = std::ldexp(1.0, static_cast<int>(n));
    return {sum.hi * scale, sum.lo * scale};
}

// natural log of a positive double-double: one Newton step on top of the
// double-precision logarithm (y1 = y0 + x*exp(-y0) - 1 is correct to ~2e-32)
inline dd dd_log(const dd& x) {
    double y0 = std::log(x.hi);
    dd r = dd_mul(x, dd_exp(dd_from(-y0)));   // = 1 + delta, |delta| ~ 1e-16
    dd delta = dd_add(r, -1.0);
    // log(1+delta) = delta - delta^2/2 + O(delta^3), delta^3 ~ 1e-48
    dd corr = dd_sub(delta, dd_mul(dd_mul(delta, delta), 0.5));
    return dd_add(corr, y0);
}

// Stirling coefficients B_2n / (2n(2n-1)), n = 1..22, split into hi/lo pairs
inline constexpr dd kStirling[] = {
    {0.08333333333333333, 4.625929269271485e-18},
    {-0.002777777777777778, 1.0601087908747154e-19},
    {0.0007936507936507937, 6.883823317368282e-22},
    {-0.0005952380952380953, 5.36938218754726e-20},
    {0.0008417508417508417, 3.6870174889237694e-20},
    {-0.0019175269175269176, 1.0675702776872475e-19},
    {0.00641025641025641, 2.2240044563805217e-19},
    {-0.029550653594771242, 4.861760957508855e-19},
    {0.17964437236883057, -6.401600482710946e-19},
    {-1.3924322169059011, 1.5837056989230303e-17},
    {13.402864044168393, -6.154114101993966e-16},
    {-156.84828462600203, 9.391823141715389e-15},
    {2193.1033333333335, -1.3339255626002948e-13},
    {-36108.77125372499, 5.897583353514365e-13},
    {691472.268851313, 2.5585296305158e-11},
    {-15238221.539407415, -8.76774522490625e-10},
    {382900751.39141417, -2.4082684757733585e-08},
    {-10882266035.784391, 3.141830930219749e-07},
    {347320283765.00226, -6.048528997747748e-06},
    {-12369602142269.275, 0.0009363732896507286},
    {488788064793079.3, 0.022575815162518022},
    {-2.1320333960919372e+16, -1.8969750589821368},
};

// log Gamma(x) for x > 0 in double-double precision.  Arguments below 16 are
// shifted up with Gamma(x) = Gamma(x+m) / prod(x+i); at x >= 16 the Stirling
// series with 22 Bernoulli terms has remainder below ~3e-34.  The argument is
// itself a double-double so that callers can pass alpha*k + beta formed
// without rounding (a double argument would already cost ~1e-14 relative).
inline dd dd_lngamma(dd y) {
    dd shift_log = dd_from(0.0);
    if (y.hi < 16.0) {
        dd prod = dd_from(1.0);
        while (y.hi < 16.0) {
            prod = dd_mul(prod, y);
            y = dd_add(y, 1.0);
        }
        shift_log = dd_log(prod);
    }
    const dd& yy = y;
    dd inv = dd_div(dd_from(1.0), yy);
    dd inv2 = dd_mul(inv, inv);
    dd series = dd_from(0.0);
    dd power = inv;         // 1/y^(2n-1)
    for (const dd& c : kStirling) {
        series = dd_add(series, dd_mul(c, power));
        power = dd_mul(power, inv2);
    }
    // (y - 1/2) log y - y + log(2 pi)/2 + series - log(prod)
    dd result = dd_mul(dd_add(yy, -0.5), dd_log(yy));
    result = dd_sub(result, yy);
    result = dd_add(result, kHalfLn2Pi);
    result = dd_add(result, series);
    return dd_sub(result, shift_log);
}

}  // namespace fracstokes::detail
