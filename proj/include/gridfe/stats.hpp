#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gridfe/errors.hpp"

namespace gridfe {

inline double mean(std::span<const double> v) {
    double s = 0;
    for (double x : v)
        s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

/// Sample standard deviation (n-1 denominator).
inline double sample_sd(std::span<const double> v) {
    if (v.size() < 2)
        return 0.0;
    const double m = mean(v);
    double s = 0;
    for (double x : v)
        s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

/// Product-moment correlation. Requires equal lengths >= 2 and nonzero variance.
inline double pearson_corr(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ArgumentError("pearson_corr: length mismatch");
    if (x.size() < 2)
        throw ArgumentError("pearson_corr: need at least 2 observations");
    const double mx = mean(x), my = mean(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw EstimationError("pearson_corr: undefined for zero-variance input");
    return sxy / std::sqrt(sxx * syy);
}

/// Durbin-Watson statistic of one time-ordered residual series.
inline double durbin_watson_stat(std::span<const double> e) {
    if (e.size() < 2)
        throw ArgumentError("durbin_watson: need at least 2 residuals");
    double num = 0, den = 0;
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (t > 0)
            num += (e[t] - e[t - 1]) * (e[t] - e[t - 1]);
        den += e[t] * e[t];
    }
    if (den == 0.0)
        return 0.0; // all-zero residuals: no variation to diagnose
    return num / den;
}

/// Empirical percentile with linear interpolation between closest order
/// statistics: at rank h = p*(n-1), value = x[floor h] + frac*(x[floor h + 1] - x[floor h]).
inline double percentile(std::vector<double> v, double p) {
    if (v.empty())
        throw ArgumentError("percentile: empty sample");
    if (!(p > 0.0 && p < 1.0))
        throw ArgumentError("percentile: p must be in (0,1)");
    std::sort(v.begin(), v.end());
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= v.size())
        return v.back();
    const double frac = h - static_cast<double>(lo);
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

namespace detail {

// Continued fraction for the incomplete beta function (Lentz's method).
inline double beta_cf(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 3e-14, fpmin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin)
        d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps)
            break;
    }
    return h;
}

} // namespace detail

/// Regularized incomplete beta I_x(a, b).
inline double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * detail::beta_cf(a, b, x) / a;
    return 1.0 - bt * detail::beta_cf(b, a, 1.0 - x) / b;
}

/// Two-sided p-value of a t statistic with `dof` degrees of freedom.
inline double student_t_two_sided_p(double t, double dof) {
    if (dof <= 0.0)
        return 1.0;
    if (!std::isfinite(t))
        return 0.0;
    const double x = dof / (dof + t * t);
    return incomplete_beta(dof / 2.0, 0.5, x);
}

/// Significance stars matching the usual p < 0.05 / 0.01 / 0.001 convention.
inline std::string significance_stars(double p) {
    if (p < 0.001)
        return "***";
    if (p < 0.01)
        return "**";
    if (p < 0.05)
        return "*";
    return "";
}

} // namespace gridfe
