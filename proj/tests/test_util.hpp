#pragma once

// Shared helpers for the test suites: oracle-side sampling and integration
// kept deliberately independent of the library implementation paths they
// check (std::mt19937_64 instead of the library RNG, Simpson instead of
// Gauss-Kronrod).

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace testutil {

inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return d;
}

/// One-percent-level critical value of the Kolmogorov statistic for large n.
inline double ks_critical_1pct(size_t n) { return 1.62762 / std::sqrt(static_cast<double>(n)); }

namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fb, double fm, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, fm, flm, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, fb, frm, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature, used as the independent integration oracle.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-13) {
    if (a == b) return 0.0;
    return detail::simpson_rec(f, a, b, f(a), f(b), f(0.5 * (a + b)), tol, 60);
}

struct XY {
    double x, y;
};

/// Uniform point in a disk of radius R, oracle-side generator.
inline XY disk_point(double R, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = R * std::sqrt(u(gen));
    const double a = 2.0 * M_PI * u(gen);
    return {r * std::cos(a), r * std::sin(a)};
}

inline double dist(const XY& p, const XY& q) { return std::hypot(p.x - q.x, p.y - q.y); }

}  // namespace testutil
