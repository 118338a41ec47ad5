#include "aggsim/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "aggsim/errors.hpp"

namespace aggsim {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// P(s,x) by the power series around 0, valid and fast for x < s+1.
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double a = s;
    for (int i = 0; i < kMaxIter; ++i) {
        a += 1.0;
        term *= x / a;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw NumericError("lower_incomplete_gamma: series did not converge",
                       std::fabs(term / sum));
}

// Q(s,x) = 1 - P(s,x) by the modified Lentz continued fraction, for x >= s+1.
double gamma_q_contfrac(double s, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps)
            return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw NumericError("lower_incomplete_gamma: continued fraction did not converge",
                       0.0);
}

}  // namespace

double regularized_gamma_p(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("regularized_gamma_p: s must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return x < s + 1.0 ? gamma_p_series(s, x) : 1.0 - gamma_q_contfrac(s, x);
}

double lower_incomplete_gamma(double s, double x) {
    const double p = regularized_gamma_p(s, x);
    if (s < 170.0) return p * std::tgamma(s);
    if (p == 0.0) return 0.0;
    return std::exp(std::lgamma(s) + std::log(p));
}

}  // namespace aggsim
