#pragma once

#include <functional>

namespace aggsim {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 10000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of f over [a, b].
/// Bisects the interval with the largest local error until the summed error
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws NumericError
/// (carrying the achieved error) if the subdivision budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

}  // namespace aggsim
