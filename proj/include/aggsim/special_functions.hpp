#pragma once

namespace aggsim {

/// Lower incomplete gamma γ(s,x) = ∫_0^x t^(s-1) e^(-t) dt for s > 0, x >= 0.
/// Series expansion for x < s+1, continued fraction on the complement
/// otherwise; relative accuracy around 1e-14.
double lower_incomplete_gamma(double s, double x);

/// Regularized form P(s,x) = γ(s,x) / Γ(s), in [0,1].
double regularized_gamma_p(double s, double x);

}  // namespace aggsim
