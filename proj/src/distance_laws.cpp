#include "aggsim/distance_laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aggsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_disk(double R_m) {
    if (!(R_m > 0.0)) throw std::domain_error("disk radius must be > 0");
}

// Survival weight (1 - Psi)^(N-1) in log space; the direct product underflows
// near r = 2R for large N.
double nearest_of_n_weight(double psi, int n_minus_1) {
    if (n_minus_1 == 0) return 1.0;
    if (psi >= 1.0) return 0.0;
    return std::exp(static_cast<double>(n_minus_1) * std::log1p(-psi));
}

}  // namespace

double psi_cdf(double r_m, double R_m) {
    check_disk(R_m);
    if (!(r_m >= 0.0 && r_m <= 2.0 * R_m))
        throw std::domain_error("psi_cdf: distance outside [0, 2R]");

    // Inverse secant/cosecant written as acos/asin of the reciprocal; the
    // ratio is clamped so rounding at r -> 2R cannot push it past 1.
    const double ratio = std::clamp(r_m / (2.0 * R_m), 0.0, 1.0);
    const double rel = r_m / R_m;
    const double chord = std::sqrt(std::max(4.0 * R_m * R_m - r_m * r_m, 0.0));
    const double acsc = std::asin(ratio);
    const double asec = std::acos(ratio);
    const double atan_term = std::atan2(r_m, chord);
    const double area_term =
        r_m * (r_m * r_m + 2.0 * R_m * R_m) * chord / (4.0 * R_m * R_m * R_m * R_m);
    const double psi = (4.0 * acsc + 2.0 * rel * rel * asec - 2.0 * atan_term - area_term) / kPi;
    return std::clamp(psi, 0.0, 1.0);
}

double disk_pair_pdf(double r_m, double R_m) {
    check_disk(R_m);
    if (r_m <= 0.0 || r_m >= 2.0 * R_m) return 0.0;
    const double R2 = R_m * R_m;
    const double half_chord = std::sqrt(std::max(R2 - 0.25 * r_m * r_m, 0.0));
    return 4.0 * r_m / (kPi * R2) * std::acos(r_m / (2.0 * R_m)) -
           2.0 * r_m * r_m / (kPi * R2 * R2) * half_chord;
}

DistanceLaw law_random_ppp(double lambda_per_m2) {
    if (!(lambda_per_m2 > 0.0))
        throw std::domain_error("law_random_ppp: density must be > 0");
    const double lam = lambda_per_m2;
    return {
        [lam](double r) {
            if (r < 0.0) return 0.0;
            return 2.0 * kPi * lam * r * std::exp(-kPi * lam * r * r);
        },
        [lam](double r) {
            if (r <= 0.0) return 0.0;
            return -std::expm1(-kPi * lam * r * r);
        },
        0.0,
        std::numeric_limits<double>::infinity(),
    };
}

DistanceLaw law_cluster_interior(double R_m, int n_aggregators) {
    check_disk(R_m);
    if (n_aggregators < 1)
        throw std::domain_error("law_cluster_interior: N must be >= 1");
    const double R = R_m;
    const int n = n_aggregators;
    return {
        [R, n](double r) {
            if (r <= 0.0 || r >= 2.0 * R) return 0.0;
            return n * disk_pair_pdf(r, R) * nearest_of_n_weight(psi_cdf(r, R), n - 1);
        },
        [R, n](double r) {
            if (r <= 0.0) return 0.0;
            if (r >= 2.0 * R) return 1.0;
            const double psi = psi_cdf(r, R);
            if (psi >= 1.0) return 1.0;
            return -std::expm1(n * std::log1p(-psi));
        },
        0.0,
        2.0 * R,
    };
}

DistanceLaw law_centroid(double R_m, double h_m) {
    check_disk(R_m);
    if (!(h_m >= 0.0)) throw std::domain_error("law_centroid: altitude must be >= 0");
    const double R2 = R_m * R_m;
    const double h2 = h_m * h_m;
    const double top = std::sqrt(R2 + h2);
    return {
        [R2, h_m, top](double r) {
            if (r < h_m || r > top) return 0.0;
            return 2.0 * r / R2;
        },
        [R2, h2, top](double r) {
            if (r <= 0.0) return 0.0;
            const double num = std::min(r * r, R2 + h2) - h2;
            return std::clamp(num / R2, 0.0, 1.0);
        },
        h_m,
        top,
    };
}

}  // namespace aggsim
