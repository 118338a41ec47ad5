#pragma once

#include <functional>

namespace aggsim {

/// Distribution of the device-to-serving-aggregator distance under one
/// deployment strategy. pdf is 0 outside [r_min, r_max]; cdf is 0 below
/// r_min and 1 above r_max. r_max may be +inf.
struct DistanceLaw {
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    double r_min = 0.0;
    double r_max = 0.0;
};

/// CDF of the distance between two independent uniform points in a disk of
/// radius R. Domain [0, 2R]; throws std::domain_error outside it.
double psi_cdf(double r_m, double R_m);

/// Density of the same two-point distance (the N=1 cluster-interior law).
double disk_pair_pdf(double r_m, double R_m);

/// Nearest-aggregator distance under an HPPP of the given density.
/// Support [0, +inf).
DistanceLaw law_random_ppp(double lambda_per_m2);

/// Distance to the nearest of N aggregators dropped uniformly in the device
/// disk: the N-th order-statistic transform of the two-point law.
DistanceLaw law_cluster_interior(double R_m, int n_aggregators);

/// Distance to an aggregator fixed above the disk center at altitude h
/// (h = 0 gives the terrestrial centroid law on [0, R]).
DistanceLaw law_centroid(double R_m, double h_m);

}  // namespace aggsim
