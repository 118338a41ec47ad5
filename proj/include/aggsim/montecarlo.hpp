#pragma once

#include <cstdint>
#include <vector>

#include "aggsim/rng.hpp"
#include "aggsim/scenario.hpp"
#include "aggsim/strategy.hpp"

namespace aggsim {

struct SimConfig {
    int n_realizations = 1000;
    int devices_per_realization = 100;
    std::uint64_t seed = 1;
    double window_margin_sigma = 5.0;  // HPPP window extends this many 1/sqrt(pi*lambda) beyond R

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // across realizations
    long n = 0;              // independent realizations behind the estimate
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// count i.i.d. uniform points in the disk of radius R (radius = R*sqrt(u),
/// angle = 2*pi*v).
std::vector<Point2> sample_uniform_disk(double R_m, int count, RngStream& rng);

/// One HPPP realization in a disk window centered at the origin. Points come
/// out ordered by radius, and enlarging the window with the same stream only
/// appends farther points — the near field is unchanged. Count within any
/// radius w' <= window_radius is Poisson(lambda*pi*w'^2), positions uniform.
std::vector<Point2> sample_hppp(double lambda_per_m2, double window_radius_m,
                                RngStream& rng);

/// Arithmetic mean of the points (minimizer of the summed squared distances).
Point2 centroid_of(const std::vector<Point2>& points);

/// One device observation, for the optional raw-sample dump.
struct DeviceRecord {
    int realization = 0;
    double distance_m = 0.0;
    double tx_power_w = 0.0;
    bool covered = false;
};

struct SimResult {
    McEstimate avg_ptx;   // transmit-stage consumption, circuitry included
    McEstimate coverage;
    std::vector<double> distance_samples;  // filled when collect_distances is set
};

/// Seeded Monte Carlo evaluation of one strategy. Deterministic for a given
/// (seed, config) regardless of the thread count: every realization owns a
/// counter-derived substream and accumulation is fixed-order pairwise.
SimResult simulate(const DeploymentStrategy& strategy, const SystemScenario& scenario,
                   const SimConfig& sim, int threads = 1,
                   bool collect_distances = false,
                   std::vector<DeviceRecord>* records = nullptr);

}  // namespace aggsim
