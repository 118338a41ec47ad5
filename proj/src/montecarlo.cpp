#include "aggsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>

#include "aggsim/errors.hpp"
#include "aggsim/link_model.hpp"

namespace aggsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxExpectedPoints = 1e8;

// Fixed-order pairwise reduction; insensitive to how the inputs were produced.
double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

McEstimate estimate_from(const std::vector<double>& per_realization) {
    const long n = static_cast<long>(per_realization.size());
    McEstimate est;
    est.n = n;
    est.mean = pairwise_sum(per_realization) / static_cast<double>(n);
    if (n > 1) {
        std::vector<double> sq(per_realization.size());
        for (size_t i = 0; i < sq.size(); ++i) {
            const double d = per_realization[i] - est.mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
        est.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return est;
}

}  // namespace

void SimConfig::validate() const {
    if (n_realizations < 1) throw std::domain_error("sim.n_realizations must be >= 1");
    if (devices_per_realization < 1)
        throw std::domain_error("sim.devices_per_realization must be >= 1");
    if (!(window_margin_sigma >= 3.0))
        throw std::domain_error("sim.window_margin_sigma must be >= 3");
}

std::vector<Point2> sample_uniform_disk(double R_m, int count, RngStream& rng) {
    if (!(R_m > 0.0)) throw std::domain_error("sample_uniform_disk: radius must be > 0");
    if (count < 0) throw std::domain_error("sample_uniform_disk: count must be >= 0");
    std::vector<Point2> pts(static_cast<size_t>(count));
    for (auto& p : pts) {
        const double r = R_m * std::sqrt(rng.next_double());
        const double ang = 2.0 * kPi * rng.next_double();
        p = {r * std::cos(ang), r * std::sin(ang)};
    }
    return pts;
}

std::vector<Point2> sample_hppp(double lambda_per_m2, double window_radius_m,
                                RngStream& rng) {
    if (!(lambda_per_m2 > 0.0)) throw std::domain_error("sample_hppp: density must be > 0");
    if (!(window_radius_m > 0.0))
        throw std::domain_error("sample_hppp: window radius must be > 0");
    const double expected = lambda_per_m2 * kPi * window_radius_m * window_radius_m;
    if (expected > kMaxExpectedPoints)
        throw ResourceError("sample_hppp: expected point count exceeds 1e8");

    // Successive points of an HPPP ordered by distance from the origin: the
    // squared radii scaled by pi*lambda are arrivals of a unit-rate Poisson
    // process. Generating them in this order makes the realization nested in
    // the window radius.
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(expected + 6.0 * std::sqrt(expected) + 16.0));
    double area_arrival = 0.0;
    while (true) {
        area_arrival += rng.next_exp();
        const double r = std::sqrt(area_arrival / (kPi * lambda_per_m2));
        if (r > window_radius_m) break;
        const double ang = 2.0 * kPi * rng.next_double();
        pts.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return pts;
}

Point2 centroid_of(const std::vector<Point2>& points) {
    if (points.empty()) throw std::domain_error("centroid_of: empty point set");
    double sx = 0.0, sy = 0.0;
    for (const auto& p : points) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(points.size());
    return {sx / n, sy / n};
}

SimResult simulate(const DeploymentStrategy& strategy, const SystemScenario& scenario,
                   const SimConfig& sim, int threads, bool collect_distances,
                   std::vector<DeviceRecord>* records) {
    sim.validate();
    scenario.validate();
    validate(strategy);

    const double R = scenario.geometry.R_m;
    const double exponent = exponent_for(strategy, scenario.channel);
    const double eps_alpha = scenario.power.epsilon * exponent;
    const double coef = effective_open_loop_w(exponent, scenario.power, scenario.channel);
    const double p_max = scenario.power.p_max_w();
    const double cover_dist =
        coverage_distance_m(scenario.budget, scenario.channel, exponent);

    const int nr = sim.n_realizations;
    const int nd = sim.devices_per_realization;
    const size_t total = static_cast<size_t>(nr) * static_cast<size_t>(nd);

    double window = 0.0;
    if (const auto* ppp = std::get_if<RandomPpp>(&strategy)) {
        window = R + sim.window_margin_sigma / std::sqrt(kPi * ppp->lambda_per_m2);
        const double expected = ppp->lambda_per_m2 * kPi * window * window;
        if (expected * static_cast<double>(nr) > 100.0 * kMaxExpectedPoints)
            throw ResourceError("simulate: HPPP workload too large");
    }

    std::vector<double> mean_tx(nr), cover_frac(nr);
    std::vector<double> distances(collect_distances ? total : 0,
                                  std::numeric_limits<double>::quiet_NaN());
    if (records) records->assign(total, DeviceRecord{});

    const auto tx_of = [&](double d) {
        d = std::max(d, std::numeric_limits<double>::min());
        return std::min(coef * std::pow(d, eps_alpha), p_max);
    };

    const auto run_realization = [&](int k) {
        RngStream rng(sim.seed, static_cast<std::uint64_t>(k));
        // Devices are drawn before aggregators so that the aggregator stream
        // extends cleanly if the HPPP window is enlarged.
        const std::vector<Point2> devices = sample_uniform_disk(R, nd, rng);

        std::vector<Point2> aggregators;
        double altitude = 0.0;
        bool fixed_center = false;
        if (std::holds_alternative<RandomPpp>(strategy)) {
            aggregators =
                sample_hppp(std::get<RandomPpp>(strategy).lambda_per_m2, window, rng);
        } else if (const auto* ci = std::get_if<ClusterInterior>(&strategy)) {
            aggregators = sample_uniform_disk(R, ci->n_aggregators, rng);
        } else {
            fixed_center = true;
            if (const auto* air = std::get_if<CentroidAerial>(&strategy))
                altitude = air->altitude_m;
        }

        double sum_tx = 0.0;
        int covered_count = 0;
        for (int i = 0; i < nd; ++i) {
            const Point2& dev = devices[static_cast<size_t>(i)];
            double d;
            bool reachable = true;
            if (fixed_center) {
                d = std::sqrt(dev.x * dev.x + dev.y * dev.y + altitude * altitude);
            } else if (aggregators.empty()) {
                // Void realization: nothing to associate with. The device
                // transmits at P_max and counts as uncovered.
                d = std::numeric_limits<double>::infinity();
                reachable = false;
            } else {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& a : aggregators) {
                    const double dx = dev.x - a.x;
                    const double dy = dev.y - a.y;
                    best = std::min(best, dx * dx + dy * dy);
                }
                d = std::sqrt(best);
            }

            const double tx = reachable ? tx_of(d) : p_max;
            const bool covered = reachable && d <= cover_dist;
            sum_tx += tx;
            covered_count += covered ? 1 : 0;

            const size_t slot = static_cast<size_t>(k) * nd + static_cast<size_t>(i);
            if (collect_distances && reachable) distances[slot] = d;
            if (records) (*records)[slot] = {k, d, tx, covered};
        }
        mean_tx[k] = sum_tx / nd;
        cover_frac[k] = static_cast<double>(covered_count) / nd;
    };

    const int n_threads = std::clamp(threads, 1, 256);
    if (n_threads == 1 || nr < 2 * n_threads) {
        for (int k = 0; k < nr; ++k) run_realization(k);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        const int chunk = (nr + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(nr, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (int k = lo; k < hi; ++k) run_realization(k);
            });
        }
        for (auto& th : pool) th.join();
    }

    SimResult result;
    result.avg_ptx = estimate_from(mean_tx);
    result.avg_ptx.mean = consumption_w(result.avg_ptx.mean, scenario.energy);
    result.avg_ptx.std_error /= scenario.energy.eta;
    result.coverage = estimate_from(cover_frac);
    if (collect_distances) {
        distances.erase(std::remove_if(distances.begin(), distances.end(),
                                       [](double d) { return std::isnan(d); }),
                        distances.end());
        result.distance_samples = std::move(distances);
    }
    return result;
}

}  // namespace aggsim
