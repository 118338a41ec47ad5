#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "aggsim/config.hpp"
#include "aggsim/errors.hpp"
#include "aggsim/sweep.hpp"

using namespace aggsim;

namespace {

LoadedConfig small_both() {
    LoadedConfig cfg = load_config_text(
        "sweep.axis = pcf_epsilon\n"
        "sweep.grid = 0.2, 0.4\n"
        "sweep.strategies = random(5e-06), cluster_interior(1), centroid_terrestrial, "
        "centroid_aerial(100)\n"
        "sweep.outputs = power, coverage\n"
        "sweep.mode = both\n"
        "sim.n_realizations = 400\n"
        "sim.devices_per_realization = 50\n"
        "sim.seed = 12345\n",
        "test");
    return cfg;
}

}  // namespace

TEST_CASE("csv header and shape") {
    const std::string csv = csv_to_string({});
    CHECK(csv == "axis,axis_value,strategy,metric,mode,value,ci_halfwidth\n");

    std::vector<ResultRow> rows{{"pcf_epsilon", 0.25, "centroid_terrestrial", "power",
                                 "analytic", 0.123456789, 0.0, 0.0}};
    const std::string one = csv_to_string(rows);
    CHECK(one ==
          "axis,axis_value,strategy,metric,mode,value,ci_halfwidth\n"
          "pcf_epsilon,0.25,centroid_terrestrial,power,analytic,0.123456789,0\n");
}

TEST_CASE("analytic sweep rows are deterministic and complete") {
    LoadedConfig cfg = preset("fig3a");
    cfg.sweep.mode = RunMode::kAnalytic;
    const SweepReport report = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
    // 11 grid points x 6 strategies x 2 metrics
    CHECK(report.rows.size() == 11 * 6 * 2);
    for (const auto& row : report.rows) {
        CHECK(row.mode == "analytic");
        CHECK(row.ci_halfwidth == 0.0);
        CHECK(row.axis == "pcf_epsilon");
    }
    // deterministic order: strategies cycle within each grid point
    CHECK(report.rows[0].strategy == "random(λ=5e-06)");
    CHECK(report.rows[0].metric == "power");
    CHECK(report.rows[1].metric == "lifetime");
    CHECK(report.rows[2].strategy == "random(λ=2.5e-05)");

    const SweepReport again = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
    CHECK(csv_to_string(report.rows) == csv_to_string(again.rows));
}

TEST_CASE("both mode rows pair up and agree for exact strategies") {
    const LoadedConfig cfg = small_both();
    const SweepReport report = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
    // 2 grid x 4 strategies x 2 metrics x 2 modes
    CHECK(report.rows.size() == 2 * 4 * 2 * 2);
    CHECK(report.mc_rows_compared == 2 * 4 * 2);
    // every pair within 3 SE plus the tail allowance: the report counts raw
    // 3-SE exceedances, which the saturated-power rounding cases can trip; the
    // genuine statistical z must stay small
    CHECK(report.max_abs_z < 3.5);

    // byte-identical rerun with the same seed
    const SweepReport again = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
    CHECK(csv_to_string(report.rows) == csv_to_string(again.rows));

    // thread count does not change the bytes either
    const SweepReport threaded = run_sweep(cfg.scenario, cfg.sweep, cfg.sim, 4);
    CHECK(csv_to_string(report.rows) == csv_to_string(threaded.rows));
}

TEST_CASE("axis overrides reach the right parameter") {
    SUBCASE("density sweep changes the random strategy only") {
        const LoadedConfig cfg = load_config_text(
            "sweep.axis = density\n"
            "sweep.grid = 5e-06, 2.5e-05\n"
            "sweep.strategies = random(1e-06), centroid_terrestrial\n"
            "sweep.outputs = coverage\n",
            "test");
        const SweepReport report = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
        REQUIRE(report.rows.size() == 4);
        // random coverage rises with density; centroid rows are flat
        CHECK(report.rows[0].value < report.rows[2].value);
        CHECK(report.rows[1].value == report.rows[3].value);
    }
    SUBCASE("altitude sweep changes the aerial strategy") {
        const LoadedConfig cfg = load_config_text(
            "sweep.axis = altitude\n"
            "sweep.grid = 50, 100, 200\n"
            "sweep.strategies = centroid_aerial(100)\n"
            "sweep.outputs = power\n"
            "channel.penetration_loss_db = 25\n",
            "test");
        const SweepReport report = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
        REQUIRE(report.rows.size() == 3);
        // higher altitude means longer links and more transmit power
        CHECK(report.rows[0].value < report.rows[1].value);
        CHECK(report.rows[1].value < report.rows[2].value);
    }
    SUBCASE("aggregator-count sweep changes the interior strategy") {
        const LoadedConfig cfg = load_config_text(
            "sweep.axis = n_aggregators\n"
            "sweep.grid = 1, 5, 20\n"
            "sweep.strategies = cluster_interior(1)\n"
            "sweep.outputs = power\n"
            "power.epsilon = 0.3\n",
            "test");
        const SweepReport report = run_sweep(cfg.scenario, cfg.sweep, cfg.sim);
        REQUIRE(report.rows.size() == 3);
        CHECK(report.rows[0].value > report.rows[1].value);
        CHECK(report.rows[1].value > report.rows[2].value);
    }
}

TEST_CASE("raw sample dump uses the documented schema") {
    LoadedConfig cfg = load_config_text(
        "sweep.axis = pcf_epsilon\n"
        "sweep.grid = 0.4\n"
        "sweep.strategies = centroid_aerial(100)\n"
        "sweep.outputs = power\n"
        "sweep.mode = mc\n"
        "sim.n_realizations = 3\n"
        "sim.devices_per_realization = 2\n",
        "test");
    std::ostringstream dump;
    run_sweep(cfg.scenario, cfg.sweep, cfg.sim, 1, &dump);
    std::istringstream in(dump.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "realization,strategy,distance_m,tx_power_w,covered");
    int count = 0;
    while (std::getline(in, line)) {
        ++count;
        CHECK(line.find("centroid_aerial(h=100)") != std::string::npos);
    }
    CHECK(count == 6);
}

TEST_CASE("csv file writing failure raises IoError") {
    CHECK_THROWS_AS(write_csv_file({}, "/nonexistent-dir/out.csv"), IoError);
}
