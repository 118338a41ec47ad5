#include "aggsim/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aggsim/analytic.hpp"
#include "aggsim/errors.hpp"
#include "fmt_util.hpp"

namespace aggsim {

namespace {

// The sweep axis overrides one scenario or strategy parameter per grid point.
void apply_axis(SweepAxis axis, double value, SystemScenario& sc, DeploymentStrategy& st) {
    switch (axis) {
        case SweepAxis::kPcfEpsilon:
            sc.power.epsilon = value;
            break;
        case SweepAxis::kClusterRadius:
            sc.geometry.R_m = value;
            break;
        case SweepAxis::kDensity:
            if (auto* p = std::get_if<RandomPpp>(&st)) p->lambda_per_m2 = value;
            break;
        case SweepAxis::kNAggregators:
            if (auto* p = std::get_if<ClusterInterior>(&st))
                p->n_aggregators = static_cast<int>(value);
            break;
        case SweepAxis::kAltitude:
            sc.geometry.h_m = value;
            if (auto* p = std::get_if<CentroidAerial>(&st)) p->altitude_m = value;
            break;
        case SweepAxis::kPenetrationDb:
            sc.channel.penetration_loss_db = value;
            break;
    }
}

PerfResult mc_result(const SimResult& sr, const EnergyProfile& ep) {
    PerfResult r;
    r.source = Provenance::kMonteCarlo;
    r.avg_tx_power_w = sr.avg_ptx.mean;
    r.ci_power_w = 1.96 * sr.avg_ptx.std_error;
    r.coverage_prob = sr.coverage.mean;
    r.ci_coverage = 1.96 * sr.coverage.std_error;

    const double daily = daily_energy_j(r.avg_tx_power_w, ep);
    r.lifetime_years = lifetime_years(daily, ep);
    // Delta method through the daily-energy chain: dY/dP = -Y * n_rep*t_tx / E.
    const double dy_dp = r.lifetime_years * ep.n_rep * ep.t_tx_s / daily;
    r.ci_lifetime_years = 1.96 * dy_dp * sr.avg_ptx.std_error;
    return r;
}

double metric_value(const PerfResult& r, Metric m) {
    switch (m) {
        case Metric::kPower: return r.avg_tx_power_w;
        case Metric::kLifetime: return r.lifetime_years;
        case Metric::kCoverage: return r.coverage_prob;
    }
    return 0.0;
}

double metric_ci(const PerfResult& r, Metric m) {
    switch (m) {
        case Metric::kPower: return r.ci_power_w;
        case Metric::kLifetime: return r.ci_lifetime_years;
        case Metric::kCoverage: return r.ci_coverage;
    }
    return 0.0;
}

void dump_records(std::ostream& out, const std::string& label,
                  const std::vector<DeviceRecord>& records) {
    for (const auto& rec : records) {
        out << rec.realization << ',' << label << ',' << fmt_9g(rec.distance_m) << ','
            << fmt_9g(rec.tx_power_w) << ',' << (rec.covered ? 1 : 0) << '\n';
    }
}

}  // namespace

SweepReport run_sweep(const SystemScenario& scenario, const SweepSpec& spec,
                      const SimConfig& sim, int threads, std::ostream* sample_dump) {
    scenario.validate();
    spec.validate();
    sim.validate();

    const bool want_analytic = spec.mode != RunMode::kMc;
    const bool want_mc = spec.mode != RunMode::kAnalytic;
    if (sample_dump && want_mc)
        *sample_dump << "realization,strategy,distance_m,tx_power_w,covered\n";

    SweepReport report;
    const std::string axis = axis_name(spec.axis);

    for (double axis_value : spec.grid) {
        for (const auto& base_strategy : spec.strategies) {
            SystemScenario sc = scenario;
            DeploymentStrategy st = base_strategy;
            apply_axis(spec.axis, axis_value, sc, st);
            const std::string label = strategy_label(base_strategy);

            PerfResult analytic;
            PerfResult mc;
            if (want_analytic) analytic = analytic_performance(st, sc);
            if (want_mc) {
                std::vector<DeviceRecord> records;
                const SimResult sr = simulate(st, sc, sim, threads, false,
                                              sample_dump ? &records : nullptr);
                mc = mc_result(sr, sc.energy);
                if (sample_dump) dump_records(*sample_dump, label, records);
            }

            for (Metric m : spec.outputs) {
                if (want_analytic)
                    report.rows.push_back({axis, axis_value, label, metric_name(m),
                                           "analytic", metric_value(analytic, m), 0.0, 0.0});
                if (want_mc) {
                    const double ci = metric_ci(mc, m);
                    report.rows.push_back({axis, axis_value, label, metric_name(m), "mc",
                                           metric_value(mc, m), ci, ci / 1.96});
                }
                if (want_analytic && want_mc) {
                    const double diff = std::fabs(metric_value(mc, m) - metric_value(analytic, m));
                    const double se = metric_ci(mc, m) / 1.96;
                    ++report.mc_rows_compared;
                    if (diff > 3.0 * se) ++report.mc_rows_beyond_3se;
                    if (se > 0.0) report.max_abs_z = std::max(report.max_abs_z, diff / se);
                }
            }
        }
    }
    return report;
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "axis,axis_value,strategy,metric,mode,value,ci_halfwidth\n";
    for (const auto& r : rows) {
        out << r.axis << ',' << fmt_9g(r.axis_value) << ',' << r.strategy << ','
            << r.metric << ',' << r.mode << ',' << fmt_9g(r.value) << ','
            << fmt_9g(r.ci_halfwidth) << '\n';
    }
}

void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    emit_csv(rows, out);
    out.flush();
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

std::string csv_to_string(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    emit_csv(rows, out);
    return out.str();
}

}  // namespace aggsim
