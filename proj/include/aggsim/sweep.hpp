#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aggsim/config.hpp"
#include "aggsim/montecarlo.hpp"

namespace aggsim {

struct ResultRow {
    std::string axis;
    double axis_value = 0.0;
    std::string strategy;
    std::string metric;
    std::string mode;  // "analytic" or "mc"
    double value = 0.0;
    double ci_halfwidth = 0.0;  // 95% half-width; 0 for analytic rows

    double std_error = 0.0;  // internal, not emitted
};

struct SweepReport {
    std::vector<ResultRow> rows;
    int mc_rows_compared = 0;     // (axis value, strategy, metric) pairs seen in both modes
    int mc_rows_beyond_3se = 0;   // pairs where |mc - analytic| > 3 std errors
    double max_abs_z = 0.0;       // worst |mc - analytic| / std_error observed
};

/// Evaluate every (grid value, strategy) combination and emit one row per
/// requested metric and mode, in deterministic order. In BOTH mode the report
/// carries analytic-vs-MC discrepancy statistics.
SweepReport run_sweep(const SystemScenario& scenario, const SweepSpec& spec,
                      const SimConfig& sim, int threads = 1,
                      std::ostream* sample_dump = nullptr);

/// Header exactly: axis,axis_value,strategy,metric,mode,value,ci_halfwidth
/// Values printed with 9 significant digits, LF line endings.
void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out);

/// emit_csv into a file; throws IoError on failure.
void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path);

std::string csv_to_string(const std::vector<ResultRow>& rows);

}  // namespace aggsim
