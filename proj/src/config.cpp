#include "aggsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "aggsim/errors.hpp"
#include "fmt_util.hpp"

namespace aggsim {

namespace {

struct RawValue {
    std::string text;
    int line = 0;
};

using RawMap = std::map<std::string, RawValue>;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "channel.l_o_db", "channel.alpha_g", "channel.alpha_air",
        "channel.penetration_loss_db",
        "power.p_o_dbm", "power.p_max_dbm", "power.epsilon",
        "power.open_loop_convention",
        "budget.n0_dbm_hz", "budget.nf_db", "budget.bandwidth_hz", "budget.tau_db",
        "budget.gain_db", "budget.mcl_target_db",
        "energy.p_cp_w", "energy.eta", "energy.p_rx_w", "energy.p_i_w", "energy.p_s_w",
        "energy.t_tx_s", "energy.t_rx_s", "energy.t_i_s", "energy.t_s_s",
        "energy.n_rep", "energy.battery_wh",
        "geometry.r_m", "geometry.h_m",
        "los.gamma1_m", "los.gamma2_m", "los.altitude_offset_m",
        "sweep.axis", "sweep.grid", "sweep.strategies", "sweep.outputs", "sweep.mode",
        "sim.n_realizations", "sim.devices_per_realization", "sim.seed",
        "sim.window_margin_sigma", "sim.sample_dump",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

RawMap parse_raw(const std::string& text, const std::string& origin) {
    RawMap raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", lineno, origin + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("", lineno, origin + ": empty key");
        if (!known_keys().count(key))
            throw ConfigError(key, lineno, "unknown key");
        if (raw.count(key))
            throw ConfigError(key, lineno, "duplicate key (first set on line " +
                                               std::to_string(raw[key].line) + ")");
        raw[key] = {value, lineno};
    }
    return raw;
}

class Reader {
public:
    explicit Reader(RawMap raw) : raw_(std::move(raw)) {}

    bool has(const std::string& key) const { return raw_.count(key) != 0; }

    int line_of(const std::string& key) const {
        const auto it = raw_.find(key);
        return it == raw_.end() ? 0 : it->second.line;
    }

    void get(const std::string& key, double& out) {
        if (const RawValue* rv = take(key)) out = parse_double(key, *rv);
    }

    void get(const std::string& key, int& out) {
        if (const RawValue* rv = take(key)) {
            const double v = parse_double(key, *rv);
            if (v != std::floor(v) || std::fabs(v) > 1e9)
                throw ConfigError(key, rv->line, "expected an integer, got '" + rv->text + "'");
            out = static_cast<int>(v);
        }
    }

    void get(const std::string& key, std::uint64_t& out) {
        if (const RawValue* rv = take(key)) {
            try {
                size_t pos = 0;
                out = std::stoull(rv->text, &pos);
                if (pos != rv->text.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ConfigError(key, rv->line,
                                  "expected an unsigned integer, got '" + rv->text + "'");
            }
        }
    }

    void get(const std::string& key, std::string& out) {
        if (const RawValue* rv = take(key)) out = rv->text;
    }

    const RawValue* take(const std::string& key) {
        const auto it = raw_.find(key);
        return it == raw_.end() ? nullptr : &it->second;
    }

    std::vector<std::string> split_list(const std::string& key) {
        std::vector<std::string> items;
        const RawValue* rv = take(key);
        if (!rv) return items;
        std::string item;
        std::istringstream in(rv->text);
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty())
                throw ConfigError(key, rv->line, "empty list element");
            items.push_back(item);
        }
        return items;
    }

    void require(const std::string& key) const {
        if (!has(key)) throw ConfigError(key, 0, "missing required key");
    }

private:
    double parse_double(const std::string& key, const RawValue& rv) {
        try {
            size_t pos = 0;
            const double v = std::stod(rv.text, &pos);
            if (pos != rv.text.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ConfigError(key, rv.line, "expected a number, got '" + rv.text + "'");
        }
    }

    RawMap raw_;
};

SweepAxis parse_axis(const std::string& text, int line) {
    if (text == "pcf_epsilon") return SweepAxis::kPcfEpsilon;
    if (text == "cluster_radius") return SweepAxis::kClusterRadius;
    if (text == "density") return SweepAxis::kDensity;
    if (text == "n_aggregators") return SweepAxis::kNAggregators;
    if (text == "altitude") return SweepAxis::kAltitude;
    if (text == "penetration_db") return SweepAxis::kPenetrationDb;
    throw ConfigError("sweep.axis", line, "unknown axis '" + text + "'");
}

RunMode parse_mode(const std::string& text, int line) {
    if (text == "analytic") return RunMode::kAnalytic;
    if (text == "mc") return RunMode::kMc;
    if (text == "both") return RunMode::kBoth;
    throw ConfigError("sweep.mode", line, "unknown mode '" + text + "'");
}

void check_grid_values(SweepAxis axis, const std::vector<double>& grid, int line) {
    for (double v : grid) {
        switch (axis) {
            case SweepAxis::kPcfEpsilon:
                if (!(v >= 0.0 && v <= 1.0))
                    throw ConfigError("sweep.grid", line, "pcf_epsilon values must be in [0,1]");
                break;
            case SweepAxis::kClusterRadius:
            case SweepAxis::kDensity:
                if (!(v > 0.0))
                    throw ConfigError("sweep.grid", line, "grid values must be > 0");
                break;
            case SweepAxis::kNAggregators:
                if (v != std::floor(v) || v < 1.0)
                    throw ConfigError("sweep.grid", line,
                                      "n_aggregators values must be integers >= 1");
                break;
            case SweepAxis::kAltitude:
            case SweepAxis::kPenetrationDb:
                if (!(v >= 0.0))
                    throw ConfigError("sweep.grid", line, "grid values must be >= 0");
                break;
        }
    }
}

}  // namespace

std::string axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::kPcfEpsilon: return "pcf_epsilon";
        case SweepAxis::kClusterRadius: return "cluster_radius";
        case SweepAxis::kDensity: return "density";
        case SweepAxis::kNAggregators: return "n_aggregators";
        case SweepAxis::kAltitude: return "altitude";
        case SweepAxis::kPenetrationDb: return "penetration_db";
    }
    return "?";
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::kPower: return "power";
        case Metric::kLifetime: return "lifetime";
        case Metric::kCoverage: return "coverage";
    }
    return "?";
}

std::string mode_name(RunMode m) {
    switch (m) {
        case RunMode::kAnalytic: return "analytic";
        case RunMode::kMc: return "mc";
        case RunMode::kBoth: return "both";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (grid.empty()) throw std::domain_error("sweep.grid must be nonempty");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::domain_error("sweep.grid must be strictly increasing");
    if (strategies.empty()) throw std::domain_error("sweep.strategies must be nonempty");
    if (outputs.empty()) throw std::domain_error("sweep.outputs must be nonempty");
    for (const auto& s : strategies) aggsim::validate(s);
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str(), path);
}

LoadedConfig load_config_text(const std::string& text, const std::string& origin) {
    Reader r(parse_raw(text, origin));
    LoadedConfig cfg;

    r.get("channel.l_o_db", cfg.scenario.channel.l_o_db);
    r.get("channel.alpha_g", cfg.scenario.channel.alpha_g);
    r.get("channel.alpha_air", cfg.scenario.channel.alpha_air);
    r.get("channel.penetration_loss_db", cfg.scenario.channel.penetration_loss_db);

    r.get("power.p_o_dbm", cfg.scenario.power.p_o_dbm);
    r.get("power.p_max_dbm", cfg.scenario.power.p_max_dbm);
    r.get("power.epsilon", cfg.scenario.power.epsilon);
    if (const auto* rv = r.take("power.open_loop_convention")) {
        if (rv->text == "eq10_full")
            cfg.scenario.power.open_loop_convention = OpenLoopConvention::kEq10Full;
        else if (rv->text == "standard_fractional")
            cfg.scenario.power.open_loop_convention = OpenLoopConvention::kStandardFractional;
        else
            throw ConfigError("power.open_loop_convention", rv->line,
                              "expected eq10_full or standard_fractional");
    }

    r.get("budget.n0_dbm_hz", cfg.scenario.budget.n0_dbm_hz);
    r.get("budget.nf_db", cfg.scenario.budget.nf_db);
    r.get("budget.bandwidth_hz", cfg.scenario.budget.bandwidth_hz);
    r.get("budget.tau_db", cfg.scenario.budget.tau_db);
    r.get("budget.gain_db", cfg.scenario.budget.gain_db);
    r.get("budget.mcl_target_db", cfg.scenario.budget.mcl_target_db);

    r.get("energy.p_cp_w", cfg.scenario.energy.p_cp_w);
    r.get("energy.eta", cfg.scenario.energy.eta);
    r.get("energy.p_rx_w", cfg.scenario.energy.p_rx_w);
    r.get("energy.p_i_w", cfg.scenario.energy.p_i_w);
    r.get("energy.p_s_w", cfg.scenario.energy.p_s_w);
    r.get("energy.t_tx_s", cfg.scenario.energy.t_tx_s);
    r.get("energy.t_rx_s", cfg.scenario.energy.t_rx_s);
    r.get("energy.t_i_s", cfg.scenario.energy.t_i_s);
    r.get("energy.t_s_s", cfg.scenario.energy.t_s_s);
    r.get("energy.n_rep", cfg.scenario.energy.n_rep);
    r.get("energy.battery_wh", cfg.scenario.energy.battery_wh);

    r.get("geometry.r_m", cfg.scenario.geometry.R_m);
    r.get("geometry.h_m", cfg.scenario.geometry.h_m);

    if (r.has("los.gamma1_m") || r.has("los.gamma2_m") || r.has("los.altitude_offset_m")) {
        r.require("los.gamma1_m");
        r.require("los.gamma2_m");
        LosModelParams los;
        r.get("los.gamma1_m", los.gamma1_m);
        r.get("los.gamma2_m", los.gamma2_m);
        r.get("los.altitude_offset_m", los.altitude_offset_m);
        cfg.scenario.los = los;
    }

    r.require("sweep.axis");
    r.require("sweep.grid");
    r.require("sweep.strategies");
    r.require("sweep.outputs");

    cfg.sweep.axis = parse_axis(r.take("sweep.axis")->text, r.line_of("sweep.axis"));

    {
        const int line = r.line_of("sweep.grid");
        for (const auto& item : r.split_list("sweep.grid")) {
            try {
                size_t pos = 0;
                cfg.sweep.grid.push_back(std::stod(item, &pos));
                if (pos != item.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ConfigError("sweep.grid", line, "expected a number, got '" + item + "'");
            }
        }
        check_grid_values(cfg.sweep.axis, cfg.sweep.grid, line);
    }

    {
        const int line = r.line_of("sweep.strategies");
        for (const auto& item : r.split_list("sweep.strategies")) {
            try {
                cfg.sweep.strategies.push_back(parse_strategy(item));
            } catch (const std::exception& e) {
                throw ConfigError("sweep.strategies", line, e.what());
            }
        }
    }

    {
        const int line = r.line_of("sweep.outputs");
        std::set<std::string> seen;
        for (const auto& item : r.split_list("sweep.outputs")) {
            if (item != "power" && item != "lifetime" && item != "coverage")
                throw ConfigError("sweep.outputs", line,
                                  "expected power, lifetime or coverage, got '" + item + "'");
            seen.insert(item);
        }
        // canonical order, independent of how the user listed them
        if (seen.count("power")) cfg.sweep.outputs.push_back(Metric::kPower);
        if (seen.count("lifetime")) cfg.sweep.outputs.push_back(Metric::kLifetime);
        if (seen.count("coverage")) cfg.sweep.outputs.push_back(Metric::kCoverage);
    }

    if (const auto* rv = r.take("sweep.mode"))
        cfg.sweep.mode = parse_mode(rv->text, rv->line);

    r.get("sim.n_realizations", cfg.sim.n_realizations);
    r.get("sim.devices_per_realization", cfg.sim.devices_per_realization);
    r.get("sim.seed", cfg.sim.seed);
    r.get("sim.window_margin_sigma", cfg.sim.window_margin_sigma);
    r.get("sim.sample_dump", cfg.sample_dump_path);

    try {
        cfg.scenario.validate();
        cfg.sweep.validate();
        cfg.sim.validate();
    } catch (const std::domain_error& e) {
        // Invariant messages start with the config key they concern; attach
        // the source line when that key was set explicitly.
        const std::string what = e.what();
        const auto space = what.find(' ');
        std::string key = space == std::string::npos ? "" : what.substr(0, space);
        if (!known_keys().count(key)) key.clear();
        throw ConfigError(key, key.empty() ? 0 : r.line_of(key), what);
    }
    return cfg;
}

std::string dump_effective(const LoadedConfig& cfg) {
    std::ostringstream out;
    const auto& sc = cfg.scenario;
    auto kv = [&out](const std::string& key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    auto kvd = [&](const std::string& key, double v) { kv(key, fmt_shortest(v)); };

    kvd("channel.l_o_db", sc.channel.l_o_db);
    kvd("channel.alpha_g", sc.channel.alpha_g);
    kvd("channel.alpha_air", sc.channel.alpha_air);
    kvd("channel.penetration_loss_db", sc.channel.penetration_loss_db);
    kvd("power.p_o_dbm", sc.power.p_o_dbm);
    kvd("power.p_max_dbm", sc.power.p_max_dbm);
    kvd("power.epsilon", sc.power.epsilon);
    kv("power.open_loop_convention",
       sc.power.open_loop_convention == OpenLoopConvention::kEq10Full
           ? "eq10_full"
           : "standard_fractional");
    kvd("budget.n0_dbm_hz", sc.budget.n0_dbm_hz);
    kvd("budget.nf_db", sc.budget.nf_db);
    kvd("budget.bandwidth_hz", sc.budget.bandwidth_hz);
    kvd("budget.tau_db", sc.budget.tau_db);
    kvd("budget.gain_db", sc.budget.gain_db);
    kvd("budget.mcl_target_db", sc.budget.mcl_target_db);
    kvd("energy.p_cp_w", sc.energy.p_cp_w);
    kvd("energy.eta", sc.energy.eta);
    kvd("energy.p_rx_w", sc.energy.p_rx_w);
    kvd("energy.p_i_w", sc.energy.p_i_w);
    kvd("energy.p_s_w", sc.energy.p_s_w);
    kvd("energy.t_tx_s", sc.energy.t_tx_s);
    kvd("energy.t_rx_s", sc.energy.t_rx_s);
    kvd("energy.t_i_s", sc.energy.t_i_s);
    kvd("energy.t_s_s", sc.energy.t_s_s);
    kv("energy.n_rep", std::to_string(sc.energy.n_rep));
    kvd("energy.battery_wh", sc.energy.battery_wh);
    kvd("geometry.r_m", sc.geometry.R_m);
    kvd("geometry.h_m", sc.geometry.h_m);
    if (sc.los) {
        kvd("los.gamma1_m", sc.los->gamma1_m);
        kvd("los.gamma2_m", sc.los->gamma2_m);
        kvd("los.altitude_offset_m", sc.los->altitude_offset_m);
    }

    kv("sweep.axis", axis_name(cfg.sweep.axis));
    {
        std::string grid;
        for (size_t i = 0; i < cfg.sweep.grid.size(); ++i) {
            if (i) grid += ", ";
            grid += fmt_shortest(cfg.sweep.grid[i]);
        }
        kv("sweep.grid", grid);
    }
    {
        std::string strategies;
        for (size_t i = 0; i < cfg.sweep.strategies.size(); ++i) {
            if (i) strategies += ", ";
            strategies += strategy_spec_string(cfg.sweep.strategies[i]);
        }
        kv("sweep.strategies", strategies);
    }
    {
        std::string outputs;
        for (size_t i = 0; i < cfg.sweep.outputs.size(); ++i) {
            if (i) outputs += ", ";
            outputs += metric_name(cfg.sweep.outputs[i]);
        }
        kv("sweep.outputs", outputs);
    }
    kv("sweep.mode", mode_name(cfg.sweep.mode));

    kv("sim.n_realizations", std::to_string(cfg.sim.n_realizations));
    kv("sim.devices_per_realization", std::to_string(cfg.sim.devices_per_realization));
    kv("sim.seed", std::to_string(cfg.sim.seed));
    kvd("sim.window_margin_sigma", cfg.sim.window_margin_sigma);
    if (!cfg.sample_dump_path.empty()) kv("sim.sample_dump", cfg.sample_dump_path);
    return out.str();
}

std::vector<std::string> preset_names() {
    return {"table1", "fig3a", "fig3b", "fig4a", "fig4b"};
}

LoadedConfig preset(const std::string& name) {
    LoadedConfig cfg;  // struct defaults are the baseline evaluation settings

    const std::vector<DeploymentStrategy> all_six = {
        RandomPpp{5e-6},       RandomPpp{25e-6},       ClusterInterior{1},
        ClusterInterior{5},    CentroidTerrestrial{},  CentroidAerial{100.0},
    };
    std::vector<double> radius_grid;
    for (int r = 50; r <= 500; r += 50) radius_grid.push_back(r);

    cfg.sweep.strategies = all_six;
    cfg.sweep.mode = RunMode::kBoth;

    if (name == "table1") {
        cfg.sweep.axis = SweepAxis::kPcfEpsilon;
        cfg.sweep.grid = {0.4};
        cfg.sweep.outputs = {Metric::kPower, Metric::kLifetime, Metric::kCoverage};
    } else if (name == "fig3a") {
        cfg.sweep.axis = SweepAxis::kPcfEpsilon;
        for (int i = 0; i <= 10; ++i) cfg.sweep.grid.push_back(i / 10.0);
        cfg.sweep.outputs = {Metric::kPower, Metric::kLifetime};
    } else if (name == "fig3b") {
        cfg.sweep.axis = SweepAxis::kClusterRadius;
        cfg.sweep.grid = radius_grid;
        cfg.sweep.outputs = {Metric::kPower, Metric::kLifetime};
    } else if (name == "fig4a") {
        cfg.sweep.axis = SweepAxis::kPenetrationDb;
        for (int p = 0; p <= 80; p += 10) cfg.sweep.grid.push_back(p);
        cfg.sweep.outputs = {Metric::kCoverage};
    } else if (name == "fig4b") {
        cfg.sweep.axis = SweepAxis::kClusterRadius;
        cfg.sweep.grid = radius_grid;
        cfg.scenario.channel.penetration_loss_db = 25.0;
        cfg.sweep.outputs = {Metric::kCoverage};
    } else {
        throw ConfigError("unknown preset '" + name +
                          "' (available: table1, fig3a, fig3b, fig4a, fig4b)");
    }
    return cfg;
}

}  // namespace aggsim
