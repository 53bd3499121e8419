/**
 * Run configuration: a single JSON file (or flags mapped onto the same keys)
 * describing physics parameters and one experiment. Unknown keys are
 * rejected; physics fields are validated through check_regime, with failed
 * soft flags surfaced as warnings rather than errors.
 *
 * Every emitted report embeds its resolved config under "config", and a
 * report file is itself accepted wherever a config file is, so any run can
 * be reproduced from its own output.
 */

#ifndef IONPAIR_CONFIG_HPP
#define IONPAIR_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ionpair/ion_model.hpp"

namespace ionpair {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    PhysicalParams params;
    std::string experiment;         // grover | delay | dephasing | oracle
    std::string marked = "|11>";
    std::string kind = "collective";     // dephasing: collective | independent
    std::string encoding = "pair";       // delay/grover: pair | bare
    std::string level = "logical";       // grover: logical | physical
    std::string oracle_mode = "unitary"; // grover: unitary | measured
    std::vector<double> grid;            // sigma grid or tau grid
    double delay_after_prep = 0.0;
    double delay_after_oracle = 0.0;
    long trials = 1000;
    std::uint64_t seed = 0;
};

/// "a:b:n" -> n equally spaced points from a to b inclusive; "x,y,z" -> the
/// listed values; a single number -> one point.
inline std::vector<double> parse_grid(const std::string& spec) {
    if (spec.empty()) throw ConfigError("grid spec is empty");
    if (spec.find(':') != std::string::npos) {
        double lo = 0.0, hi = 0.0;
        long n = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(spec);
        if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1) {
            throw ConfigError("bad grid spec '" + spec + "': want lo:hi:count");
        }
        std::vector<double> grid(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            grid[static_cast<std::size_t>(i)] =
                n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        }
        return grid;
    }
    std::vector<double> grid;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            grid.push_back(std::stod(token, &pos));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ConfigError("bad grid value '" + token + "' in spec '" + spec + "'");
        }
    }
    if (grid.empty()) throw ConfigError("grid spec '" + spec + "' has no values");
    return grid;
}

/// A delay value, optionally in units of the bare period 2pi/omega_eg,
/// e.g. "0.25period".
inline double parse_delay(const std::string& text, const PhysicalParams& params) {
    const std::string suffix = "period";
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad delay '" + text + "'");
    }
    if (pos == text.size()) return value;
    if (text.substr(pos) == suffix) return value * 2.0 * std::numbers::pi / params.omega_eg;
    throw ConfigError("bad delay '" + text + "': trailing '" + text.substr(pos) + "'");
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    return nlohmann::json{{"experiment", cfg.experiment},
                          {"marked", cfg.marked},
                          {"kind", cfg.kind},
                          {"encoding", cfg.encoding},
                          {"level", cfg.level},
                          {"oracle_mode", cfg.oracle_mode},
                          {"grid", cfg.grid},
                          {"delay_after_prep", cfg.delay_after_prep},
                          {"delay_after_oracle", cfg.delay_after_oracle},
                          {"trials", cfg.trials},
                          {"seed", cfg.seed},
                          {"eta", cfg.params.eta},
                          {"omega", cfg.params.omega},
                          {"nu", cfg.params.nu},
                          {"delta", cfg.params.delta},
                          {"omega_eg", cfg.params.omega_eg}};
}

/// Parses a config object, collecting every violated constraint before
/// failing so the user sees the full list at once.
inline RunConfig config_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known = {
        "experiment", "marked", "kind", "encoding", "level", "oracle_mode", "grid",
        "delay_after_prep", "delay_after_oracle", "trials", "seed",
        "eta", "omega", "nu", "delta", "omega_eg"};
    std::vector<std::string> errors;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (known.find(key) == known.end()) errors.push_back("unknown key '" + key + "'");
    }

    RunConfig cfg;
    auto get_double = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number()) { errors.push_back(std::string(key) + " must be a number"); return; }
        out = j[key].get<double>();
    };
    auto get_string = [&](const char* key, std::string& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_string()) { errors.push_back(std::string(key) + " must be a string"); return; }
        out = j[key].get<std::string>();
    };
    get_double("eta", cfg.params.eta);
    get_double("omega", cfg.params.omega);
    get_double("nu", cfg.params.nu);
    get_double("delta", cfg.params.delta);
    get_double("omega_eg", cfg.params.omega_eg);
    get_string("experiment", cfg.experiment);
    get_string("marked", cfg.marked);
    get_string("kind", cfg.kind);
    get_string("encoding", cfg.encoding);
    get_string("level", cfg.level);
    get_string("oracle_mode", cfg.oracle_mode);
    get_double("delay_after_prep", cfg.delay_after_prep);
    get_double("delay_after_oracle", cfg.delay_after_oracle);
    if (j.contains("trials")) {
        if (!j["trials"].is_number_integer()) errors.push_back("trials must be an integer");
        else cfg.trials = j["trials"].get<long>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            errors.push_back("seed must be an integer");
        else cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("grid")) {
        if (j["grid"].is_array()) {
            for (const auto& v : j["grid"]) {
                if (!v.is_number()) { errors.push_back("grid entries must be numbers"); break; }
                cfg.grid.push_back(v.get<double>());
            }
        } else if (j["grid"].is_string()) {
            try {
                cfg.grid = parse_grid(j["grid"].get<std::string>());
            } catch (const ConfigError& e) {
                errors.push_back(e.what());
            }
        } else {
            errors.push_back("grid must be an array or a spec string");
        }
    }

    if (cfg.params.eta <= 0.0) errors.push_back("eta must be > 0");
    if (cfg.params.omega <= 0.0) errors.push_back("omega must be > 0");
    if (cfg.params.nu <= 0.0) errors.push_back("nu must be > 0");
    if (cfg.params.omega_eg <= 0.0) errors.push_back("omega_eg must be > 0");
    if (cfg.trials < 1) errors.push_back("trials must be >= 1");
    if (cfg.delay_after_prep < 0.0) errors.push_back("delay_after_prep must be >= 0");
    if (cfg.delay_after_oracle < 0.0) errors.push_back("delay_after_oracle must be >= 0");

    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw ConfigError(msg);
    }
    return cfg;
}

/// Loads a config file; a report file (recognized by its embedded "config"
/// object) is unwrapped so reports are replayable as-is.
inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse '" + path + "': " + e.what());
    }
    if (j.is_object() && j.contains("config") && j["config"].is_object()) {
        return config_from_json(j["config"]);
    }
    return config_from_json(j);
}

/// Human-readable regime warnings for a parameter set; empty when all pass.
inline std::vector<std::string> regime_warnings(const PhysicalParams& p) {
    std::vector<std::string> warnings;
    const RegimeReport r = check_regime(p);
    if (!r.lamb_dicke_ok) warnings.push_back("Lamb-Dicke limit violated: eta > 0.1");
    if (!r.weak_excitation_ok) warnings.push_back("weak excitation regime violated: omega >= nu");
    if (!r.off_resonance_ok)
        warnings.push_back("off-resonance condition violated: nu - delta < 10*eta*omega");
    return warnings;
}

}  // namespace ionpair

#endif  // IONPAIR_CONFIG_HPP
