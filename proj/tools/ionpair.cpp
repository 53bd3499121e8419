/**
 * ionpair — batch front door for the pair-encoded trapped-ion simulator.
 *
 *   ionpair grover --marked 11 [--level physical] [--encoding bare] ...
 *   ionpair bench delay|dephasing|oracle ...
 *   ionpair gates dump W | gates verify
 *   ionpair validate --config run.json
 *
 * Exit status: 0 = run completed, 2 = config/usage error, 3 = internal
 * invariant violation (e.g. a catalog gate failing unitarity).
 */

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ionpair/bench.hpp"
#include "ionpair/config.hpp"
#include "ionpair/gates.hpp"
#include "ionpair/grover.hpp"
#include "ionpair/serialize.hpp"
#include "ionpair/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

/// Write-temp-then-rename so consumers never see a partial file.
void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ionpair::ConfigError("cannot open '" + tmp + "' for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void print_warnings(const ionpair::PhysicalParams& params) {
    for (const auto& w : ionpair::regime_warnings(params)) {
        std::cerr << "warning: " << w << "\n";
    }
}

ionpair::RunConfig base_config(const std::string& config_path) {
    if (!config_path.empty()) return ionpair::load_config(config_path);
    if (const char* env = std::getenv("IONPAIR_CONFIG"); env != nullptr && *env != '\0') {
        return ionpair::load_config(env);
    }
    return ionpair::RunConfig{};
}

void emit_report(const ionpair::BenchReport& report, const std::string& csv_path,
                 const std::string& json_path) {
    const std::string csv = ionpair::report_csv(report);
    if (!csv_path.empty()) write_atomic(csv_path, csv);
    if (!json_path.empty()) write_atomic(json_path, ionpair::report_json(report).dump(2) + "\n");
    if (csv_path.empty() && json_path.empty()) std::cout << csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Pair-encoded trapped-ion Grover simulator and robustness benchmarks.\n"
        "Default physics (illustrative, not from any measurement): eta=0.1,\n"
        "omega=0.05, nu=1, delta=0.9, omega_eg=100, all in trap-frequency units."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config file (or a report with an embedded config); "
                   "IONPAIR_CONFIG sets the default path");

    // --- grover ---------------------------------------------------------
    auto* grover = app.add_subcommand("grover", "Run one Grover search and dump the trace");
    std::string marked = "11";
    std::string level = "logical";
    std::string encoding = "pair";
    std::string oracle_mode = "unitary";
    std::string delay_prep, delay_oracle;
    std::string trace_out;
    std::optional<std::uint64_t> grover_seed;
    grover->add_option("--marked", marked, "marked state: 00, 01, 10 or 11")->capture_default_str();
    grover->add_option("--level", level, "logical | physical")->capture_default_str();
    grover->add_option("--encoding", encoding, "pair | bare")->capture_default_str();
    grover->add_option("--oracle-mode", oracle_mode, "unitary | measured")->capture_default_str();
    grover->add_option("--delay-after-prep", delay_prep,
                       "delay after the superposition prep, e.g. 1.5 or 0.25period");
    grover->add_option("--delay-after-oracle", delay_oracle, "delay after the oracle");
    grover->add_option("--seed", grover_seed, "seed (required for --oracle-mode measured)");
    grover->add_option("--out", trace_out, "trace JSON output path");

    // --- bench ----------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Robustness sweeps with CSV/JSON reports");
    bench->require_subcommand(1);
    bench->fallthrough();
    std::string out_csv, out_json;
    long trials = -1;
    std::optional<std::uint64_t> bench_seed;
    std::string bench_marked;
    bench->add_option("--out-csv", out_csv, "CSV report path (stdout if no outputs given)");
    bench->add_option("--out-json", out_json, "JSON report path");
    bench->add_option("--trials", trials, "Monte Carlo trials per grid point");
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--marked", bench_marked, "marked state for Grover-based sweeps");

    auto* bench_delay = bench->add_subcommand("delay", "Grover success vs inter-operation delay");
    std::string delay_encoding;
    long delay_points = 0;
    std::string delay_taus;
    bench_delay->add_option("--encoding", delay_encoding, "pair | bare");
    bench_delay->add_option("--grid", delay_points, "point count over one bare period");
    bench_delay->add_option("--taus", delay_taus, "explicit tau grid, lo:hi:count or comma list");

    auto* bench_deph = bench->add_subcommand("dephasing", "decoded fidelity vs phase noise sigma");
    std::string deph_kind;
    std::string sigma_grid;
    bench_deph->add_option("--kind", deph_kind, "collective | independent");
    bench_deph->add_option("--sigma-grid", sigma_grid, "sigma grid, lo:hi:count or comma list");

    auto* bench_oracle =
        bench->add_subcommand("oracle", "unitary oracle vs measured-control substitution");

    // --- gates ----------------------------------------------------------
    auto* gates = app.add_subcommand("gates", "Inspect and verify the gate catalog");
    gates->require_subcommand(1);
    auto* gates_dump = gates->add_subcommand("dump", "print one gate, symbolic + JSON");
    std::string gate_name;
    double theta = 0.0;
    gates_dump->add_option("name", gate_name, "W, V, M1..M4, P1..P4, D, or U (with --theta)")
        ->required();
    gates_dump->add_option("--theta", theta, "rotation angle for U");
    auto* gates_verify = gates->add_subcommand("verify", "run the full identity ledger");

    // --- validate -------------------------------------------------------
    auto* validate = app.add_subcommand("validate", "validate a config file and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        ionpair::RunConfig cfg = base_config(config_path);

        if (*grover) {
            if (grover->count("--marked")) cfg.marked = marked;
            if (grover->count("--level")) cfg.level = level;
            if (grover->count("--encoding")) cfg.encoding = encoding;
            if (grover->count("--oracle-mode")) cfg.oracle_mode = oracle_mode;
            print_warnings(cfg.params);

            ionpair::GroverConfig run;
            run.marked = cfg.marked;
            run.params = cfg.params;
            if (cfg.level == "physical") run.level = ionpair::Level::physical;
            else if (cfg.level != "logical") throw ionpair::ConfigError("bad --level '" + cfg.level + "'");
            if (cfg.oracle_mode == "measured") run.oracle_mode = ionpair::OracleMode::measured;
            else if (cfg.oracle_mode != "unitary")
                throw ionpair::ConfigError("bad --oracle-mode '" + cfg.oracle_mode + "'");
            if (grover_seed) run.seed = *grover_seed;
            else if (!config_path.empty()) run.seed = cfg.seed;
            if (!delay_prep.empty()) cfg.delay_after_prep = ionpair::parse_delay(delay_prep, cfg.params);
            if (!delay_oracle.empty())
                cfg.delay_after_oracle = ionpair::parse_delay(delay_oracle, cfg.params);
            if (cfg.delay_after_prep > 0.0)
                run.delays.push_back({ionpair::DelayPosition::after_prep, cfg.delay_after_prep});
            if (cfg.delay_after_oracle > 0.0)
                run.delays.push_back({ionpair::DelayPosition::after_oracle, cfg.delay_after_oracle});

            ionpair::GroverTrace trace;
            if (cfg.encoding == "bare") trace = ionpair::run_grover_bare(run);
            else if (cfg.encoding == "pair") trace = ionpair::run_grover(run);
            else throw ionpair::ConfigError("bad --encoding '" + cfg.encoding + "'");

            std::printf("success=%.6f\n", trace.success_probability);
            if (!trace_out.empty()) {
                cfg.experiment = "grover";
                nlohmann::json doc = ionpair::trace_to_json(trace);
                doc["config"] = ionpair::config_to_json(cfg);
                write_atomic(trace_out, doc.dump(2) + "\n");
            }
            return kExitOk;
        }

        if (*bench) {
            if (bench->count("--trials")) cfg.trials = trials;
            if (bench_seed) cfg.seed = *bench_seed;
            if (!bench_marked.empty()) cfg.marked = bench_marked;
            print_warnings(cfg.params);

            ionpair::BenchReport report;
            if (*bench_delay) {
                cfg.experiment = "delay";
                if (!delay_encoding.empty()) cfg.encoding = delay_encoding;
                if (!delay_taus.empty()) cfg.grid = ionpair::parse_grid(delay_taus);
                if (bench_delay->count("--grid")) {
                    if (delay_points < 1) throw ionpair::ConfigError("--grid must be >= 1");
                    const double period = 2.0 * std::numbers::pi / cfg.params.omega_eg;
                    cfg.grid.clear();
                    for (long i = 0; i < delay_points; ++i) {
                        cfg.grid.push_back(period * static_cast<double>(i) /
                                           static_cast<double>(delay_points));
                    }
                }
                if (cfg.grid.empty()) throw ionpair::ConfigError("delay sweep needs --grid or --taus");
                ionpair::Encoding enc;
                if (cfg.encoding == "pair") enc = ionpair::Encoding::pair;
                else if (cfg.encoding == "bare") enc = ionpair::Encoding::bare;
                else throw ionpair::ConfigError("bad --encoding '" + cfg.encoding + "'");
                report = ionpair::sweep_delay(cfg.grid, enc, cfg.marked, cfg.seed, cfg.params);
            } else if (*bench_deph) {
                cfg.experiment = "dephasing";
                if (!deph_kind.empty()) cfg.kind = deph_kind;
                if (!sigma_grid.empty()) cfg.grid = ionpair::parse_grid(sigma_grid);
                if (cfg.grid.empty()) throw ionpair::ConfigError("dephasing sweep needs --sigma-grid");
                ionpair::NoiseKind kind;
                if (cfg.kind == "collective") kind = ionpair::NoiseKind::collective_dephasing;
                else if (cfg.kind == "independent") kind = ionpair::NoiseKind::independent_dephasing;
                else throw ionpair::ConfigError("bad --kind '" + cfg.kind + "'");
                report = ionpair::sweep_dephasing(cfg.grid, kind, cfg.trials, cfg.seed);
            } else if (*bench_oracle) {
                cfg.experiment = "oracle";
                report = ionpair::compare_oracle_modes(cfg.marked, cfg.trials, cfg.seed);
            }
            report.config = ionpair::config_to_json(cfg);
            emit_report(report, out_csv, out_json);
            return kExitOk;
        }

        if (*gates) {
            if (*gates_dump) {
                ionpair::GateMatrix g;
                if (gate_name == "U") {
                    g = ionpair::gate_u(theta);
                    g.name = "U";
                } else {
                    ionpair::GateCatalog catalog;
                    if (!catalog.contains(gate_name))
                        throw ionpair::ConfigError("unknown gate '" + gate_name + "'");
                    if (gates_dump->count("--theta"))
                        throw ionpair::ConfigError("--theta only applies to gate U");
                    g = catalog.get(gate_name);
                }
                std::cout << ionpair::gate_to_text(g);
                std::cout << ionpair::gate_to_json(g).dump(2) << "\n";
            } else if (*gates_verify) {
                const auto ledger = ionpair::run_identity_ledger();
                std::size_t passed = 0;
                for (const auto& check : ledger) {
                    std::printf("%-55s %s (max diff %.3e)\n", check.name.c_str(),
                                check.pass ? "pass" : "FAIL", check.max_diff);
                    passed += check.pass ? 1 : 0;
                }
                std::printf("%zu/%zu identities pass\n", passed, ledger.size());
                if (passed != ledger.size()) return kExitInternal;
            }
            return kExitOk;
        }

        if (*validate) {
            if (config_path.empty() && std::getenv("IONPAIR_CONFIG") == nullptr) {
                throw ionpair::ConfigError("validate needs --config (or IONPAIR_CONFIG)");
            }
            std::cout << "config ok\n";
            for (const auto& w : ionpair::regime_warnings(cfg.params)) {
                std::cout << "warning: " << w << "\n";
            }
            return kExitOk;
        }
    } catch (const ionpair::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
