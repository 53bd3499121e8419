/**
 * Monte Carlo and sweep experiments for the robustness claims: delay-phase
 * sweeps (pair vs bare encoding) and collective vs independent dephasing.
 *
 * Determinism contract: trial k of grid point g draws from an engine seeded
 * by derive_seed(derive_seed(seed, g), k), and aggregation uses pairwise
 * summation, so results do not depend on trial execution order and identical
 * seeds give bit-identical reports.
 */

#ifndef IONPAIR_BENCH_HPP
#define IONPAIR_BENCH_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ionpair/grover.hpp"
#include "ionpair/noise.hpp"
#include "ionpair/rng.hpp"

namespace ionpair {

inline constexpr const char* kVersion = "ionpair 0.1.0";

enum class Encoding { pair, bare };

struct BenchPoint {
    double param = 0.0;
    double mean = 0.0;
    double stderr_mean = 0.0;
};

struct BenchReport {
    std::string experiment;
    std::vector<BenchPoint> points;
    long trials = 0;
    std::uint64_t seed = 0;
    nlohmann::json config;  // resolved configuration echo
};

namespace detail {

// Order-insensitive pairwise summation.
inline double pairwise_sum(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& xs) { return pairwise_sum(xs, 0, xs.size()); }

inline BenchPoint summarize(double param, const std::vector<double>& samples) {
    BenchPoint pt;
    pt.param = param;
    const double n = static_cast<double>(samples.size());
    pt.mean = pairwise_sum(samples) / n;
    if (samples.size() > 1) {
        std::vector<double> sq(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const double d = samples[i] - pt.mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq) / (n - 1.0);
        pt.stderr_mean = std::sqrt(var / n);
    }
    return pt;
}

}  // namespace detail

/// Grover success probability vs delay after the superposition prep.
/// Pair encoding runs at the physical level; bare is the contrast case.
inline BenchReport sweep_delay(const std::vector<double>& grid, Encoding encoding,
                               const std::string& marked, std::uint64_t seed,
                               const PhysicalParams& params = {}) {
    if (grid.empty()) throw std::invalid_argument("sweep_delay: grid must be non-empty");
    BenchReport report;
    report.experiment = "delay-sweep";
    report.trials = 1;  // delay response is deterministic
    report.seed = seed;
    for (double tau : grid) {
        if (tau < 0.0) throw std::invalid_argument("sweep_delay: tau must be >= 0");
        GroverConfig cfg;
        cfg.marked = marked;
        cfg.params = params;
        cfg.delays = {{DelayPosition::after_prep, tau}};
        cfg.level = Level::physical;
        const GroverTrace trace =
            encoding == Encoding::pair ? run_grover(cfg) : run_grover_bare(cfg);
        report.points.push_back({tau, trace.success_probability, 0.0});
    }
    return report;
}

/// Decoded fidelity of (|0>+|1>)/sqrt(2) after one shot of the channel,
/// averaged over trials, per sigma on the grid.
inline BenchReport sweep_dephasing(const std::vector<double>& sigma_grid, NoiseKind kind,
                                   long trials, std::uint64_t seed) {
    if (sigma_grid.empty()) throw std::invalid_argument("sweep_dephasing: grid must be non-empty");
    if (trials < 100) throw std::invalid_argument("sweep_dephasing: trials must be >= 100");
    if (kind == NoiseKind::delay_drift) {
        throw std::invalid_argument("sweep_dephasing: kind must be a dephasing kind");
    }

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const StateVector plus{{Complex{inv_sqrt2, 0.0}, Complex{inv_sqrt2, 0.0}},
                           computational_labels(2)};
    const PairState encoded = encode(plus);

    BenchReport report;
    report.experiment = kind == NoiseKind::collective_dephasing ? "dephasing-collective"
                                                                : "dephasing-independent";
    report.trials = trials;
    report.seed = seed;
    for (std::size_t g = 0; g < sigma_grid.size(); ++g) {
        const double sigma = sigma_grid[g];
        if (sigma < 0.0) throw std::invalid_argument("sweep_dephasing: sigma must be >= 0");
        NoiseChannel channel{kind, sigma, 0.0, NoiseDistribution::gaussian};
        const std::uint64_t point_seed = derive_seed(seed, g);
        std::vector<double> samples(static_cast<std::size_t>(trials));
        for (long k = 0; k < trials; ++k) {
            std::mt19937_64 engine = make_engine(derive_seed(point_seed, static_cast<std::uint64_t>(k)));
            const PairState noisy = apply_dephasing(encoded, channel, engine);
            samples[static_cast<std::size_t>(k)] = fidelity(decode(noisy).logical, plus);
        }
        report.points.push_back(detail::summarize(sigma, samples));
    }
    return report;
}

/// Grover success with the unitary oracle P_i vs the measurement-feedback
/// M_i substitution. Point 0 is the unitary mode, point 1 the measured mode.
inline BenchReport compare_oracle_modes(const std::string& marked, long trials,
                                        std::uint64_t seed) {
    if (trials < 100) throw std::invalid_argument("compare_oracle_modes: trials must be >= 100");

    BenchReport report;
    report.experiment = "oracle-modes";
    report.trials = trials;
    report.seed = seed;

    GroverConfig unitary_cfg;
    unitary_cfg.marked = marked;
    report.points.push_back({0.0, run_grover(unitary_cfg).success_probability, 0.0});

    std::vector<double> samples(static_cast<std::size_t>(trials));
    for (long k = 0; k < trials; ++k) {
        GroverConfig cfg;
        cfg.marked = marked;
        cfg.oracle_mode = OracleMode::measured;
        cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(k));
        samples[static_cast<std::size_t>(k)] = run_grover(cfg).success_probability;
    }
    report.points.push_back(detail::summarize(1.0, samples));
    return report;
}

/// CSV rows `param,mean,stderr,trials,seed`; 17 significant digits so every
/// double round-trips.
inline std::string report_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "param,mean,stderr,trials,seed\n";
    char buf[256];
    for (const auto& pt : report.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%ld,%llu\n", pt.param, pt.mean,
                      pt.stderr_mean, report.trials,
                      static_cast<unsigned long long>(report.seed));
        out << buf;
    }
    return out.str();
}

/// Full-metadata JSON: experiment id, version string, seed, config echo.
inline nlohmann::json report_json(const BenchReport& report) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : report.points) {
        points.push_back({{"param", pt.param}, {"mean", pt.mean}, {"stderr", pt.stderr_mean}});
    }
    return nlohmann::json{{"experiment", report.experiment},
                          {"version", kVersion},
                          {"trials", report.trials},
                          {"seed", report.seed},
                          {"config", report.config},
                          {"points", points}};
}

}  // namespace ionpair

#endif  // IONPAIR_BENCH_HPP
