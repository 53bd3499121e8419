/**
 * Stochastic phase noise on one ion pair.
 *
 * Collective dephasing draws one random phase per pair and applies it to
 * every |e> occurrence; since both code states |ge> and |eg> hold exactly one
 * excited ion, the code space sees only a global phase. Independent
 * dephasing draws a phase per ion and does damage the code space.
 */

#ifndef IONPAIR_NOISE_HPP
#define IONPAIR_NOISE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "ionpair/ion_model.hpp"
#include "ionpair/rng.hpp"

namespace ionpair {

enum class NoiseKind { collective_dephasing, independent_dephasing, delay_drift };
enum class NoiseDistribution { gaussian, fixed };

struct NoiseChannel {
    NoiseKind kind = NoiseKind::collective_dephasing;
    double sigma = 0.0;  // phase std-dev (gaussian) or the fixed phase itself
    double tau = 0.0;    // delay, for the drift kind
    NoiseDistribution distribution = NoiseDistribution::gaussian;
};

namespace detail {
inline double draw_phase(const NoiseChannel& ch, std::mt19937_64& engine) {
    if (ch.distribution == NoiseDistribution::fixed) return ch.sigma;
    std::normal_distribution<double> gauss(0.0, ch.sigma);
    return gauss(engine);
}
}  // namespace detail

/// One shot of the dephasing channel.
inline PairState apply_dephasing(const PairState& state, const NoiseChannel& ch,
                                 std::mt19937_64& engine) {
    if (ch.kind == NoiseKind::delay_drift) {
        throw std::invalid_argument("apply_dephasing: channel kind must be a dephasing kind");
    }
    if (ch.sigma < 0.0) throw std::invalid_argument("apply_dephasing: sigma must be >= 0");

    PairState out = state;
    if (ch.kind == NoiseKind::collective_dephasing) {
        const double phi = detail::draw_phase(ch, engine);
        const Complex ph = std::polar(1.0, -phi);
        out.amplitudes[kGE] *= ph;
        out.amplitudes[kEG] *= ph;
        out.amplitudes[kEE] *= std::polar(1.0, -2.0 * phi);
    } else {
        const double phi1 = detail::draw_phase(ch, engine);  // ion 1
        const double phi2 = detail::draw_phase(ch, engine);  // ion 2
        out.amplitudes[kGE] *= std::polar(1.0, -phi2);       // |ge>: ion 2 excited
        out.amplitudes[kEG] *= std::polar(1.0, -phi1);       // |eg>: ion 1 excited
        out.amplitudes[kEE] *= std::polar(1.0, -(phi1 + phi2));
    }
    return out;
}

inline PairState apply_dephasing(const PairState& state, const NoiseChannel& ch,
                                 std::uint64_t seed) {
    std::mt19937_64 engine = make_engine(seed);
    return apply_dephasing(state, ch, engine);
}

}  // namespace ionpair

#endif  // IONPAIR_NOISE_HPP
