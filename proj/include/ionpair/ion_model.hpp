/**
 * Physical layer for one trapped-ion pair.
 *
 * Two ions driven by a bichromatic field realize a logical qubit in the
 * degenerate subspace |0> = |eg>, |1> = |ge>. The two-photon coupling gives
 * an effective Rabi frequency
 *
 *     Omega_eff = -(Omega * eta)^2 / (nu - delta)
 *
 * and a pulse of duration T rotates the logical pair by theta = Omega_eff*T/2.
 * Both logical states share total energy omega_eg, so free evolution acts as
 * a global phase on the code space. The vibrational quantum number never
 * appears here: the two-photon path is independent of it, which is the whole
 * reason the scheme works for hot ions. Leakage out of the code space is not
 * dynamically modeled; PairState carries leakage bookkeeping instead.
 */

#ifndef IONPAIR_ION_MODEL_HPP
#define IONPAIR_ION_MODEL_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ionpair/linalg.hpp"

namespace ionpair {

/// Trap and laser parameters. Units: angular frequencies share one scale,
/// times are its inverse; eta is dimensionless.
struct PhysicalParams {
    double eta = 0.1;        // Lamb-Dicke parameter
    double omega = 0.05;     // Rabi frequency Omega
    double nu = 1.0;         // trap frequency
    double delta = 0.9;      // detuning of the bichromatic tones
    double omega_eg = 100.0; // internal |g>-|e> transition frequency
};

struct RegimeReport {
    bool lamb_dicke_ok = false;       // eta <= 0.1
    bool weak_excitation_ok = false;  // Omega < nu
    bool off_resonance_ok = false;    // nu - delta >= 10 * eta * Omega
    double effective_rabi = 0.0;
};

/// -(Omega*eta)^2 / (nu - delta); negative whenever nu > delta.
inline double effective_rabi(const PhysicalParams& p) {
    if (p.nu == p.delta) {
        throw std::domain_error(
            "effective_rabi: nu == delta (resonant with the trap sideband); "
            "the off-resonance regime nu - delta >> eta*Omega is violated");
    }
    const double g = p.omega * p.eta;
    return -(g * g) / (p.nu - p.delta);
}

/// Reports, never throws; callers decide what to do with failed flags.
/// "Much less/greater" thresholds are one order of magnitude.
inline RegimeReport check_regime(const PhysicalParams& p) {
    RegimeReport r;
    r.lamb_dicke_ok = p.eta <= 0.1;
    r.weak_excitation_ok = p.omega < p.nu;
    r.off_resonance_ok = (p.nu - p.delta) >= 10.0 * p.eta * p.omega;
    const double g = p.omega * p.eta;
    r.effective_rabi = -(g * g) / (p.nu - p.delta);  // +-inf at nu == delta
    return r;
}

/// A calibrated pulse: the realized angle Omega_eff*T/2 equals theta mod 2pi.
struct PulseSpec {
    double theta = 0.0;     // requested rotation angle
    double duration = 0.0;  // T > 0
    PhysicalParams params;

    double realized_angle() const { return effective_rabi(params) * duration / 2.0; }
};

/// Smallest strictly positive T with Omega_eff*T/2 = theta (mod 2pi).
/// theta = 0 maps to a full 2pi period, never to T = 0, so every gate in a
/// schedule has a physical pulse.
inline PulseSpec calibrate_pulse(double theta, const PhysicalParams& p) {
    if (!std::isfinite(theta)) throw std::invalid_argument("calibrate_pulse: theta must be finite");
    const RegimeReport regime = check_regime(p);
    if (!regime.weak_excitation_ok) {
        throw std::domain_error("calibrate_pulse: weak excitation regime violated (Omega >= nu)");
    }
    const double rabi = effective_rabi(p);  // throws at nu == delta
    constexpr double two_pi = 2.0 * std::numbers::pi;
    // Reduce to [0, 2pi); pick the sign-matched residue so T > 0.
    double residue = std::fmod(theta, two_pi);
    if (rabi < 0.0) {
        // theta = rabi*T/2 with rabi < 0: need the residue in (-2pi, 0].
        if (residue > 0.0) residue -= two_pi;
        if (residue == 0.0) residue = -two_pi;
    } else {
        if (residue < 0.0) residue += two_pi;
        if (residue == 0.0) residue = two_pi;
    }
    PulseSpec spec;
    spec.theta = theta;
    spec.duration = 2.0 * residue / rabi;
    spec.params = p;
    return spec;
}

/// [[cos t, -i sin t], [-i sin t, cos t]] in the logical (|0>,|1>) basis.
inline GateMatrix pair_rotation(double theta) {
    GateMatrix g{"U(" + std::to_string(theta) + ")", 2};
    const Complex c{std::cos(theta), 0.0};
    const Complex ms{0.0, -std::sin(theta)};
    g.at(0, 0) = c; g.at(0, 1) = ms;
    g.at(1, 0) = ms; g.at(1, 1) = c;
    return g;
}

// Physical basis indices of one pair.
inline constexpr std::size_t kGG = 0;
inline constexpr std::size_t kGE = 1;  // logical |1>
inline constexpr std::size_t kEG = 2;  // logical |0>
inline constexpr std::size_t kEE = 3;

inline const std::array<std::string, 4> kPairLabels = {"|gg>", "|ge>", "|eg>", "|ee>"};

/// Four-level internal state of one ion pair, (|gg>,|ge>,|eg>,|ee>).
struct PairState {
    std::array<Complex, 4> amplitudes{};

    /// Population inside the code space {|ge>, |eg>}.
    double logical_population() const {
        return std::norm(amplitudes[kGE]) + std::norm(amplitudes[kEG]);
    }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return s;
    }
};

/// Free evolution for time tau: each physical basis state picks up e^{-iE tau}
/// with E(gg)=0, E(ge)=E(eg)=omega_eg, E(ee)=2*omega_eg (gauge E(|g>)=0,
/// hbar=1). A pure phase map; amplitudes keep their magnitudes.
inline PairState free_evolution(const PairState& state, double tau, const PhysicalParams& p) {
    if (tau < 0.0) throw std::invalid_argument("free_evolution: tau must be >= 0");
    const Complex one_phase = std::polar(1.0, -p.omega_eg * tau);
    PairState out;
    out.amplitudes[kGG] = state.amplitudes[kGG];
    out.amplitudes[kGE] = one_phase * state.amplitudes[kGE];
    out.amplitudes[kEG] = one_phase * state.amplitudes[kEG];
    out.amplitudes[kEE] = std::polar(1.0, -2.0 * p.omega_eg * tau) * state.amplitudes[kEE];
    return out;
}

/// |0> -> |eg>, |1> -> |ge>; zero leakage by construction.
inline PairState encode(const StateVector& logical) {
    if (logical.dim() != 2) throw std::invalid_argument("encode: logical state must have dim 2");
    if (std::abs(logical.norm_sq() - 1.0) > kPipelineTol) {
        throw std::invalid_argument("encode: logical state must be normalized");
    }
    PairState ps;
    ps.amplitudes[kEG] = logical.amplitudes[0];
    ps.amplitudes[kGE] = logical.amplitudes[1];
    return ps;
}

struct DecodeResult {
    StateVector logical;  // renormalized projection onto the code space
    double leakage;       // 1 - p_L before renormalization
};

/// Projects onto the code space and renormalizes. A state entirely outside
/// the code space cannot be decoded.
inline DecodeResult decode(const PairState& ps) {
    const double p_logical = ps.logical_population();
    if (p_logical < 1e-12) {
        throw std::domain_error("decode: state lies entirely outside the logical code space");
    }
    const double scale = 1.0 / std::sqrt(p_logical);
    StateVector logical{{ps.amplitudes[kEG] * scale, ps.amplitudes[kGE] * scale},
                        computational_labels(2)};
    return DecodeResult{std::move(logical), 1.0 - p_logical};
}

}  // namespace ionpair

#endif  // IONPAIR_ION_MODEL_HPP
