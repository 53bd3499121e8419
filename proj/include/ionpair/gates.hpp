/**
 * The named gate set on one and two ion-pair qubits.
 *
 * Basis ordering is fixed globally as (|00>,|01>,|10>,|11>) with pair 1 as
 * the leftmost (slow) index and logical |0> = |eg>, |1> = |ge>.
 *
 * Every catalog matrix is built from its printed definition AND re-derived
 * from its compositional definition (W = U(7pi/4) (x) U(7pi/4),
 * P_i = V^-1 M_i V, D = W P_1 W); the two routes must agree at construction
 * time, so the algebra is a permanent regression check.
 */

#ifndef IONPAIR_GATES_HPP
#define IONPAIR_GATES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ionpair/ion_model.hpp"
#include "ionpair/linalg.hpp"
#include "ionpair/rng.hpp"

namespace ionpair {

namespace detail {
inline void require_identity(const GateMatrix& got, const GateMatrix& want,
                             const std::string& what) {
    if (max_abs_diff(got, want) > kExactTol) {
        throw std::logic_error("gate construction: " + what + " disagrees beyond 1e-12");
    }
}
}  // namespace detail

/// One-pair rotation U(theta); the workhorse single-qubit gate.
inline GateMatrix gate_u(double theta) { return pair_rotation(theta); }

/// W = U(7pi/4) on both pairs simultaneously; plays the role of a Hadamard
/// in the search even though it is not one.
inline GateMatrix gate_w() {
    const Complex h{0.5, 0.0};
    const Complex hi{0.0, 0.5};
    GateMatrix w{"W", 4,
                 {h,  hi, hi, -h,
                  hi, h,  -h, hi,
                  hi, -h, h,  hi,
                  -h, hi, hi, h}};
    const double seventh = 7.0 * std::numbers::pi / 4.0;
    GateMatrix derived = tensor(gate_u(seventh), gate_u(seventh));
    detail::require_identity(w, GateMatrix{"W", 4, derived.entries},
                             "W vs U(7pi/4)(x)U(7pi/4)");
    return w;
}

/// V = I (x) U(7pi/4): the rotation on the second pair only.
inline GateMatrix gate_v() {
    GateMatrix v = tensor(identity(2), gate_u(7.0 * std::numbers::pi / 4.0));
    v.name = "V";
    return v;
}

/// The conditional two-pair operations M_1..M_4 (controlled-NOT analogues).
inline GateMatrix gate_m(int i) {
    const Complex o{1.0, 0.0};
    const Complex z{0.0, 0.0};
    const Complex pi_{0.0, 1.0};
    const Complex mi{0.0, -1.0};
    switch (i) {
        case 1:
            return GateMatrix{"M1", 4, {o, z, z, z,  z, o, z, z,  z, z, z, mi,  z, z, pi_, z}};
        case 2:
            return GateMatrix{"M2", 4, {o, z, z, z,  z, o, z, z,  z, z, z, pi_,  z, z, mi, z}};
        case 3:
            return GateMatrix{"M3", 4, {z, mi, z, z,  pi_, z, z, z,  z, z, o, z,  z, z, z, o}};
        case 4:
            return GateMatrix{"M4", 4, {z, pi_, z, z,  mi, z, z, z,  z, z, o, z,  z, z, z, o}};
        default:
            throw std::invalid_argument("gate_m: index must be in 1..4, got " + std::to_string(i));
    }
}

/// Oracle P_i = V^-1 M_i V, realized with V^-1 = V^+ (V unitary).
/// P_i inverts the amplitude of exactly one computational basis state:
/// P1 <-> |11>, P2 <-> |10>, P3 <-> |01>, P4 <-> |00>.
inline GateMatrix gate_p(int i) {
    if (i < 1 || i > 4) {
        throw std::invalid_argument("gate_p: index must be in 1..4, got " + std::to_string(i));
    }
    const GateMatrix v = gate_v();
    GateMatrix p = mat_mul(mat_mul(dagger(v), gate_m(i)), v);
    p.name = "P" + std::to_string(i);
    GateMatrix printed = identity(4, p.name);
    printed.at(4 - i, 4 - i) = Complex{-1.0, 0.0};  // -1 sits on basis index 4-i
    detail::require_identity(p, printed, p.name + " vs printed diagonal");
    return printed;  // exact +-1 diagonal, free of round-off
}

/// Diffusion (inversion about average) D = W P_1 W.
inline GateMatrix gate_d() {
    GateMatrix d = mat_mul(mat_mul(gate_w(), gate_p(1)), gate_w());
    d.name = "D";
    const Complex h{0.5, 0.0};
    const Complex hi{0.0, 0.5};
    const GateMatrix printed{"D", 4,
                             {-h, hi,  hi,  -h,
                              hi, h,   -h,  -hi,
                              hi, -h,  h,   -hi,
                              -h, -hi, -hi, -h}};
    detail::require_identity(d, printed, "D = W*P1*W vs printed matrix");
    return d;
}

/// Immutable registry of every named gate; unitarity is checked on build.
class GateCatalog {
  public:
    GateCatalog() {
        add(gate_w());
        add(gate_v());
        for (int i = 1; i <= 4; ++i) add(gate_m(i));
        for (int i = 1; i <= 4; ++i) add(gate_p(i));
        add(gate_d());
    }

    const GateMatrix& get(const std::string& name) const {
        auto it = gates_.find(name);
        if (it == gates_.end()) throw std::invalid_argument("GateCatalog: unknown gate '" + name + "'");
        return it->second;
    }

    bool contains(const std::string& name) const { return gates_.count(name) > 0; }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : gates_) out.push_back(k);
        return out;
    }

  private:
    void add(GateMatrix g) {
        if (unitarity_defect(g) > kExactTol) {
            throw std::logic_error("GateCatalog: gate " + g.name + " fails unitarity at 1e-12");
        }
        gates_.emplace(g.name, std::move(g));
    }

    std::map<std::string, GateMatrix> gates_;
};

/// Record of one run of the measurement-feedback M_i recipe.
struct MeasuredOutcome {
    int control_bit = 0;   // measured logical value of the control pair
    int target_bit = 0;    // measured logical value of the target pair
    bool triggered = false;  // control was in the trigger state
    double applied_angle = 0.0;  // rotation applied to the target (0 if none)
};

namespace detail {

// For each M_i: which pair controls, which logical control value triggers,
// and which rotation angle reproduces the matrix on each target outcome.
// M_1: trigger control=1, target |0> -> U(3pi/2), target |1> -> U(pi/2);
// M_2 swaps the angles; M_3/M_4 are the same blocks with trigger control=0.
struct MeasuredRecipe {
    int trigger = 0;
    double angle_if_target0 = 0.0;
    double angle_if_target1 = 0.0;
};

inline MeasuredRecipe measured_recipe(int i) {
    const double half = std::numbers::pi / 2.0;
    const double three_half = 3.0 * std::numbers::pi / 2.0;
    switch (i) {
        case 1: return {1, three_half, half};
        case 2: return {1, half, three_half};
        case 3: return {0, three_half, half};
        case 4: return {0, half, three_half};
        default: throw std::invalid_argument("measured_recipe: index must be in 1..4");
    }
}

}  // namespace detail

/// The paper's physical implementation of M_i by quantum-jump detection:
/// projectively measure both pairs in the computational basis (Born rule,
/// seeded), then, if the control pair came out in the trigger state, rotate
/// the target pair by U(3pi/2) or U(pi/2) according to the target outcome.
/// On computational basis inputs this reproduces gate_m(i) exactly; on
/// superposed controls the projection destroys coherence and the two differ.
inline std::pair<MeasuredOutcome, StateVector> apply_m_measured(int i, const StateVector& state,
                                                                std::uint64_t seed) {
    if (i < 1 || i > 4) throw std::invalid_argument("apply_m_measured: index must be in 1..4");
    if (state.dim() != 4) throw std::invalid_argument("apply_m_measured: state must have dim 4");

    std::mt19937_64 engine = make_engine(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(engine) * state.norm_sq();

    std::size_t outcome = 3;
    double cumulative = 0.0;
    for (std::size_t b = 0; b < 4; ++b) {
        cumulative += std::norm(state.amplitudes[b]);
        if (u < cumulative) { outcome = b; break; }
    }
    if (std::norm(state.amplitudes[outcome]) == 0.0) {
        // Rounding pushed u past the last nonzero bin; take the likeliest outcome.
        double best = 0.0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (std::norm(state.amplitudes[b]) > best) { best = std::norm(state.amplitudes[b]); outcome = b; }
        }
    }

    // Collapse, keeping the measured amplitude's phase.
    StateVector collapsed = basis_state(4, outcome);
    const Complex amp = state.amplitudes[outcome];
    const Complex phase = amp / std::abs(amp);
    for (auto& a : collapsed.amplitudes) a *= phase;

    MeasuredOutcome record;
    record.control_bit = static_cast<int>(outcome >> 1);
    record.target_bit = static_cast<int>(outcome & 1);

    const detail::MeasuredRecipe recipe = detail::measured_recipe(i);
    if (record.control_bit == recipe.trigger) {
        record.triggered = true;
        record.applied_angle =
            record.target_bit == 0 ? recipe.angle_if_target0 : recipe.angle_if_target1;
        StateVector after = apply(tensor(identity(2), gate_u(record.applied_angle)), collapsed);
        return {record, std::move(after)};
    }
    return {record, std::move(collapsed)};
}

}  // namespace ionpair

#endif  // IONPAIR_GATES_HPP
