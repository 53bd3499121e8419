/**
 * Dense complex linear algebra over labeled tensor-product bases.
 *
 * Everything here is value-semantic and side-effect free. Dimensions in
 * this project are 2, 4 and 16, so storage is plain dense row-major.
 */

#ifndef IONPAIR_LINALG_HPP
#define IONPAIR_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ionpair {

using Complex = std::complex<double>;

inline constexpr double kExactTol = 1e-12;    // exact-algebra identities
inline constexpr double kPipelineTol = 1e-9;  // accumulated pipelines

/// Complex amplitude vector over a labeled ket basis.
struct StateVector {
    std::vector<Complex> amplitudes;
    std::vector<std::string> basis_labels;

    StateVector() = default;
    StateVector(std::vector<Complex> amps, std::vector<std::string> labels)
        : amplitudes(std::move(amps)), basis_labels(std::move(labels)) {
        if (amplitudes.size() != basis_labels.size()) {
            throw std::invalid_argument(
                "StateVector: amplitude count " + std::to_string(amplitudes.size()) +
                " != label count " + std::to_string(basis_labels.size()));
        }
    }

    std::size_t dim() const { return amplitudes.size(); }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return s;
    }
};

/// Default labels |0>..|1> or |00>..|11> for dims 2 and 4; |b0>.. otherwise.
inline std::vector<std::string> computational_labels(std::size_t dim) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    if (dim == 2) return {"|0>", "|1>"};
    if (dim == 4) return {"|00>", "|01>", "|10>", "|11>"};
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("|b" + std::to_string(i) + ">");
    return labels;
}

inline StateVector basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) throw std::invalid_argument("basis_state: index out of range");
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector{std::move(amps), computational_labels(dim)};
}

/// Square complex matrix with a name; houses every gate in the catalog.
struct GateMatrix {
    std::string name;
    std::size_t dim = 0;
    std::vector<Complex> entries;  // row-major, dim*dim

    GateMatrix() = default;
    GateMatrix(std::string gate_name, std::size_t n)
        : name(std::move(gate_name)), dim(n), entries(n * n, Complex{0.0, 0.0}) {}
    GateMatrix(std::string gate_name, std::size_t n, std::vector<Complex> data)
        : name(std::move(gate_name)), dim(n), entries(std::move(data)) {
        if (entries.size() != dim * dim) {
            throw std::invalid_argument("GateMatrix " + name + ": entry count != dim^2");
        }
    }

    Complex& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

inline GateMatrix identity(std::size_t dim, std::string name = "I") {
    GateMatrix g{std::move(name), dim};
    for (std::size_t i = 0; i < dim; ++i) g.at(i, i) = Complex{1.0, 0.0};
    return g;
}

/// gate . state; the input state is untouched.
inline StateVector apply(const GateMatrix& gate, const StateVector& state) {
    if (gate.dim != state.dim()) {
        throw std::invalid_argument(
            "apply: gate '" + gate.name + "' has dim " + std::to_string(gate.dim) +
            " but state has dim " + std::to_string(state.dim()));
    }
    StateVector out;
    out.basis_labels = state.basis_labels;
    out.amplitudes.assign(state.dim(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < gate.dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < gate.dim; ++c) {
            acc += gate.at(r, c) * state.amplitudes[c];
        }
        out.amplitudes[r] = acc;
    }
    return out;
}

/// Kronecker product a (x) b; the left factor indexes the slow (leftmost) ket.
/// Basis ordering for two pairs is (|00>,|01>,|10>,|11>) with pair 1 leftmost.
inline GateMatrix tensor(const GateMatrix& a, const GateMatrix& b) {
    GateMatrix out{a.name + "(x)" + b.name, a.dim * b.dim};
    for (std::size_t ar = 0; ar < a.dim; ++ar)
        for (std::size_t ac = 0; ac < a.dim; ++ac)
            for (std::size_t br = 0; br < b.dim; ++br)
                for (std::size_t bc = 0; bc < b.dim; ++bc)
                    out.at(ar * b.dim + br, ac * b.dim + bc) = a.at(ar, ac) * b.at(br, bc);
    return out;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out;
    out.amplitudes.reserve(a.dim() * b.dim());
    out.basis_labels.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out.amplitudes.push_back(a.amplitudes[i] * b.amplitudes[j]);
            out.basis_labels.push_back(a.basis_labels[i] + b.basis_labels[j]);
        }
    return out;
}

inline GateMatrix mat_mul(const GateMatrix& a, const GateMatrix& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument(
            "mat_mul: '" + a.name + "' dim " + std::to_string(a.dim) +
            " != '" + b.name + "' dim " + std::to_string(b.dim));
    }
    GateMatrix out{a.name + "*" + b.name, a.dim};
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < a.dim; ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

/// Conjugate transpose; equals the inverse for unitary input.
inline GateMatrix dagger(const GateMatrix& a) {
    GateMatrix out{a.name + "^+", a.dim};
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) = std::conj(a.at(c, r));
    return out;
}

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch " +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return acc;
}

/// |<a|b>|^2 — global-phase invariant overlap in [0,1].
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

/// Largest element-wise |a - b|; the workhorse of the identity ledger.
inline double max_abs_diff(const GateMatrix& a, const GateMatrix& b) {
    if (a.dim != b.dim) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
    return m;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return m;
}

/// max-entry |G^+ G - I|.
inline double unitarity_defect(const GateMatrix& g) {
    return max_abs_diff(mat_mul(dagger(g), g), identity(g.dim));
}

/// min over phases phi of max-entry |a - e^{i phi} b|; used where equality
/// up to global phase is the contract (measured-gate basis cases).
inline double max_abs_diff_up_to_phase(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    // Align phases on the largest-magnitude component of b.
    std::size_t k = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (std::abs(b.amplitudes[i]) > best) { best = std::abs(b.amplitudes[i]); k = i; }
    }
    if (best == 0.0) return max_abs_diff(a, b);
    Complex phase = (a.amplitudes[k] / b.amplitudes[k]);
    double mag = std::abs(phase);
    if (mag == 0.0) return max_abs_diff(a, b);
    phase /= mag;
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        m = std::max(m, std::abs(a.amplitudes[i] - phase * b.amplitudes[i]));
    return m;
}

}  // namespace ionpair

#endif  // IONPAIR_LINALG_HPP
