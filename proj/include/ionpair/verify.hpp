/**
 * The identity ledger: every matrix identity the gate set must satisfy,
 * checked at 1e-12 element-wise. Twelve entries, fixed.
 */

#ifndef IONPAIR_VERIFY_HPP
#define IONPAIR_VERIFY_HPP

#include <string>
#include <vector>

#include "ionpair/gates.hpp"
#include "ionpair/linalg.hpp"

namespace ionpair {

struct IdentityCheck {
    std::string name;
    double max_diff = 0.0;
    bool pass = false;
};

inline std::vector<IdentityCheck> run_identity_ledger() {
    std::vector<IdentityCheck> ledger;
    auto check = [&](const std::string& name, double diff) {
        ledger.push_back({name, diff, diff <= kExactTol});
    };

    const double seventh = 7.0 * std::numbers::pi / 4.0;
    const GateMatrix u = gate_u(seventh);
    const GateMatrix w = gate_w();
    const GateMatrix v = gate_v();

    check("W = U(7pi/4) (x) U(7pi/4)", max_abs_diff(w, tensor(u, u)));
    check("V = I (x) U(7pi/4)", max_abs_diff(v, tensor(identity(2), u)));
    for (int i = 1; i <= 4; ++i) {
        GateMatrix printed = identity(4);
        printed.at(4 - i, 4 - i) = Complex{-1.0, 0.0};
        const GateMatrix derived = mat_mul(mat_mul(dagger(v), gate_m(i)), v);
        check("P" + std::to_string(i) + " = V^+ M" + std::to_string(i) + " V (printed diagonal)",
              max_abs_diff(derived, printed));
    }
    {
        const Complex h{0.5, 0.0};
        const Complex hi{0.0, 0.5};
        const GateMatrix printed{"D", 4,
                                 {-h, hi,  hi,  -h,
                                  hi, h,   -h,  -hi,
                                  hi, -h,  h,   -hi,
                                  -h, -hi, -hi, -h}};
        check("D = W P1 W (printed matrix)",
              max_abs_diff(mat_mul(mat_mul(w, gate_p(1)), w), printed));
    }
    {
        const GateCatalog catalog;
        double worst = 0.0;
        for (const auto& name : catalog.names()) {
            worst = std::max(worst, unitarity_defect(catalog.get(name)));
        }
        check("every catalog gate unitary", worst);
    }
    {
        const Complex h{0.5, 0.0};
        const Complex hi{0.0, 0.5};
        const StateVector psi1{{-h, hi, hi, h}, computational_labels(4)};
        const StateVector psi2{{-h, hi, hi, -h}, computational_labels(4)};
        check("W|11> = (1/2)(-1,i,i,1)", max_abs_diff(apply(w, basis_state(4, 3)), psi1));
        check("P1 Psi1 = (1/2)(-1,i,i,-1)", max_abs_diff(apply(gate_p(1), psi1), psi2));
        check("D Psi2 = |11>", max_abs_diff(apply(gate_d(), psi2), basis_state(4, 3)));
    }
    {
        // Each P_i flips exactly one basis amplitude: P1 <-> |11>, ... P4 <-> |00>.
        double worst = 0.0;
        for (int i = 1; i <= 4; ++i) {
            const GateMatrix p = gate_p(i);
            for (std::size_t b = 0; b < 4; ++b) {
                StateVector expect = basis_state(4, b);
                if (b == static_cast<std::size_t>(4 - i)) {
                    expect.amplitudes[b] = Complex{-1.0, 0.0};
                }
                worst = std::max(worst, max_abs_diff(apply(p, basis_state(4, b)), expect));
            }
        }
        check("P_i flips exactly its one marked amplitude", worst);
    }
    return ledger;
}

}  // namespace ionpair

#endif  // IONPAIR_VERIFY_HPP
