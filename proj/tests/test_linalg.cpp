#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "ionpair/gates.hpp"
#include "ionpair/linalg.hpp"

using namespace ionpair;

namespace {

// Independent Kronecker-product oracle: output-index arithmetic only, no
// shared code with tensor().
GateMatrix kron_oracle(const GateMatrix& a, const GateMatrix& b) {
    const std::size_t n = a.dim * b.dim;
    GateMatrix out{"kron", n};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.at(r, c) = a.at(r / b.dim, c / b.dim) * b.at(r % b.dim, c % b.dim);
    return out;
}

StateVector random_state(std::size_t dim, std::mt19937_64& engine) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(dim);
    for (auto& a : amps) a = Complex{gauss(engine), gauss(engine)};
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    for (auto& a : amps) a /= std::sqrt(n2);
    return StateVector{std::move(amps), computational_labels(dim)};
}

const Complex h{0.5, 0.0};
const Complex hi{0.0, 0.5};

}  // namespace

TEST_CASE("apply: identity leaves the state alone") {
    const StateVector s{{-h, hi, hi, h}, computational_labels(4)};
    CHECK(max_abs_diff(apply(identity(4), s), s) == 0.0);
}

TEST_CASE("apply: W takes |11> to (1/2)(-1,i,i,1)") {
    const StateVector expected{{-h, hi, hi, h}, computational_labels(4)};
    CHECK(max_abs_diff(apply(gate_w(), basis_state(4, 3)), expected) <= 1e-12);
}

TEST_CASE("apply: P1 inverts the |11> amplitude of Psi1") {
    const StateVector psi1{{-h, hi, hi, h}, computational_labels(4)};
    const StateVector expected{{-h, hi, hi, -h}, computational_labels(4)};
    CHECK(max_abs_diff(apply(gate_p(1), psi1), expected) <= 1e-12);
}

TEST_CASE("apply: dimension mismatch is rejected") {
    CHECK_THROWS_AS(apply(identity(2), basis_state(4, 0)), std::invalid_argument);
}

TEST_CASE("tensor: identity times identity") {
    CHECK(max_abs_diff(tensor(identity(2), identity(2)), identity(4)) == 0.0);
}

TEST_CASE("tensor: U(7pi/4) on both pairs reproduces W") {
    const GateMatrix u = gate_u(7.0 * std::numbers::pi / 4.0);
    CHECK(max_abs_diff(tensor(u, u), gate_w()) <= 1e-12);
    CHECK(max_abs_diff(tensor(u, u), kron_oracle(u, u)) <= 1e-12);
}

TEST_CASE("tensor: identity on pair 1 gives V") {
    const GateMatrix u = gate_u(7.0 * std::numbers::pi / 4.0);
    CHECK(max_abs_diff(tensor(identity(2), u), gate_v()) <= 1e-12);
    CHECK(max_abs_diff(tensor(identity(2), u), kron_oracle(identity(2), u)) <= 1e-12);
}

TEST_CASE("tensor matches the index-arithmetic oracle on random matrices") {
    std::mt19937_64 engine{11};
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        GateMatrix a{"a", 2}, b{"b", 2};
        for (auto& e : a.entries) e = Complex{gauss(engine), gauss(engine)};
        for (auto& e : b.entries) e = Complex{gauss(engine), gauss(engine)};
        CHECK(max_abs_diff(tensor(a, b), kron_oracle(a, b)) <= 1e-12);
    }
}

TEST_CASE("mat_mul: W P1 W is the diffusion matrix") {
    const GateMatrix d = mat_mul(mat_mul(gate_w(), gate_p(1)), gate_w());
    CHECK(max_abs_diff(d, gate_d()) <= 1e-12);
}

TEST_CASE("mat_mul: dimension mismatch is rejected") {
    CHECK_THROWS_AS(mat_mul(identity(2), identity(4)), std::invalid_argument);
}

TEST_CASE("mat_mul: M M^+ = I for every catalog gate") {
    const GateCatalog catalog;
    for (const auto& name : catalog.names()) {
        const GateMatrix& g = catalog.get(name);
        CHECK(max_abs_diff(mat_mul(g, dagger(g)), identity(g.dim)) <= 1e-12);
    }
}

TEST_CASE("mat_mul: V^+ M1 V is diag(1,1,1,-1)") {
    const GateMatrix v = gate_v();
    GateMatrix diag = identity(4);
    diag.at(3, 3) = Complex{-1.0, 0.0};
    CHECK(max_abs_diff(mat_mul(mat_mul(dagger(v), gate_m(1)), v), diag) <= 1e-12);
}

TEST_CASE("mat_mul: 4x4 chains associate to round-off") {
    const GateMatrix w = gate_w();
    const GateMatrix p = gate_p(1);
    const GateMatrix d = gate_d();
    CHECK(max_abs_diff(mat_mul(mat_mul(w, p), d), mat_mul(w, mat_mul(p, d))) <= 1e-13);
}

TEST_CASE("dagger: identity, rotation sign flip, unitarity") {
    CHECK(max_abs_diff(dagger(identity(4)), identity(4)) == 0.0);
    // U(t) = cos t * I - i sin t * X, so conjugation flips the sine term.
    for (double t : {0.3, 1.7, -2.4, 7.0 * std::numbers::pi / 4.0}) {
        CHECK(max_abs_diff(dagger(gate_u(t)), gate_u(-t)) <= 1e-12);
    }
    CHECK(max_abs_diff(mat_mul(dagger(gate_w()), gate_w()), identity(4)) <= 1e-12);
}

TEST_CASE("fidelity: self, global phase, orthogonality, mismatch") {
    std::mt19937_64 engine{23};
    const StateVector s = random_state(4, engine);
    CHECK(fidelity(s, s) == Catch::Approx(1.0).margin(1e-12));

    for (double phi : {0.1, 1.0, 3.0, -2.2}) {
        StateVector rotated = s;
        for (auto& a : rotated.amplitudes) a *= std::polar(1.0, phi);
        CHECK(fidelity(s, rotated) == Catch::Approx(1.0).margin(1e-12));
    }

    CHECK(fidelity(basis_state(2, 0), basis_state(2, 1)) == 0.0);
    CHECK_THROWS_AS(fidelity(basis_state(2, 0), basis_state(4, 0)), std::invalid_argument);
}

TEST_CASE("property: fidelity is symmetric and phase invariant") {
    std::mt19937_64 engine{97};
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 1000; ++trial) {
        const StateVector a = random_state(4, engine);
        const StateVector b = random_state(4, engine);
        CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) <= 1e-12);
        StateVector b_rot = b;
        const Complex ph = std::polar(1.0, angle(engine));
        for (auto& amp : b_rot.amplitudes) amp *= ph;
        CHECK(std::abs(fidelity(a, b) - fidelity(a, b_rot)) <= 1e-12);
    }
}

TEST_CASE("property: every registered gate preserves the norm") {
    std::mt19937_64 engine{5};
    const GateCatalog catalog;
    for (const auto& name : catalog.names()) {
        const GateMatrix& g = catalog.get(name);
        for (int trial = 0; trial < 20; ++trial) {
            const StateVector s = random_state(g.dim, engine);
            CHECK(std::abs(apply(g, s).norm_sq() - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("property: every registered gate is unitary at 1e-12") {
    const GateCatalog catalog;
    for (const auto& name : catalog.names()) {
        CHECK(unitarity_defect(catalog.get(name)) <= 1e-12);
    }
}

TEST_CASE("property: tensor ordering factorizes on product states") {
    std::mt19937_64 engine{31};
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 200; ++trial) {
        const GateMatrix a = gate_u(angle(engine));
        const GateMatrix b = gate_u(angle(engine));
        const StateVector s1 = random_state(2, engine);
        const StateVector s2 = random_state(2, engine);
        const StateVector lhs = apply(tensor(a, b), tensor(s1, s2));
        const StateVector rhs = tensor(apply(a, s1), apply(b, s2));
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
}
