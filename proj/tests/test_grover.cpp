#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "ionpair/grover.hpp"
#include "ionpair/serialize.hpp"

using namespace ionpair;

namespace {

const Complex h{0.5, 0.0};
const Complex hi{0.0, 0.5};

// Independent oracle: run the search as one dense matrix chain and return
// the success probability for the given marked index.
double matrix_chain_success(std::size_t marked, const GateMatrix& delay_after_prep = identity(4)) {
    const GateMatrix w = gate_w();
    const GateMatrix p = gate_p(static_cast<int>(4 - marked));
    const GateMatrix d = gate_d();
    StateVector s = basis_state(4, 3);
    s = apply(w, s);
    s = apply(delay_after_prep, s);
    s = apply(p, s);
    s = apply(d, s);
    return std::norm(s.amplitudes[marked]);
}

GateMatrix bare_delay_matrix(double phase) {
    GateMatrix g = identity(4, "bare-delay");
    const Complex ph = std::polar(1.0, -phase);
    g.at(1, 1) = ph;
    g.at(2, 2) = ph;
    g.at(3, 3) = ph * ph;
    return g;
}

}  // namespace

TEST_CASE("canonical |11> run reproduces the three-step pipeline") {
    GroverConfig cfg;
    cfg.marked = "|11>";
    const GroverTrace trace = run_grover(cfg);

    REQUIRE(trace.steps.size() == 4);
    CHECK(trace.steps[0].gate == "prepare");
    CHECK(max_abs_diff(trace.steps[0].state, basis_state(4, 3)) <= 1e-12);
    CHECK(trace.steps[1].gate == "W");
    CHECK(max_abs_diff(trace.steps[1].state,
                       StateVector{{-h, hi, hi, h}, computational_labels(4)}) <= 1e-12);
    CHECK(trace.steps[2].gate == "P1");
    CHECK(max_abs_diff(trace.steps[2].state,
                       StateVector{{-h, hi, hi, -h}, computational_labels(4)}) <= 1e-12);
    CHECK(trace.steps[3].gate == "D");
    CHECK(max_abs_diff(trace.steps[3].state, basis_state(4, 3)) <= 1e-12);
    CHECK(trace.success_probability == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("marked |00> ends in (-1,0,0,0): success 1 up to the global phase") {
    GroverConfig cfg;
    cfg.marked = "00";
    const GroverTrace trace = run_grover(cfg);
    CHECK(std::abs(trace.steps.back().state.amplitudes[0] - Complex{-1.0, 0.0}) <= 1e-12);
    CHECK(trace.success_probability == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("all four marked states succeed with the fixed diffusion") {
    for (std::size_t m = 0; m < 4; ++m) {
        GroverConfig cfg;
        cfg.marked = canonical_marked_label(m);
        const GroverTrace trace = run_grover(cfg);
        CHECK(std::abs(trace.success_probability - 1.0) <= 1e-12);
        CHECK(std::abs(trace.success_probability - matrix_chain_success(m)) <= 1e-12);
    }
}

TEST_CASE("invalid marked label is rejected") {
    GroverConfig cfg;
    cfg.marked = "|21>";
    CHECK_THROWS_AS(run_grover(cfg), std::invalid_argument);
}

TEST_CASE("measured oracle mode needs a seed") {
    GroverConfig cfg;
    cfg.oracle_mode = OracleMode::measured;
    CHECK_THROWS_AS(run_grover(cfg), std::invalid_argument);
    cfg.seed = 3;
    CHECK_NOTHROW(run_grover(cfg));
}

TEST_CASE("negative delays are rejected") {
    GroverConfig cfg;
    cfg.delays = {{DelayPosition::after_prep, -0.5}};
    CHECK_THROWS_AS(run_grover(cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_grover_bare(cfg), std::invalid_argument);
}

TEST_CASE("bare run without delay matches the logical result") {
    GroverConfig cfg;
    const GroverTrace bare = run_grover_bare(cfg);
    const GroverTrace logical = run_grover(cfg);
    CHECK(std::abs(bare.success_probability - logical.success_probability) <= 1e-12);
    CHECK(bare.success_probability == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("bare run: a full-period delay wraps back to success 1") {
    GroverConfig cfg;
    cfg.delays = {{DelayPosition::after_prep, 2.0 * std::numbers::pi / cfg.params.omega_eg}};
    CHECK(run_grover_bare(cfg).success_probability == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("bare run: a quarter-period delay spoils the search") {
    GroverConfig cfg;
    const double tau = 0.5 * std::numbers::pi / cfg.params.omega_eg;  // omega_eg*tau = pi/2
    cfg.delays = {{DelayPosition::after_prep, tau}};
    const double success = run_grover_bare(cfg).success_probability;
    CHECK(success < 1.0);
    // oracle: same chain with the per-qubit phase matrix inserted
    const double expected = matrix_chain_success(3, bare_delay_matrix(std::numbers::pi / 2.0));
    CHECK(success == Catch::Approx(expected).margin(1e-12));
    CHECK(expected == Catch::Approx(0.25).margin(1e-12));
}

TEST_CASE("property: pair-encoded success is flat across delays") {
    GroverConfig cfg;
    cfg.level = Level::physical;
    for (std::size_t m = 0; m < 4; ++m) {
        cfg.marked = canonical_marked_label(m);
        for (double tau : {0.0, 0.013, 0.5, 3.7, 100.0}) {
            for (auto pos : {DelayPosition::after_prep, DelayPosition::after_oracle}) {
                cfg.delays = {{pos, tau}};
                const GroverTrace trace = run_grover(cfg);
                CHECK(std::abs(trace.success_probability - 1.0) <= 1e-12);
                CHECK(trace.leakage_final <= 1e-12);
            }
        }
    }
}

TEST_CASE("physical zero-noise trace decodes to the logical trace") {
    GroverConfig cfg;
    cfg.level = Level::physical;
    const GroverTrace physical = run_grover(cfg);
    cfg.level = Level::logical;
    const GroverTrace logical = run_grover(cfg);
    REQUIRE(physical.steps.size() == logical.steps.size());
    for (std::size_t i = 0; i < physical.steps.size(); ++i) {
        CHECK(max_abs_diff(physical.steps[i].state, logical.steps[i].state) <= 1e-12);
    }
    CHECK(physical.leakage_final <= 1e-12);
}

TEST_CASE("verify_trace: canonical pass, corrupted amplitude fails with step") {
    GroverConfig cfg;
    GroverTrace trace = run_grover(cfg);
    CHECK(verify_trace(trace).pass);

    trace.steps[2].state.amplitudes[0] += Complex{0.05, 0.0};  // corrupt Psi2
    const VerifyReport report = verify_trace(trace);
    CHECK_FALSE(report.pass);
    bool mentions_step = false;
    for (const auto& f : report.failures) {
        if (f.find("P1") != std::string::npos || f.find("step 2") != std::string::npos) {
            mentions_step = true;
        }
    }
    CHECK(mentions_step);
}

TEST_CASE("verify_trace: physical traces with delays still verify") {
    GroverConfig cfg;
    cfg.level = Level::physical;
    cfg.delays = {{DelayPosition::after_prep, 0.37}, {DelayPosition::after_oracle, 1.1}};
    CHECK(verify_trace(run_grover(cfg)).pass);
}

TEST_CASE("trace JSON has the documented shape") {
    GroverConfig cfg;
    const nlohmann::json doc = trace_to_json(run_grover(cfg));
    CHECK(doc["marked"] == "|11>");
    CHECK(doc["success"].get<double>() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(doc["steps"].is_array());
    CHECK(doc["steps"][1]["gate"] == "W");
    // complex amplitudes serialize as [re, im]
    CHECK(doc["steps"][1]["state"][0][0].get<double>() == Catch::Approx(-0.5).margin(1e-12));
    CHECK(doc["steps"][1]["state"][1][1].get<double>() == Catch::Approx(0.5).margin(1e-12));
}
