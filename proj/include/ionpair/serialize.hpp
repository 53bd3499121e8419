/**
 * JSON and text serialization for traces and gates. Complex numbers are
 * [re, im] pairs throughout.
 */

#ifndef IONPAIR_SERIALIZE_HPP
#define IONPAIR_SERIALIZE_HPP

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ionpair/grover.hpp"
#include "ionpair/linalg.hpp"

namespace ionpair {

inline nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json state_to_json(const StateVector& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : s.amplitudes) out.push_back(complex_to_json(a));
    return out;
}

inline nlohmann::json trace_to_json(const GroverTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        steps.push_back({{"gate", step.gate}, {"state", state_to_json(step.state)}});
    }
    return nlohmann::json{{"steps", steps},
                          {"success", trace.success_probability},
                          {"leakage", trace.leakage_final},
                          {"marked", trace.marked}};
}

inline nlohmann::json gate_to_json(const GateMatrix& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < g.dim; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < g.dim; ++c) row.push_back(complex_to_json(g.at(r, c)));
        rows.push_back(row);
    }
    return nlohmann::json{{"name", g.name}, {"dim", g.dim}, {"entries", rows}};
}

namespace detail {

/// Exact text for entries drawn from {0, +-1, +-i, +-1/2, +-i/2, +-1/sqrt2,
/// +-i/sqrt2}; falls back to numeric text otherwise.
inline std::string symbolic_entry(const Complex& z) {
    struct Candidate {
        double value;
        const char* text;
    };
    static const Candidate reals[] = {
        {0.0, "0"}, {1.0, "1"}, {-1.0, "-1"}, {0.5, "1/2"}, {-0.5, "-1/2"},
        {1.0 / std::numbers::sqrt2, "1/sqrt2"}, {-1.0 / std::numbers::sqrt2, "-1/sqrt2"}};
    static const Candidate imags[] = {
        {0.0, ""}, {1.0, "i"}, {-1.0, "-i"}, {0.5, "i/2"}, {-0.5, "-i/2"},
        {1.0 / std::numbers::sqrt2, "i/sqrt2"}, {-1.0 / std::numbers::sqrt2, "-i/sqrt2"}};

    const Candidate* re = nullptr;
    const Candidate* im = nullptr;
    for (const auto& c : reals)
        if (std::abs(z.real() - c.value) <= kExactTol) { re = &c; break; }
    for (const auto& c : imags)
        if (std::abs(z.imag() - c.value) <= kExactTol) { im = &c; break; }

    if (re != nullptr && im != nullptr) {
        const bool re_zero = re->value == 0.0;
        const bool im_zero = im->value == 0.0;
        if (re_zero && im_zero) return "0";
        if (im_zero) return re->text;
        if (re_zero) return im->text;
        std::string s = re->text;
        s += (z.imag() > 0 ? "+" : "");
        s += im->text;
        return s;
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

}  // namespace detail

/// Matrix pretty-printer with exact symbolic entries where possible.
inline std::string gate_to_text(const GateMatrix& g) {
    std::ostringstream out;
    out << g.name << " (" << g.dim << "x" << g.dim << ")\n";
    for (std::size_t r = 0; r < g.dim; ++r) {
        out << "  [";
        for (std::size_t c = 0; c < g.dim; ++c) {
            out << (c == 0 ? " " : "  ") << detail::symbolic_entry(g.at(r, c));
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace ionpair

#endif  // IONPAIR_SERIALIZE_HPP
