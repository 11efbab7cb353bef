#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqc/linalg.hpp"
#include "gqc/partitions.hpp"
#include "gqc/state.hpp"

namespace gqc {

// Per-cut values below this are treated as exact zeros: a numerically
// product cut leaves O(eps) residue that a geometric mean would otherwise
// inflate into a spurious positive aggregate.
inline constexpr double kCutZeroTol = 1e-13;

enum class Measure { Cq, GqC, GMC, GGM };

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Cq: return "Cq";
        case Measure::GqC: return "GqC";
        case Measure::GMC: return "GMC";
        case Measure::GGM: return "GGM";
    }
    return "?";
}

// Largest attainable F_q on a d-dimensional reduction: (d^{q-1}-1)/d^{q-1}.
inline double max_fq(int d, double q) {
    if (d < 2) throw domain_error("max_fq requires d >= 2");
    if (q < 2.0) throw domain_error("max_fq requires q >= 2");
    return 1.0 - std::pow(static_cast<double>(d), 1.0 - q);
}

// F_q(rho) = 1 - Tr rho^q, q >= 2.
inline double f_q(const DensityMatrix& rho, double q) {
    if (q < 2.0) throw domain_error("F_q requires q >= 2");
    return 1.0 - trace_power(rho, q);
}

namespace detail {

inline double f_q_of_spectrum(const std::vector<double>& ev, double q) {
    double s = 0;
    for (double v : ev) s += std::pow(std::max(v, 0.0), q);
    return 1.0 - s;
}

inline std::vector<double> cut_spectrum(const StateVector& psi, const Bipartition& cut) {
    return schmidt(psi, cut).squared_coefficients;
}

}  // namespace detail

// Bipartite q-concurrence of a pure state across one cut: F_q of the
// reduction, evaluated on the Schmidt spectrum (symmetric in the two blocks
// by construction).
inline double q_concurrence_pure(const StateVector& psi, const Bipartition& cut, double q) {
    if (q < 2.0) throw domain_error("q-concurrence requires q >= 2");
    double v = detail::f_q_of_spectrum(detail::cut_spectrum(psi, cut), q);
    if (v < kCutZeroTol) return 0.0;
    return v;
}

inline double concurrence_pure(const StateVector& psi, const Bipartition& cut) {
    return std::sqrt(2.0 * q_concurrence_pure(psi, cut, 2.0));
}

struct MeasureReport {
    Measure measure = Measure::GqC;
    double q = 2.0;
    std::vector<std::pair<Bipartition, double>> per_cut;
    double aggregate = 0.0;
    std::optional<Bipartition> extremal_cut;  // argmin cut for GMC / GGM

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["measure"] = measure_name(measure);
        j["q"] = q;
        j["aggregate"] = aggregate;
        auto& cuts = j["per_cut"] = nlohmann::json::array();
        for (const auto& [cut, value] : per_cut)
            cuts.push_back({{"cut", cut.to_string()}, {"value", value}});
        if (extremal_cut) j["extremal_cut"] = extremal_cut->to_string();
        return j;
    }
};

namespace detail {

// Geometric mean over cuts, evaluated in log space so products over up to
// 2^{n-1}-1 cuts cannot underflow. Exact zeros short-circuit.
inline double geometric_mean(const std::vector<std::pair<Bipartition, double>>& per_cut) {
    double log_sum = 0;
    for (const auto& [cut, v] : per_cut) {
        if (v == 0.0) return 0.0;
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(per_cut.size()));
}

}  // namespace detail

// Geometric mean of the q-concurrence over all canonical bipartitions.
// Vanishes exactly when some cut is product.
inline MeasureReport gqc_pure(const StateVector& psi, double q, int cap = kDefaultPartyCap) {
    MeasureReport rep;
    rep.measure = Measure::GqC;
    rep.q = q;
    for (const Bipartition& cut : enumerate_bipartitions(psi.parties(), cap))
        rep.per_cut.emplace_back(cut, q_concurrence_pure(psi, cut, q));
    rep.aggregate = detail::geometric_mean(rep.per_cut);
    return rep;
}

// Genuinely multipartite concurrence: minimum bipartite concurrence over all
// cuts, with the argmin reported.
inline MeasureReport gmc_pure(const StateVector& psi, int cap = kDefaultPartyCap) {
    MeasureReport rep;
    rep.measure = Measure::GMC;
    rep.q = 2.0;
    rep.aggregate = std::numeric_limits<double>::infinity();
    for (const Bipartition& cut : enumerate_bipartitions(psi.parties(), cap)) {
        double c = concurrence_pure(psi, cut);
        rep.per_cut.emplace_back(cut, c);
        if (c < rep.aggregate) {
            rep.aggregate = c;
            rep.extremal_cut = cut;
        }
    }
    return rep;
}

// Generalized geometric measure, pure-state bipartition form:
// 1 - max over cuts of the largest squared Schmidt coefficient.
inline MeasureReport ggm_pure(const StateVector& psi, int cap = kDefaultPartyCap) {
    MeasureReport rep;
    rep.measure = Measure::GGM;
    rep.q = 2.0;
    double max_s1 = 0.0;
    for (const Bipartition& cut : enumerate_bipartitions(psi.parties(), cap)) {
        double s1 = detail::cut_spectrum(psi, cut).front();
        rep.per_cut.emplace_back(cut, 1.0 - s1);
        if (s1 > max_s1) {
            max_s1 = s1;
            rep.extremal_cut = cut;
        }
    }
    rep.aggregate = 1.0 - max_s1;
    return rep;
}

}  // namespace gqc
