#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gqc/bounds.hpp"
#include "gqc/measures.hpp"
#include "gqc/states.hpp"

namespace gqc {

// Result of one property suite run. Deterministic for a given (seed, samples)
// pair; the first counterexample, if any, is kept for serialization.
struct SuiteReport {
    std::string name;
    int samples = 0;
    int checks = 0;
    int violations = 0;
    std::vector<std::string> messages;
    nlohmann::json counterexample;

    bool passed() const { return violations == 0; }

    std::string to_text() const {
        std::ostringstream os;
        os << "suite " << name << ": " << checks << " checks over " << samples << " samples, "
           << violations << " violations -> " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& m : messages) os << "  " << m << "\n";
        return os.str();
    }
};

namespace detail {

inline void record_violation(SuiteReport& rep, const std::string& msg, const nlohmann::json& cex) {
    ++rep.violations;
    if (rep.messages.size() < 16) rep.messages.push_back(msg);
    if (rep.counterexample.is_null()) rep.counterexample = cex;
}

inline void check(SuiteReport& rep, bool ok, const std::string& msg, const nlohmann::json& cex) {
    ++rep.checks;
    if (!ok) record_violation(rep, msg, cex);
}

}  // namespace detail

// F_q properties: non-negativity, subadditivity (both sides), concavity,
// quasiconvexity with the orthogonal-pure equality case.
inline SuiteReport run_lemma1(std::uint64_t seed, int samples, double slack = 1e-9) {
    SuiteReport rep;
    rep.name = "lemma1";
    rep.samples = samples;
    Rng rng(seed);
    const double qs[] = {2.0, 2.5, 3.0, 4.5};
    std::uniform_int_distribution<int> rank_dist(1, 6);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int s = 0; s < samples; ++s) {
        double q = qs[s % 4];
        DensityMatrix rho_ab = random_density({2, 3}, rank_dist(rng), rng);
        auto rho_a = partial_trace(rho_ab, {0});
        auto rho_b = partial_trace(rho_ab, {1});
        double fab = f_q(rho_ab, q), fa = f_q(rho_a, q), fb = f_q(rho_b, q);
        auto cex = to_json(rho_ab);
        detail::check(rep, fab >= -slack, "non-negativity violated", cex);
        detail::check(rep, std::abs(fa - fb) <= fab + slack, "subadditivity lower side violated", cex);
        detail::check(rep, fab <= fa + fb + slack, "subadditivity upper side violated", cex);

        // Concavity and quasiconvexity on a random 3-member ensemble.
        std::vector<DensityMatrix> members;
        std::vector<double> p(3);
        double psum = 0;
        for (int i = 0; i < 3; ++i) {
            members.push_back(random_density({2, 2}, rank_dist(rng) % 4 + 1, rng));
            p[i] = unif(rng);
            psum += p[i];
        }
        Eigen::MatrixXcd mixm = Eigen::MatrixXcd::Zero(4, 4);
        double avg = 0, quasi = 0, pq_sum = 0;
        for (int i = 0; i < 3; ++i) {
            p[i] /= psum;
            mixm += p[i] * members[i].matrix();
            avg += p[i] * f_q(members[i], q);
            quasi += std::pow(p[i], q) * f_q(members[i], q);
            pq_sum += std::pow(p[i], q);
        }
        DensityMatrix mix({2, 2}, mixm);
        double fmix = f_q(mix, q);
        detail::check(rep, avg <= fmix + slack, "concavity violated", to_json(mix));
        detail::check(rep, fmix <= quasi + 1.0 - pq_sum + slack, "quasiconvexity violated", to_json(mix));

        // Equality case of quasiconvexity: orthogonal pure ensemble.
        Eigen::MatrixXcd u = random_unitary(4, rng);
        Eigen::MatrixXcd orth = Eigen::MatrixXcd::Zero(4, 4);
        double pq_orth = 0;
        std::vector<double> w(3);
        double wsum = 0;
        for (int i = 0; i < 3; ++i) { w[i] = unif(rng); wsum += w[i]; }
        for (int i = 0; i < 3; ++i) {
            w[i] /= wsum;
            orth += w[i] * (u.col(i) * u.col(i).adjoint());
            pq_orth += std::pow(w[i], q);
        }
        DensityMatrix orth_mix({2, 2}, orth);
        detail::check(rep, std::abs(f_q(orth_mix, q) - (1.0 - pq_orth)) <= slack,
                      "quasiconvexity equality case violated", to_json(orth_mix));
    }
    return rep;
}

// Tensoring subadditivity: the bipartite inequality and its geometric-mean
// version under party-wise pairing.
inline SuiteReport run_subadditivity(std::uint64_t seed, int samples, double slack = 1e-9) {
    SuiteReport rep;
    rep.name = "subadditivity";
    rep.samples = samples;
    Rng rng(seed);
    const double qs[] = {2.0, 3.0, 4.5};
    for (int s = 0; s < samples; ++s) {
        double q = qs[s % 3];
        // Bipartite case on 2x3 factors.
        StateVector a = haar_random_pure({2, 3}, rng);
        StateVector b = haar_random_pure({2, 3}, rng);
        StateVector ab = pairwise_product(a, b);
        Bipartition cut({0}, 2);
        double lhs = q_concurrence_pure(ab, cut, q);
        double rhs = q_concurrence_pure(a, cut, q) + q_concurrence_pure(b, cut, q);
        detail::check(rep, lhs <= rhs + slack, "bipartite tensoring subadditivity violated", to_json(ab));

        // Multipartite case on 3-qubit pairs.
        StateVector x = haar_random_pure({2, 2, 2}, rng);
        StateVector y = haar_random_pure({2, 2, 2}, rng);
        StateVector xy = pairwise_product(x, y);
        double g = gqc_pure(xy, q).aggregate;
        double gsum = gqc_pure(x, q).aggregate + gqc_pure(y, q).aggregate;
        detail::check(rep, g <= gsum + slack, "multipartite tensoring subadditivity violated", to_json(xy));
    }
    return rep;
}

// The multipartite witness bound never exceeds the exact pure-state value
// when fed the state itself.
inline SuiteReport run_soundness(std::uint64_t seed, int samples, double slack = 1e-9) {
    SuiteReport rep;
    rep.name = "soundness";
    rep.samples = samples;
    Rng rng(seed);
    const double qs[] = {2.0, 3.0, 4.5};
    for (int s = 0; s < samples; ++s) {
        StateVector psi = haar_random_pure({2, 2, 2}, rng);
        DensityMatrix rho = DensityMatrix::from_pure(psi);
        for (double q : qs) {
            double exact = gqc_pure(psi, q).aggregate;
            double bound = lower_bound_multipartite(rho, psi, q).value;
            detail::check(rep, bound <= exact + slack, "witness bound exceeds exact GqC", to_json(psi));
        }
    }
    return rep;
}

// Continuity of C_q and GqC on perturbed 3-qubit pairs at fixed distance
// levels.
inline SuiteReport run_continuity(std::uint64_t seed, int samples, double slack = 1e-9) {
    SuiteReport rep;
    rep.name = "continuity";
    rep.samples = samples;
    Rng rng(seed);
    const double eps_levels[] = {0.01, 0.05, 0.1};
    const double qs[] = {2.0, 3.0};
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        double eps = eps_levels[s % 3];
        StateVector psi = haar_random_pure({2, 2, 2}, rng);
        // Perturb and rescale until the projector distance is within eps.
        std::vector<cplx> noise(8);
        for (auto& c : noise) c = cplx(gauss(rng), gauss(rng));
        double scale = eps / 8.0;
        StateVector phi = psi;
        for (int tries = 0; tries < 60; ++tries) {
            std::vector<cplx> amps = psi.amplitudes();
            double n2 = 0;
            for (int i = 0; i < 8; ++i) { amps[i] += scale * noise[i]; }
            for (const auto& c : amps) n2 += std::norm(c);
            double inv = 1.0 / std::sqrt(n2);
            for (auto& c : amps) c *= inv;
            StateVector cand({2, 2, 2}, std::move(amps));
            if (state_distance(psi, cand) <= eps) { phi = cand; break; }
            scale *= 0.5;
        }
        for (double q : qs) {
            for (const Bipartition& cut : enumerate_bipartitions(3)) {
                double diff = std::abs(q_concurrence_pure(psi, cut, q) - q_concurrence_pure(phi, cut, q));
                detail::check(rep, diff <= continuity_bound_bipartite(2, eps, q) + slack,
                              "bipartite continuity bound violated", to_json(psi));
            }
            double gdiff = std::abs(gqc_pure(psi, q).aggregate - gqc_pure(phi, q).aggregate);
            detail::check(rep, gdiff <= continuity_bound_multipartite(3, 2, eps, q) + slack,
                          "multipartite continuity bound violated", to_json(psi));
        }
    }
    return rep;
}

// Vanishing on biseparable factory states, positivity on GME ones, and
// maximality on the three-qubit GHZ state.
inline SuiteReport run_theorem1(std::uint64_t seed, int samples) {
    SuiteReport rep;
    rep.name = "theorem1";
    rep.samples = samples;
    Rng rng(seed);
    const double qs[] = {2.0, 3.0, 5.0};
    for (int s = 0; s < samples; ++s) {
        double q = qs[s % 3];
        // Biseparable: entangled pair times a third party, random placement.
        StateVector pair = haar_random_pure({2, 2}, rng);
        StateVector single = haar_random_pure({2}, rng);
        StateVector bisep = product_state({pair, single});
        detail::check(rep, gqc_pure(bisep, q).aggregate <= 1e-12,
                      "biseparable state has nonzero GqC", to_json(bisep));
        StateVector full_product =
            product_state({haar_random_pure({2}, rng), haar_random_pure({2}, rng), haar_random_pure({2}, rng)});
        detail::check(rep, gqc_pure(full_product, q).aggregate <= 1e-12,
                      "product state has nonzero GqC", to_json(full_product));
        StateVector haar = haar_random_pure({2, 2, 2}, rng);
        detail::check(rep, gqc_pure(haar, q).aggregate > 1e-6,
                      "Haar-random state not detected as GME", to_json(haar));
    }
    for (double q : qs) {
        detail::check(rep, std::abs(gqc_pure(ghz_state(3), q).aggregate - max_fq(2, q)) <= 1e-10,
                      "GHZ_3 does not attain the maximal value", to_json(ghz_state(3)));
        for (int n = 3; n <= 5; ++n) {
            detail::check(rep, gqc_pure(ghz_state(n), q).aggregate > 1e-6, "GHZ not GME",
                          to_json(ghz_state(n)));
            detail::check(rep, gqc_pure(w_state(n), q).aggregate > 1e-6, "W not GME",
                          to_json(w_state(n)));
        }
    }
    return rep;
}

// tensor-core invariants: trace preservation, spectra complementarity,
// Schmidt consistency, trace_power at q=1, triangle inequality, and the
// trace-distance contractivity behind the continuity proofs.
inline SuiteReport run_tensor(std::uint64_t seed, int samples, double slack = 1e-8) {
    SuiteReport rep;
    rep.name = "tensor";
    rep.samples = samples;
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        StateVector psi = haar_random_pure({2, 2, 2}, rng);
        for (const Bipartition& cut : enumerate_bipartitions(3)) {
            auto ra = partial_trace(psi, cut.block());
            auto rb = partial_trace(psi, cut.complement());
            detail::check(rep, std::abs(ra.matrix().trace().real() - 1.0) <= 1e-9,
                          "partial trace not trace-preserving", to_json(psi));
            auto ea = hermitian_eigenvalues(ra);
            auto eb = hermitian_eigenvalues(rb);
            std::size_t common = std::min(ea.size(), eb.size());
            bool spectra_ok = true;
            for (std::size_t i = 0; i < common; ++i)
                if (std::abs(ea[i] - eb[i]) > slack) spectra_ok = false;
            detail::check(rep, spectra_ok, "reduction spectra not complementary", to_json(psi));
            auto sd = schmidt(psi, cut);
            bool schmidt_ok = true;
            for (std::size_t i = 0; i < sd.squared_coefficients.size() && i < ea.size(); ++i)
                if (std::abs(sd.squared_coefficients[i] - ea[i]) > slack) schmidt_ok = false;
            detail::check(rep, schmidt_ok, "Schmidt coefficients disagree with reduction spectrum",
                          to_json(psi));
            detail::check(rep, std::abs(trace_power(ra, 1.0) - 1.0) <= 1e-9,
                          "trace power at q=1 is not 1", to_json(psi));
        }
        // Triangle inequality on random triples.
        StateVector a = haar_random_pure({2, 2}, rng);
        StateVector b = haar_random_pure({2, 2}, rng);
        StateVector c = haar_random_pure({2, 2}, rng);
        detail::check(rep, state_distance(a, c) <= state_distance(a, b) + state_distance(b, c) + slack,
                      "triangle inequality violated", to_json(a));
        // Contractivity: distance between reductions never exceeds the parents'.
        StateVector p1 = haar_random_pure({2, 2, 2}, rng);
        StateVector p2 = haar_random_pure({2, 2, 2}, rng);
        double parent = state_distance(p1, p2);
        auto r1 = partial_trace(p1, {0});
        auto r2 = partial_trace(p2, {0});
        double reduced = trace_norm(r1.matrix() - r2.matrix());
        detail::check(rep, reduced <= parent + slack, "partial trace not contractive", to_json(p1));
    }
    return rep;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int samples,
                             double slack = 1e-9) {
    if (name == "lemma1") return run_lemma1(seed, samples, slack);
    if (name == "subadditivity") return run_subadditivity(seed, samples, slack);
    if (name == "soundness") return run_soundness(seed, samples, slack);
    if (name == "continuity") return run_continuity(seed, samples, slack);
    if (name == "theorem1") return run_theorem1(seed, samples);
    if (name == "tensor") return run_tensor(seed, samples);
    throw domain_error("unknown propcheck suite: " + name);
}

inline std::vector<std::string> suite_names() {
    return {"lemma1", "subadditivity", "soundness", "continuity", "theorem1", "tensor"};
}

}  // namespace gqc
