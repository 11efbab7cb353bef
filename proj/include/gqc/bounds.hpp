#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "gqc/measures.hpp"
#include "gqc/states.hpp"

namespace gqc {

// ---------------------------------------------------------------------------
// Closed forms for the W and GHZ families.
// ---------------------------------------------------------------------------

// q-concurrence of |W_n> across any k|n-k cut: 1 - (k^q + (n-k)^q)/n^q.
inline double closed_form_w(int n, int k, double q) {
    if (n < 2 || k < 1 || 2 * k > n) throw domain_error("closed_form_w requires 1 <= k <= n/2");
    if (q < 2.0) throw domain_error("closed_form_w requires q >= 2");
    double nn = static_cast<double>(n);
    return 1.0 - std::pow(k / nn, q) - std::pow((n - k) / nn, q);
}

// q-concurrence of |GHZ_n> across any cut: 1 - 2^{1-q}.
inline double closed_form_ghz(double q) {
    if (q < 2.0) throw domain_error("closed_form_ghz requires q >= 2");
    return 1.0 - std::pow(2.0, 1.0 - q);
}

// Geometric-mean aggregate for |W_n>, evaluated in log space.
inline double gqc_w_closed(int n, double q) {
    if (n < 2) throw domain_error("gqc_w_closed requires n >= 2");
    double c = static_cast<double>(bipartition_count(n));
    double log_sum = 0;
    int half = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    for (int k = 1; k <= half; ++k)
        log_sum += static_cast<double>(binomial(n, k)) * std::log(closed_form_w(n, k, q));
    if (n % 2 == 0)
        log_sum += (static_cast<double>(binomial(n, n / 2)) / 2.0) * std::log(closed_form_ghz(q));
    return std::exp(log_sum / c);
}

inline double gqc_ghz_closed(int /*n*/, double q) { return closed_form_ghz(q); }

// ---------------------------------------------------------------------------
// Witness-fidelity lower bounds.
// ---------------------------------------------------------------------------

struct BoundCertificate {
    double value = 0.0;
    double witness_fidelity = 0.0;
    double s1 = 1.0;      // largest squared Schmidt coefficient of the witness
    int m = 2;            // smaller block dimension (bipartite) / max Schmidt rank (multipartite)
    double lambda = 0.0;  // clipped to [1/m, 1]
    double q = 2.0;

    nlohmann::json to_json() const {
        return {{"value", value},  {"witness_fidelity", witness_fidelity}, {"s1", s1},
                {"m", m},          {"lambda", lambda},                     {"q", q}};
    }
};

// Chord slope of the convex hull of R on [1/m, 1]:
// (m^{q-1} - 1) / (m^{q-2} (m - 1)).
inline double chord_coefficient(int m, double q) {
    if (m < 2) throw domain_error("chord coefficient requires m >= 2");
    double md = static_cast<double>(m);
    return (std::pow(md, q - 1.0) - 1.0) / (std::pow(md, q - 2.0) * (md - 1.0));
}

namespace detail {

inline BoundCertificate chord_certificate(double fidelity, double s1, int m, double q) {
    if (q < 2.0) throw domain_error("bound requires q >= 2");
    if (s1 <= kSchmidtRankTol) throw degenerate_witness_error("witness has no Schmidt weight");
    BoundCertificate cert;
    cert.witness_fidelity = fidelity;
    cert.s1 = s1;
    cert.m = m;
    cert.q = q;
    double inv_m = 1.0 / static_cast<double>(m);
    cert.lambda = std::clamp(fidelity / (s1 * m), inv_m, 1.0);
    cert.value = chord_coefficient(m, q) * (cert.lambda - inv_m);
    return cert;
}

}  // namespace detail

// Certified lower bound on C_q(rho) across one cut, from the fidelity with a
// pure witness. m is the smaller block dimension; s1 the witness's largest
// squared Schmidt coefficient across the cut.
inline BoundCertificate lower_bound_bipartite(const DensityMatrix& rho, const StateVector& witness,
                                              const Bipartition& cut, double q) {
    if (rho.dimension() != witness.dimension()) throw shape_error("witness dimension mismatch");
    auto sd = schmidt(witness, cut);
    int m = static_cast<int>(sd.squared_coefficients.size());
    if (m < 2) throw degenerate_witness_error("cut has a one-dimensional block");
    return detail::chord_certificate(fidelity_with_pure(rho, witness), sd.squared_coefficients.front(), m, q);
}

// Certified lower bound on the mixed-state GqC. s1 and m are the maxima of
// the witness's Schmidt data over all canonical bipartitions.
inline BoundCertificate lower_bound_multipartite(const DensityMatrix& rho, const StateVector& witness,
                                                 double q, int cap = kDefaultPartyCap) {
    if (rho.dimension() != witness.dimension()) throw shape_error("witness dimension mismatch");
    double s1 = 0.0;
    int m = 0;
    for (const Bipartition& cut : enumerate_bipartitions(witness.parties(), cap)) {
        auto sd = schmidt(witness, cut);
        s1 = std::max(s1, sd.squared_coefficients.front());
        m = std::max(m, sd.rank);
    }
    if (m < 2) throw degenerate_witness_error("witness is product across every cut");
    return detail::chord_certificate(fidelity_with_pure(rho, witness), s1, m, q);
}

// ---------------------------------------------------------------------------
// Convex-hull oracle for the chord coefficient.
// ---------------------------------------------------------------------------

// R(lambda) = L(t(lambda)) with
//   t(lambda) = (sqrt(lambda) + sqrt((m-1)(1-lambda)))^2 / m
//   L(t)      = 1 - t^q - (1-t)^q / (m-1)^{q-1}
inline double r_curve(double lambda, int m, double q) {
    if (m < 2) throw domain_error("r_curve requires m >= 2");
    double inv_m = 1.0 / static_cast<double>(m);
    if (lambda < inv_m - 1e-12 || lambda > 1.0 + 1e-12)
        throw domain_error("lambda must lie in [1/m, 1]");
    lambda = std::clamp(lambda, inv_m, 1.0);
    double root = std::sqrt(lambda) + std::sqrt((m - 1.0) * (1.0 - lambda));
    double t = root * root / m;
    t = std::clamp(t, 0.0, 1.0);
    return 1.0 - std::pow(t, q) - std::pow(1.0 - t, q) / std::pow(m - 1.0, q - 1.0);
}

struct ChordFit {
    double lambda_lo = 0, value_lo = 0;
    double lambda_hi = 0, value_hi = 0;
    double slope = 0;
    // Largest distance of any lower-hull vertex from the straight chord
    // through the endpoints; ~0 when the envelope is a single chord.
    double max_chord_deviation = 0;
};

// Samples R on a grid over [1/m, 1] and computes the lower convex envelope.
// Independent of the chord formula; exists to pin the hull coefficient
// numerically.
inline ChordFit convex_hull_oracle(int m, double q, int grid_size) {
    if (grid_size < 64) throw domain_error("grid_size must be >= 64");
    double lo = 1.0 / static_cast<double>(m);
    std::vector<std::pair<double, double>> pts(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        double lam = lo + (1.0 - lo) * i / (grid_size - 1);
        pts[i] = {lam, r_curve(lam, m, q)};
    }
    // Lower hull, monotone chain (points already sorted by lambda).
    std::vector<std::pair<double, double>> hull;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    ChordFit fit;
    fit.lambda_lo = hull.front().first;
    fit.value_lo = hull.front().second;
    fit.lambda_hi = hull.back().first;
    fit.value_hi = hull.back().second;
    fit.slope = (fit.value_hi - fit.value_lo) / (fit.lambda_hi - fit.lambda_lo);
    for (const auto& [lam, v] : hull) {
        double chord = fit.value_lo + fit.slope * (lam - fit.lambda_lo);
        fit.max_chord_deviation = std::max(fit.max_chord_deviation, std::abs(v - chord));
    }
    return fit;
}

// ---------------------------------------------------------------------------
// Continuity bounds.
// ---------------------------------------------------------------------------

// |C_q(psi1) - C_q(psi2)| <= d [(1 + eps/d)^q - 1] for states at trace
// distance eps, with d the smaller block dimension.
inline double continuity_bound_bipartite(int d, double epsilon, double q) {
    if (d < 2) throw domain_error("continuity bound requires d >= 2");
    if (epsilon < 0) throw domain_error("epsilon must be nonnegative");
    if (q < 2.0) throw domain_error("continuity bound requires q >= 2");
    return d * (std::pow(1.0 + epsilon / d, q) - 1.0);
}

// Multipartite continuity bound; stated for odd party count only, even n is
// rejected rather than guessed.
inline double continuity_bound_multipartite(int n, int d, double epsilon, double q) {
    if (n < 3 || n % 2 == 0) throw domain_error("multipartite continuity bound requires odd n >= 3");
    if (d < 2) throw domain_error("continuity bound requires d >= 2");
    if (epsilon < 0) throw domain_error("epsilon must be nonnegative");
    if (q < 2.0) throw domain_error("continuity bound requires q >= 2");
    double sum = 0;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        double di = std::pow(static_cast<double>(d), i);
        sum += static_cast<double>(binomial(n, i)) * di * (std::pow(1.0 + epsilon / di, q) - 1.0);
    }
    return std::pow(sum, 1.0 / static_cast<double>(bipartition_count(n)));
}

// ---------------------------------------------------------------------------
// Stochastic convex-roof upper estimator.
// ---------------------------------------------------------------------------

struct RoofEstimate {
    double upper = 0.0;
    int ensemble_size = 0;
    int iterations = 0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const {
        return {{"upper", upper}, {"ensemble_size", ensemble_size},
                {"iterations", iterations}, {"seed", seed}};
    }
};

namespace detail {

inline Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& a) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    return q.leftCols(a.cols());
}

}  // namespace detail

// Heuristic upper estimate of the convex-roof GqC: random isometric mixings
// of the eigendecomposition, refined by strictly-decrease-only hill descent
// with geometric step decay. Deterministic per seed; never a certificate.
inline RoofEstimate mixed_gqc_upper_estimate(const DensityMatrix& rho, double q, int ensemble_size,
                                             int iterations, std::uint64_t seed) {
    if (q < 2.0) throw domain_error("roof estimate requires q >= 2");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
    // Eigen returns the spectrum ascending; keep columns above the rank threshold.
    int rank = 0;
    for (Eigen::Index i = 0; i < rho.dimension(); ++i)
        if (es.eigenvalues()(i) > kSchmidtRankTol) ++rank;
    if (ensemble_size < rank) throw domain_error("ensemble size must be >= rank of rho");

    Eigen::MatrixXcd w(rho.dimension(), rank);  // sqrt(lambda_i) |e_i>
    int col = 0;
    for (Eigen::Index i = 0; i < rho.dimension(); ++i)
        if (es.eigenvalues()(i) > kSchmidtRankTol)
            w.col(col++) = std::sqrt(es.eigenvalues()(i)) * es.eigenvectors().col(i);

    auto member_state = [&](const Eigen::VectorXcd& v) {
        std::vector<cplx> amps(v.data(), v.data() + v.size());
        return StateVector(rho.local_dims(), std::move(amps));
    };

    RoofEstimate out;
    out.ensemble_size = ensemble_size;
    out.iterations = iterations;
    out.seed = seed;

    if (rank == 1) {  // the only decomposition is the state itself
        Eigen::VectorXcd v = w.col(0) / w.col(0).norm();
        out.upper = gqc_pure(member_state(v), q).aggregate;
        return out;
    }

    // Ensemble from a k x r isometry V (V^dagger V = I): columns of W V^T are
    // the subnormalized members and reproduce rho for any such V.
    auto objective = [&](const Eigen::MatrixXcd& v_iso) {
        Eigen::MatrixXcd members = w * v_iso.transpose();
        double total = 0;
        for (Eigen::Index j = 0; j < members.cols(); ++j) {
            double pj = members.col(j).squaredNorm();
            if (pj < 1e-14) continue;
            Eigen::VectorXcd psi = members.col(j) / std::sqrt(pj);
            total += pj * gqc_pure(member_state(psi), q).aggregate;
        }
        return total;
    };

    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_iso = [&]() {
        Eigen::MatrixXcd g(ensemble_size, rank);
        for (int r = 0; r < ensemble_size; ++r)
            for (int c = 0; c < rank; ++c) g(r, c) = cplx(gauss(rng), gauss(rng));
        return detail::orthonormal_columns(g);
    };

    Eigen::MatrixXcd best_v = Eigen::MatrixXcd::Identity(ensemble_size, rank);
    double best = objective(best_v);

    double step = 0.3;
    const double decay = 0.97;
    for (int it = 0; it < iterations; ++it) {
        Eigen::MatrixXcd cand;
        if (it % 16 == 0) {
            cand = random_iso();  // occasional restart
        } else {
            Eigen::MatrixXcd g(ensemble_size, rank);
            for (int r = 0; r < ensemble_size; ++r)
                for (int c = 0; c < rank; ++c) g(r, c) = step * cplx(gauss(rng), gauss(rng));
            cand = detail::orthonormal_columns(best_v + g);
        }
        double val = objective(cand);
        if (val < best) {
            best = val;
            best_v = cand;
        }
        step *= decay;
    }
    out.upper = best;
    return out;
}

}  // namespace gqc
