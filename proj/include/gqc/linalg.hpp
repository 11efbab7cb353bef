#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "gqc/partitions.hpp"
#include "gqc/state.hpp"

namespace gqc {

// Squared Schmidt coefficients of a pure state across one cut, sorted
// decreasing. The rank counts coefficients above a fixed 1e-10 threshold so
// that the m of the multipartite bound is reproducible.
struct SchmidtDecomposition {
    std::vector<double> squared_coefficients;
    int rank = 0;
};

inline constexpr double kSchmidtRankTol = 1e-10;

namespace detail {

// Offset tables for addressing the joint space by a (kept, traced) index
// pair. Party 0 is most significant.
struct SplitIndex {
    std::vector<std::int64_t> kept_offsets;
    std::vector<std::int64_t> env_offsets;
};

inline SplitIndex split_index(const std::vector<int>& dims, const std::vector<int>& kept) {
    int n = static_cast<int>(dims.size());
    std::vector<std::int64_t> strides(n, 1);
    for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];

    std::vector<int> env;
    std::vector<bool> is_kept(n, false);
    for (int p : kept) is_kept[p] = true;
    for (int p = 0; p < n; ++p)
        if (!is_kept[p]) env.push_back(p);

    auto offsets = [&](const std::vector<int>& parties) {
        std::vector<std::int64_t> out{0};
        for (int p : parties) {
            std::vector<std::int64_t> next;
            next.reserve(out.size() * dims[p]);
            for (std::int64_t base : out)
                for (int v = 0; v < dims[p]; ++v) next.push_back(base + v * strides[p]);
            out = std::move(next);
        }
        return out;
    };
    return SplitIndex{offsets(kept), offsets(env)};
}

// Reduced density operator of a pure state on the kept parties, as a raw
// Eigen matrix (no invariant re-checks; used on hot paths).
inline Eigen::MatrixXcd reduced_matrix(const StateVector& psi, const std::vector<int>& kept) {
    auto idx = split_index(psi.local_dims(), kept);
    auto dk = static_cast<Eigen::Index>(idx.kept_offsets.size());
    auto de = static_cast<Eigen::Index>(idx.env_offsets.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    const auto& a = psi.amplitudes();
    for (Eigen::Index r = 0; r < dk; ++r)
        for (Eigen::Index c = 0; c <= r; ++c) {
            cplx s{0, 0};
            for (Eigen::Index e = 0; e < de; ++e)
                s += a[idx.kept_offsets[r] + idx.env_offsets[e]] *
                     std::conj(a[idx.kept_offsets[c] + idx.env_offsets[e]]);
            out(r, c) = s;
            out(c, r) = std::conj(s);
        }
    return out;
}

inline Eigen::MatrixXcd reduced_matrix(const DensityMatrix& rho, const std::vector<int>& kept) {
    auto idx = split_index(rho.local_dims(), kept);
    auto dk = static_cast<Eigen::Index>(idx.kept_offsets.size());
    auto de = static_cast<Eigen::Index>(idx.env_offsets.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    for (Eigen::Index r = 0; r < dk; ++r)
        for (Eigen::Index c = 0; c < dk; ++c) {
            cplx s{0, 0};
            for (Eigen::Index e = 0; e < de; ++e)
                s += rho.matrix()(idx.kept_offsets[r] + idx.env_offsets[e],
                                  idx.kept_offsets[c] + idx.env_offsets[e]);
            out(r, c) = s;
        }
    return out;
}

inline void check_keep_set(const std::vector<int>& kept, int n) {
    if (kept.empty() || static_cast<int>(kept.size()) >= n)
        throw partition_error("keep set must be a nonempty proper subset of the parties");
    for (int p : kept)
        if (p < 0 || p >= n) throw partition_error("keep index out of range");
}

inline std::vector<int> subset_dims(const std::vector<int>& dims, const std::vector<int>& kept) {
    std::vector<int> out;
    out.reserve(kept.size());
    for (int p : kept) out.push_back(dims[p]);
    return out;
}

inline std::vector<double> sorted_spectrum(const Eigen::MatrixXcd& herm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

}  // namespace detail

template <typename State>
DensityMatrix partial_trace(const State& state, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    detail::check_keep_set(keep, state.parties());
    return DensityMatrix(detail::subset_dims(state.local_dims(), keep),
                         detail::reduced_matrix(state, keep));
}

// Real spectrum of a Hermitian operator, decreasing. Small negative noise
// (magnitude <= 1e-8) is clamped to zero.
inline std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
    auto ev = detail::sorted_spectrum(rho.matrix());
    for (double& v : ev) {
        if (v < -kPsdTol) throw domain_error("eigenvalue below PSD tolerance");
        if (v < 0) v = 0;
    }
    return ev;
}

inline SchmidtDecomposition schmidt(const StateVector& psi, const Bipartition& cut) {
    if (cut.parties() != psi.parties()) throw partition_error("cut party count mismatch");
    auto block = cut.block();
    auto comp = cut.complement();
    // Diagonalize the smaller block; the nonzero spectra of the two
    // reductions coincide for a pure state.
    std::int64_t db = detail::total_dimension(detail::subset_dims(psi.local_dims(), block));
    std::int64_t dc = detail::total_dimension(detail::subset_dims(psi.local_dims(), comp));
    const auto& side = (db <= dc) ? block : comp;
    auto ev = detail::sorted_spectrum(detail::reduced_matrix(psi, side));
    SchmidtDecomposition out;
    out.squared_coefficients.reserve(ev.size());
    for (double v : ev) out.squared_coefficients.push_back(std::max(v, 0.0));
    out.squared_coefficients.resize(static_cast<std::size_t>(std::min(db, dc)));
    for (double v : out.squared_coefficients)
        if (v > kSchmidtRankTol) ++out.rank;
    return out;
}

// Tr rho^q over the clamped spectrum; q >= 1.
inline double trace_power(const DensityMatrix& rho, double q) {
    if (q < 1.0) throw domain_error("trace power requires q >= 1");
    double s = 0;
    for (double v : hermitian_eigenvalues(rho)) s += std::pow(v, q);
    return s;
}

// <phi| rho |phi>.
inline double fidelity_with_pure(const DensityMatrix& rho, const StateVector& phi) {
    if (rho.dimension() != phi.dimension()) throw shape_error("fidelity dimension mismatch");
    Eigen::Map<const Eigen::VectorXcd> v(phi.amplitudes().data(), phi.dimension());
    return (v.adjoint() * rho.matrix() * v).value().real();
}

// Trace norm of the difference of the two rank-1 projectors,
// 2 sqrt(1 - |<psi1|psi2>|^2); the distance behind the continuity bounds.
inline double state_distance(const StateVector& psi1, const StateVector& psi2) {
    double ov = std::norm(psi1.overlap(psi2));
    return 2.0 * std::sqrt(std::max(0.0, 1.0 - ov));
}

// Trace norm via singular values; used by the contractivity checks.
inline double trace_norm(const Eigen::MatrixXcd& m) {
    return m.jacobiSvd().singularValues().sum();
}

}  // namespace gqc
