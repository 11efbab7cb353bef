#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gqc/linalg.hpp"
#include "gqc/state.hpp"

namespace gqc {

// |W_n> = (|10...0> + |01...0> + ... + |00...1>) / sqrt(n)
inline StateVector w_state(int n) {
    if (n < 2) throw domain_error("W state requires n >= 2");
    std::int64_t dim = std::int64_t{1} << n;
    std::vector<cplx> a(dim, cplx{0, 0});
    double c = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) a[std::int64_t{1} << k] = c;
    return StateVector(std::vector<int>(n, 2), std::move(a));
}

// |GHZ_n> = (|00...0> + |11...1>) / sqrt(2)
inline StateVector ghz_state(int n) {
    if (n < 2) throw domain_error("GHZ state requires n >= 2");
    std::int64_t dim = std::int64_t{1} << n;
    std::vector<cplx> a(dim, cplx{0, 0});
    a[0] = a[dim - 1] = 1.0 / std::sqrt(2.0);
    return StateVector(std::vector<int>(n, 2), std::move(a));
}

struct NoisyStateSpec {
    StateVector base;
    double visibility = 1.0;  // weight of the pure part
};

// visibility * |base><base| + (1 - visibility)/dim * I
inline DensityMatrix noisy_state(const NoisyStateSpec& spec) {
    if (spec.visibility < 0.0 || spec.visibility > 1.0)
        throw domain_error("visibility must lie in [0, 1]");
    auto dim = spec.base.dimension();
    Eigen::Map<const Eigen::VectorXcd> v(spec.base.amplitudes().data(), dim);
    Eigen::MatrixXcd m = spec.visibility * (v * v.adjoint());
    m += ((1.0 - spec.visibility) / static_cast<double>(dim)) *
         Eigen::MatrixXcd::Identity(dim, dim);
    return DensityMatrix(spec.base.local_dims(), std::move(m));
}

namespace detail {
inline void check_theta(double theta) {
    // Open-interval parameter; endpoints are accepted (degenerate members of
    // the family), values outside [0, pi/2] are not.
    if (theta < 0.0 || theta > std::numbers::pi / 2 + 1e-12)
        throw domain_error("theta must lie in [0, pi/2]");
}
}  // namespace detail

// (cos t |000> + sin t |001>)/sqrt(2) + |111>/sqrt(2)
inline StateVector class1(double theta) {
    detail::check_theta(theta);
    std::vector<cplx> a(8, cplx{0, 0});
    double r = 1.0 / std::sqrt(2.0);
    a[0] = r * std::cos(theta);
    a[1] = r * std::sin(theta);
    a[7] = r;
    return StateVector({2, 2, 2}, std::move(a));
}

// cos t |000> + sin t |111>
inline StateVector class2(double theta) {
    detail::check_theta(theta);
    std::vector<cplx> a(8, cplx{0, 0});
    a[0] = std::cos(theta);
    a[7] = std::sin(theta);
    return StateVector({2, 2, 2}, std::move(a));
}

// cos t (cos(2pi/3)|0100> + sin(2pi/3)|1000>) + sin t |0111>
inline StateVector four_qubit_family(double theta) {
    detail::check_theta(theta);
    std::vector<cplx> a(16, cplx{0, 0});
    double inner = 2.0 * std::numbers::pi / 3.0;
    a[0b0100] = std::cos(theta) * std::cos(inner);
    a[0b1000] = std::cos(theta) * std::sin(inner);
    a[0b0111] = std::sin(theta);
    return StateVector({2, 2, 2, 2}, std::move(a));
}

inline StateVector product_state(const std::vector<StateVector>& factors) {
    if (factors.empty()) throw shape_error("product of zero factors");
    std::vector<int> dims;
    std::vector<cplx> a{cplx{1, 0}};
    for (const StateVector& f : factors) {
        for (int d : f.local_dims()) dims.push_back(d);
        std::vector<cplx> next;
        next.reserve(a.size() * f.amplitudes().size());
        for (const cplx& x : a)
            for (const cplx& y : f.amplitudes()) next.push_back(x * y);
        a = std::move(next);
    }
    return StateVector(std::move(dims), std::move(a));
}

// Tensor product of two states with equal party count, regrouped so party i
// of the result is the pair (party i of a, party i of b). Keeps the result
// n-partite, which is what the subadditivity comparison needs.
inline StateVector pairwise_product(const StateVector& a, const StateVector& b) {
    if (a.parties() != b.parties()) throw shape_error("pairwise product needs equal party counts");
    int n = a.parties();
    std::vector<int> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = a.local_dims()[i] * b.local_dims()[i];
    auto total = a.dimension() * b.dimension();
    std::vector<cplx> out(total, cplx{0, 0});
    // Combined digit at party i is (digit_a * d_b + digit_b).
    std::vector<std::int64_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
    for (std::int64_t ia = 0; ia < a.dimension(); ++ia) {
        std::int64_t ra = ia;
        std::vector<int> da(n);
        for (int i = n - 1; i >= 0; --i) {
            da[i] = static_cast<int>(ra % a.local_dims()[i]);
            ra /= a.local_dims()[i];
        }
        for (std::int64_t ib = 0; ib < b.dimension(); ++ib) {
            std::int64_t rb = ib;
            std::int64_t idx = 0;
            for (int i = n - 1; i >= 0; --i) {
                int db = static_cast<int>(rb % b.local_dims()[i]);
                rb /= b.local_dims()[i];
                idx += stride[i] * (da[i] * b.local_dims()[i] + db);
            }
            out[idx] = a[ia] * b[ib];
        }
    }
    return StateVector(std::move(dims), std::move(out));
}

using Rng = std::mt19937_64;

inline StateVector haar_random_pure(const std::vector<int>& local_dims, Rng& rng) {
    auto total = detail::total_dimension(local_dims);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> a(total);
    double n2 = 0;
    for (auto& c : a) {
        c = cplx(gauss(rng), gauss(rng));
        n2 += std::norm(c);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto& c : a) c *= inv;
    return StateVector(local_dims, std::move(a));
}

inline StateVector haar_random_pure(const std::vector<int>& local_dims, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_pure(local_dims, rng);
}

// Haar-distributed unitary via QR of a Ginibre matrix with the standard
// phase fix.
inline Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < d; ++c) {
        cplx diag = r(c, c);
        cplx phase = (std::abs(diag) > 0) ? diag / std::abs(diag) : cplx{1, 0};
        q.col(c) *= phase;
    }
    return q;
}

// Random full- or fixed-rank mixed state (Gaussian purification).
inline DensityMatrix random_density(const std::vector<int>& local_dims, int rank, Rng& rng) {
    auto total = detail::total_dimension(local_dims);
    if (rank < 1) throw domain_error("rank must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(total, rank);
    for (Eigen::Index r = 0; r < total; ++r)
        for (int c = 0; c < rank; ++c) g(r, c) = cplx(gauss(rng), gauss(rng));
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(local_dims, std::move(m));
}

// Independent Haar-random unitary on each party; used by the local-unitary
// invariance checks.
inline StateVector apply_local_unitaries(const StateVector& psi,
                                         const std::vector<Eigen::MatrixXcd>& us) {
    int n = psi.parties();
    if (static_cast<int>(us.size()) != n) throw shape_error("one unitary per party required");
    std::vector<cplx> a = psi.amplitudes();
    const auto& dims = psi.local_dims();
    std::vector<std::int64_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
    for (int p = 0; p < n; ++p) {
        int d = dims[p];
        if (us[p].rows() != d || us[p].cols() != d) throw shape_error("unitary size mismatch");
        std::vector<cplx> next(a.size(), cplx{0, 0});
        for (std::int64_t base = 0; base < static_cast<std::int64_t>(a.size()); ++base) {
            int digit = static_cast<int>((base / stride[p]) % d);
            std::int64_t rest = base - digit * stride[p];
            for (int v = 0; v < d; ++v) next[rest + v * stride[p]] += us[p](v, digit) * a[base];
        }
        a = std::move(next);
    }
    return StateVector(dims, std::move(a));
}

}  // namespace gqc
