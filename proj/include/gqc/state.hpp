#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "gqc/errors.hpp"

namespace gqc {

using cplx = std::complex<double>;

inline constexpr double kNormTol = 1e-9;
inline constexpr double kHermTol = 1e-9;
inline constexpr double kPsdTol = 1e-8;

namespace detail {

inline std::int64_t total_dimension(const std::vector<int>& dims) {
    if (dims.empty()) throw shape_error("at least one party required");
    std::int64_t d = 1;
    for (int di : dims) {
        if (di < 1) throw shape_error("local dimensions must be positive");
        d *= di;
    }
    return d;
}

}  // namespace detail

// Normalized pure state over n parties. Amplitudes are stored row-major over
// the parties with party 0 most significant; that ordering is part of the
// file-format contract.
class StateVector {
public:
    StateVector(std::vector<int> local_dims, std::vector<cplx> amplitudes)
        : dims_(std::move(local_dims)), amps_(std::move(amplitudes)) {
        auto total = detail::total_dimension(dims_);
        if (static_cast<std::int64_t>(amps_.size()) != total)
            throw shape_error("amplitude count does not match product of local dimensions");
        double n2 = 0;
        for (const cplx& a : amps_) n2 += std::norm(a);
        if (std::abs(n2 - 1.0) > kNormTol)
            throw normalization_error("state vector is not normalized");
    }

    static StateVector basis(std::vector<int> local_dims, std::int64_t index) {
        auto total = detail::total_dimension(local_dims);
        if (index < 0 || index >= total) throw shape_error("basis index out of range");
        std::vector<cplx> a(total, cplx{0, 0});
        a[index] = 1.0;
        return StateVector(std::move(local_dims), std::move(a));
    }

    int parties() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& local_dims() const { return dims_; }
    std::int64_t dimension() const { return static_cast<std::int64_t>(amps_.size()); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& operator[](std::int64_t i) const { return amps_[i]; }

    cplx overlap(const StateVector& other) const {
        if (other.dimension() != dimension()) throw shape_error("overlap dimension mismatch");
        cplx s{0, 0};
        for (std::int64_t i = 0; i < dimension(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
        return s;
    }

private:
    std::vector<int> dims_;
    std::vector<cplx> amps_;
};

// Hermitian, unit-trace, positive-semidefinite operator on the joint space.
class DensityMatrix {
public:
    DensityMatrix(std::vector<int> local_dims, Eigen::MatrixXcd entries)
        : dims_(std::move(local_dims)), mat_(std::move(entries)) {
        auto total = detail::total_dimension(dims_);
        if (mat_.rows() != total || mat_.cols() != total)
            throw shape_error("matrix size does not match product of local dimensions");
        if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
            throw symmetry_error("matrix is not Hermitian within tolerance");
        if (std::abs(mat_.trace().real() - 1.0) > kNormTol || std::abs(mat_.trace().imag()) > kNormTol)
            throw normalization_error("density matrix trace is not 1");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kPsdTol)
            throw domain_error("density matrix has a negative eigenvalue beyond tolerance");
    }

    static DensityMatrix from_pure(const StateVector& psi) {
        Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), psi.dimension());
        return DensityMatrix(psi.local_dims(), v * v.adjoint());
    }

    int parties() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& local_dims() const { return dims_; }
    std::int64_t dimension() const { return mat_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

private:
    std::vector<int> dims_;
    Eigen::MatrixXcd mat_;
};

// JSON schema:
//   state:   { "local_dims": [d1,...], "amplitudes": [[re, im], ...] }
//   density: { "local_dims": [d1,...], "rows": [[[re, im], ...], ...] }
inline nlohmann::json to_json(const StateVector& psi) {
    nlohmann::json j;
    j["local_dims"] = psi.local_dims();
    auto& a = j["amplitudes"] = nlohmann::json::array();
    for (const cplx& c : psi.amplitudes()) a.push_back({c.real(), c.imag()});
    return j;
}

inline StateVector state_from_json(const nlohmann::json& j) {
    std::vector<int> dims = j.at("local_dims").get<std::vector<int>>();
    std::vector<cplx> amps;
    for (const auto& e : j.at("amplitudes"))
        amps.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return StateVector(std::move(dims), std::move(amps));
}

inline nlohmann::json to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["local_dims"] = rho.local_dims();
    auto& rows = j["rows"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < rho.dimension(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < rho.dimension(); ++c)
            row.push_back({rho.matrix()(r, c).real(), rho.matrix()(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return j;
}

inline DensityMatrix density_from_json(const nlohmann::json& j) {
    std::vector<int> dims = j.at("local_dims").get<std::vector<int>>();
    const auto& rows = j.at("rows");
    Eigen::Index d = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const auto& row = rows.at(r);
        if (static_cast<Eigen::Index>(row.size()) != d) throw shape_error("density matrix rows are ragged");
        for (Eigen::Index c = 0; c < d; ++c)
            m(r, c) = cplx(row.at(c).at(0).get<double>(), row.at(c).at(1).get<double>());
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

}  // namespace gqc
