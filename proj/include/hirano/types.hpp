#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hirano {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Construction invariant violated (non-square, empty, or non-finite entries).
class InvalidMatrixError : public Error {
public:
    using Error::Error;
};

/// Operand dimensions disagree, or the policy's dimension guard is exceeded.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// The eigensolver failed to converge. Reported as a failure, never as a
/// wrong answer.
class EigensolverError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue sits within tol_spec of two cluster centers at once, so the
/// requested spectral projector is not well defined.
class ClusterOverlapError : public Error {
public:
    using Error::Error;
};

/// A computed quantity failed its defining residual check (usually a symptom
/// of ill-conditioning). The message carries the offending residual values.
class ResidualError : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold. Distinct from a false
/// verdict: the message names the violated condition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Tolerance bundle governing rank, spectral clustering, and residual
/// decisions. Rank decisions are at least as strict as spectral clustering
/// (tol_rank <= tol_spec).
struct NumericPolicy {
    double tol_rank = 1e-10;     ///< singular-value cutoff, relative to the largest
    double tol_spec = 1e-6;      ///< eigenvalue-to-cluster-center distance
    double tol_residual = 1e-8;  ///< matrix-identity residual cutoff, relative scale
    Index max_dim = 64;          ///< guard on matrix dimension

    void validate() const {
        if (!(tol_rank > 0.0) || !(tol_spec > 0.0) || !(tol_residual > 0.0))
            throw PreconditionError("NumericPolicy: all tolerances must be strictly positive");
        if (tol_rank > tol_spec)
            throw PreconditionError("NumericPolicy: tol_rank must not exceed tol_spec");
        if (max_dim < 1)
            throw PreconditionError("NumericPolicy: max_dim must be positive");
    }
};

/// Dense square complex matrix, the carrier for every algebra element.
/// Invariants enforced at construction: at least 1x1, square, all entries
/// finite.
class CMatrix {
public:
    explicit CMatrix(Dense m) : m_(std::move(m)) {
        if (m_.rows() == 0 || m_.cols() == 0)
            throw InvalidMatrixError("CMatrix: dimension must be positive");
        if (m_.rows() != m_.cols())
            throw InvalidMatrixError("CMatrix: matrix must be square, got " +
                                     std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
        if (!m_.allFinite())
            throw InvalidMatrixError("CMatrix: entries must be finite");
    }

    /// Row-major entry list, e.g. CMatrix::from_rows({{1, 0}, {0, 1}}).
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        const Index n = static_cast<Index>(rows.size());
        Dense m(n, n);
        Index i = 0;
        for (const auto& row : rows) {
            if (static_cast<Index>(row.size()) != n)
                throw InvalidMatrixError("CMatrix: row " + std::to_string(i) + " has wrong length");
            Index j = 0;
            for (const Complex& v : row) m(i, j++) = v;
            ++i;
        }
        return CMatrix(std::move(m));
    }

    static CMatrix identity(Index n) { return CMatrix(Dense::Identity(n, n)); }
    static CMatrix zero(Index n) { return CMatrix(Dense::Zero(n, n)); }
    static CMatrix diagonal(const std::vector<Complex>& d) {
        Dense m = Dense::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
        for (Index i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return CMatrix(std::move(m));
    }

    Index dim() const noexcept { return m_.rows(); }
    const Dense& mat() const noexcept { return m_; }
    Complex operator()(Index i, Index j) const { return m_(i, j); }

    double norm() const { return m_.norm(); }  // Frobenius
    CMatrix transpose() const { return CMatrix(m_.transpose()); }
    CMatrix adjoint() const { return CMatrix(m_.adjoint()); }

    friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
        check_same_dim(x, y, "operator+");
        return CMatrix(x.m_ + y.m_);
    }
    friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
        check_same_dim(x, y, "operator-");
        return CMatrix(x.m_ - y.m_);
    }
    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        check_same_dim(x, y, "operator*");
        return CMatrix(x.m_ * y.m_);
    }
    friend CMatrix operator*(const Complex& s, const CMatrix& x) { return CMatrix(s * x.m_); }
    friend CMatrix operator*(const CMatrix& x, const Complex& s) { return CMatrix(s * x.m_); }
    friend CMatrix operator/(const CMatrix& x, const Complex& s) { return CMatrix(x.m_ / s); }
    friend CMatrix operator-(const CMatrix& x) { return CMatrix(-x.m_); }

    static void check_same_dim(const CMatrix& x, const CMatrix& y, std::string_view where) {
        if (x.dim() != y.dim())
            throw DimensionError(std::string(where) + ": dimension mismatch, " +
                                 std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
    }

private:
    Dense m_;
};

/// 1 + ||x||_F, the relative scale used in residual decisions.
inline double rel_scale(const CMatrix& x) { return 1.0 + x.norm(); }

/// ||x - y||_F / (1 + max(||x||_F, ||y||_F)).
inline double rel_residual(const CMatrix& x, const CMatrix& y) {
    CMatrix::check_same_dim(x, y, "rel_residual");
    return (x.mat() - y.mat()).norm() / (1.0 + std::max(x.norm(), y.norm()));
}

inline bool approx_equal(const CMatrix& x, const CMatrix& y, const NumericPolicy& pol) {
    return rel_residual(x, y) <= pol.tol_residual;
}

/// ||x||_F <= tol_residual * scale.
inline bool approx_zero(const CMatrix& x, double scale, const NumericPolicy& pol) {
    return x.norm() <= pol.tol_residual * scale;
}

/// x^k by binary powering; x^0 is the identity.
inline CMatrix matpow(const CMatrix& x, unsigned long k) {
    CMatrix acc = CMatrix::identity(x.dim());
    CMatrix base = x;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

/// Named residual values attached to a computed certificate.
struct ResidualEntry {
    std::string name;
    double value;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;

    void add(std::string name, double value) { entries.push_back({std::move(name), value}); }

    double max() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, e.value);
        return m;
    }

    /// Value of a named entry; throws if absent.
    double get(std::string_view name) const {
        for (const auto& e : entries)
            if (e.name == name) return e.value;
        throw Error("ResidualReport: no entry named '" + std::string(name) + "'");
    }

    bool all_below(double tol) const { return max() <= tol; }
};

inline void check_dim_guard(const CMatrix& a, const NumericPolicy& pol) {
    pol.validate();
    if (a.dim() > pol.max_dim)
        throw DimensionError("dimension guard exceeded: n=" + std::to_string(a.dim()) +
                             " > max_dim=" + std::to_string(pol.max_dim));
}

}  // namespace hirano
