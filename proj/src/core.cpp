#include "hirano/core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <tuple>

namespace hirano {

std::string_view to_string(EigLabel label) {
    switch (label) {
        case EigLabel::MinusOne: return "MinusOne";
        case EigLabel::Zero: return "Zero";
        case EigLabel::One: return "One";
        case EigLabel::Other: return "Other";
    }
    return "Other";
}

namespace {

Eigen::JacobiSVD<Dense> svd_of(const CMatrix& a, unsigned options = 0) {
    return Eigen::JacobiSVD<Dense>(a.mat(), options);
}

Index rank_from_singular_values(const Eigen::VectorXd& sv, double tol_rank) {
    if (sv.size() == 0) return 0;
    const double top = sv(0);  // Eigen returns singular values in decreasing order
    if (top == 0.0) return 0;
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol_rank * top) ++r;
    return r;
}

}  // namespace

Index rank(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const auto svd = svd_of(a);
    return rank_from_singular_values(svd.singularValues(), pol.tol_rank);
}

CMatrix pinv(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const auto svd = svd_of(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const Index r = rank_from_singular_values(sv, pol.tol_rank);
    Dense sigma_inv = Dense::Zero(a.dim(), a.dim());
    for (Index i = 0; i < r; ++i) sigma_inv(i, i) = Complex(1.0 / sv(i), 0.0);
    return CMatrix(svd.matrixV() * sigma_inv * svd.matrixU().adjoint());
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
    Eigen::ComplexSchur<Dense> schur(a.mat(), /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        throw EigensolverError("eigenvalues: Schur iteration did not converge (n=" +
                               std::to_string(a.dim()) + ")");
    std::vector<Complex> ev(static_cast<std::size_t>(a.dim()));
    for (Index i = 0; i < a.dim(); ++i) ev[static_cast<std::size_t>(i)] = schur.matrixT()(i, i);
    std::sort(ev.begin(), ev.end(), [](const Complex& x, const Complex& y) {
        return std::make_tuple(-std::abs(x), -x.real(), -x.imag()) <
               std::make_tuple(-std::abs(y), -y.real(), -y.imag());
    });
    return ev;
}

bool commutes(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    CMatrix::check_same_dim(a, b, "commutes");
    const double resid = (a.mat() * b.mat() - b.mat() * a.mat()).norm();
    return resid <= pol.tol_residual * rel_scale(a) * rel_scale(b);
}

std::vector<CMatrix> commutant_basis(const CMatrix& a, const NumericPolicy& pol) {
    pol.validate();
    const Index n = a.dim();
    if (n * n > pol.max_dim)
        throw DimensionError("commutant_basis: nullspace computation is n^2-dimensional, n^2=" +
                             std::to_string(n * n) + " > max_dim=" + std::to_string(pol.max_dim));

    // vec(xa - ax) = (a^T kron I - I kron a) vec(x), column-major vec.
    Dense op = Dense::Zero(n * n, n * n);
    const Dense& m = a.mat();
    for (Index col = 0; col < n; ++col)
        for (Index row = 0; row < n; ++row) {
            // Block (row-of-blocks = col index of x entry).
            for (Index k = 0; k < n; ++k) {
                op(col * n + row, k * n + row) += m(k, col);    // (a^T kron I)
                op(col * n + row, col * n + k) -= m(row, k);    // -(I kron a)
            }
        }

    Eigen::JacobiSVD<Dense> svd(op, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    std::vector<CMatrix> basis;
    for (Index i = 0; i < sv.size(); ++i) {
        if (top == 0.0 || sv(i) <= pol.tol_rank * top) {
            Dense x(n, n);
            for (Index col = 0; col < n; ++col)
                for (Index row = 0; row < n; ++row) x(row, col) = svd.matrixV()(col * n + row, i);
            basis.emplace_back(std::move(x));
        }
    }
    return basis;
}

bool in_comm2(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol) {
    CMatrix::check_same_dim(a, b, "in_comm2");
    for (const CMatrix& x : commutant_basis(a, pol))
        if (!commutes(b, x, pol)) return false;
    return true;
}

NilpotencyReport nilpotency_report(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    NilpotencyReport rep;

    // ||a^n|| <= tol * (1 + ||a||)^n, evaluated on the normalized matrix
    // a / (1 + ||a||) so powers cannot overflow.
    const CMatrix m = a / Complex(rel_scale(a), 0.0);
    rep.power_residual = matpow(m, static_cast<unsigned long>(a.dim())).norm();
    rep.by_power = rep.power_residual <= pol.tol_residual;

    rep.by_spectrum = true;
    for (const Complex& ev : eigenvalues(a))
        if (std::abs(ev) > pol.tol_spec) rep.by_spectrum = false;
    return rep;
}

bool is_nilpotent(const CMatrix& a, const NumericPolicy& pol) {
    return nilpotency_report(a, pol).by_power;
}

ClassReport classify(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    ClassReport rep;
    rep.eigenvalues = eigenvalues(a);
    rep.cluster.reserve(rep.eigenvalues.size());

    static constexpr double centers[] = {-1.0, 0.0, 1.0};
    static constexpr EigLabel labels[] = {EigLabel::MinusOne, EigLabel::Zero, EigLabel::One};
    for (const Complex& ev : rep.eigenvalues) {
        EigLabel best = EigLabel::Other;
        double best_dist = pol.tol_spec;
        for (int c = 0; c < 3; ++c) {
            const double d = std::abs(ev - Complex(centers[c], 0.0));
            if (d <= best_dist) {
                best = labels[c];
                best_dist = d;
            }
        }
        rep.cluster.push_back(best);
    }

    rep.is_qnil = true;
    rep.is_gs_drazin = true;
    rep.is_hirano = true;
    for (EigLabel l : rep.cluster) {
        rep.is_qnil = rep.is_qnil && l == EigLabel::Zero;
        rep.is_gs_drazin = rep.is_gs_drazin && (l == EigLabel::Zero || l == EigLabel::One);
        rep.is_hirano = rep.is_hirano && l != EigLabel::Other;
    }
    return rep;
}

}  // namespace hirano
