#pragma once

#include "hirano/types.hpp"

#include <vector>

namespace hirano {

/// Cluster label for one eigenvalue: the nearest of {-1, 0, 1} when within
/// tol_spec of it, otherwise Other.
enum class EigLabel { MinusOne, Zero, One, Other };

std::string_view to_string(EigLabel label);

/// Spectral classification of a matrix.
///   is_qnil      — every label is Zero (nilpotent spectrum)
///   is_gs_drazin — every label in {Zero, One}
///   is_hirano    — every label in {MinusOne, Zero, One}
struct ClassReport {
    std::vector<Complex> eigenvalues;
    std::vector<EigLabel> cluster;
    bool is_qnil = false;
    bool is_gs_drazin = false;
    bool is_hirano = false;
};

/// Outcome of the nilpotency decision. The power test is the verdict; the
/// spectral test runs alongside and any disagreement is surfaced here.
struct NilpotencyReport {
    bool by_power = false;
    bool by_spectrum = false;
    double power_residual = 0.0;  ///< ||(a / (1 + ||a||_F))^n||_F
    bool agree() const { return by_power == by_spectrum; }
};

/// Number of singular values exceeding tol_rank times the largest one.
/// The zero matrix has rank 0.
Index rank(const CMatrix& a, const NumericPolicy& pol);

/// Moore-Penrose pseudoinverse under the tol_rank cutoff.
CMatrix pinv(const CMatrix& a, const NumericPolicy& pol);

/// The n eigenvalues with algebraic multiplicity, ordered by descending
/// modulus, ties broken by descending real part then descending imaginary
/// part. Solver non-convergence throws EigensolverError.
std::vector<Complex> eigenvalues(const CMatrix& a);

/// True iff ||ab - ba||_F <= tol_residual * (1 + ||a||_F) * (1 + ||b||_F).
bool commutes(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol);

/// Basis of the commutant {x : xa = ax}, computed as the nullspace of the
/// commutation operator on n^2-dimensional coefficient space. Guarded by
/// n^2 <= max_dim.
std::vector<CMatrix> commutant_basis(const CMatrix& a, const NumericPolicy& pol);

/// True iff b commutes with every element of the commutant of a, i.e. b lies
/// in the double commutant of a.
bool in_comm2(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol);

/// Power test plus advisory spectral test.
NilpotencyReport nilpotency_report(const CMatrix& a, const NumericPolicy& pol);

/// True iff ||a^n||_F <= tol_residual * (1 + ||a||_F)^n with n the dimension.
bool is_nilpotent(const CMatrix& a, const NumericPolicy& pol);

/// Label each eigenvalue by the nearest of {-1, 0, 1} (within tol_spec) and
/// derive the qnil / gs-Drazin / Hirano flags.
ClassReport classify(const CMatrix& a, const NumericPolicy& pol);

}  // namespace hirano
