#pragma once

#include "hirano/core.hpp"
#include "hirano/types.hpp"

#include <optional>

namespace hirano {

/// Drazin data for one matrix: index, Drazin inverse, spectral idempotent,
/// and the residuals of the three defining identities
///   dinv a dinv = dinv,  a dinv = dinv a,  a - a^2 dinv nilpotent.
/// spec_idem = I - a dinv projects onto the generalized eigenspace of 0.
struct DrazinData {
    Index index = 0;
    CMatrix dinv;
    CMatrix spec_idem;
    ResidualReport residuals;
};

/// Smallest k >= 0 with rank(a^k) = rank(a^(k+1)); a^0 = I, so invertible
/// matrices return 0.
Index drazin_index(const CMatrix& a, const NumericPolicy& pol);

/// Drazin inverse via the rank-stabilization index k and the pseudoinverse
/// formula a^k (a^(2k+1))^+ a^k. Residual check failures (ill-conditioning)
/// throw ResidualError carrying the residual values.
DrazinData drazin_inverse(const CMatrix& a, const NumericPolicy& pol);

/// Idempotent projection onto the direct sum of generalized eigenspaces whose
/// eigenvalues cluster to `center` (one of -1, 0, 1), computed as
/// I - s s^d with s = a - center I. Commutes with a. An eigenvalue within
/// tol_spec of two centers throws ClusterOverlapError.
CMatrix spectral_projector(const CMatrix& a, const Complex& center, const NumericPolicy& pol);

/// gs-Drazin decomposition a = e + w with e idempotent, ea = ae, w nilpotent.
struct GsDecomposition {
    CMatrix e;
    CMatrix w;
};

/// Empty when a - a^2 fails the nilpotency test; otherwise e is the
/// eigenvalue-1 spectral projector (the unique choice) and w = a - e.
std::optional<GsDecomposition> gs_drazin(const CMatrix& a, const NumericPolicy& pol);

}  // namespace hirano
