#pragma once

#include "hirano/hirano.hpp"
#include "hirano/types.hpp"

namespace hirano {

/// 2x2 operator matrix M = [[A, B], [C, D]] with A (p x p) and D (q x q)
/// square and conformal off-diagonal blocks B (p x q), C (q x p). The
/// off-diagonal blocks may be rectangular, so they are stored as raw dense
/// blocks rather than CMatrix.
class Block2x2 {
public:
    Block2x2(CMatrix A, Dense B, Dense C, CMatrix D);

    const CMatrix& A() const noexcept { return A_; }
    const Dense& B() const noexcept { return B_; }
    const Dense& C() const noexcept { return C_; }
    const CMatrix& D() const noexcept { return D_; }
    const CMatrix& assembled() const noexcept { return assembled_; }
    Index p() const noexcept { return A_.dim(); }
    Index q() const noexcept { return D_.dim(); }

private:
    CMatrix A_;
    Dense B_;
    Dense C_;
    CMatrix D_;
    CMatrix assembled_;
};

/// W = A A^d + A^d B C A^d plus the trivial-generalized-Schur-complement
/// check D = C A^d B.
struct SchurData {
    CMatrix W;
    bool schur_ok = false;
};

SchurData schur_data(const Block2x2& m, const NumericPolicy& pol);

/// has_hirano(assembled) for C = 0 and Hirano-invertible A, D; true under
/// the preconditions. Violations throw PreconditionError naming the
/// condition.
bool triangular_hirano(const Block2x2& m, const NumericPolicy& pol);

/// has_hirano(assembled) under BC = CB = 0, CA(I - A^pi) = D^pi D C and
/// A^pi A B = B D (I - D^pi), with A, D Hirano-invertible.
bool thm_5_3(const Block2x2& m, const NumericPolicy& pol);

/// has_hirano(assembled) under BC = CB = 0, CA(I - A^pi) = (I - D^pi) D C
/// and A^pi A B = B D D^pi, with A, D Hirano-invertible.
bool prop_5_4(const Block2x2& m, const NumericPolicy& pol);

/// has_hirano(assembled) for the trivial-generalized-Schur-complement case:
/// D = C A^d B, A^pi B C = B C A^pi = A A^pi B = 0, A Hirano-invertible and
/// A W Hirano-invertible with W = A A^d + A^d B C A^d.
bool thm_5_5(const Block2x2& m, const NumericPolicy& pol);

}  // namespace hirano
