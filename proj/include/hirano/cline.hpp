#pragma once

#include "hirano/hirano.hpp"
#include "hirano/types.hpp"

namespace hirano {

/// Four-tuple (a, c, d, b) with the transfer hypotheses evaluated at
/// construction:
///   hyp_weak   — (ac)^2 a = (db)^2 a  and  (ac)^2 d = (db)^2 d
///   hyp_strong — aca = dba  and  dbd = acd
/// hyp_strong implies hyp_weak; the constructor verifies the implication.
struct QuadInstance {
    CMatrix a;
    CMatrix b;
    CMatrix c;
    CMatrix d;
    bool hyp_weak = false;
    bool hyp_strong = false;

    QuadInstance(CMatrix a_, CMatrix b_, CMatrix c_, CMatrix d_, const NumericPolicy& pol);
};

/// b ((ab)^d)^2 a, asserted equal to (ba)^d to tol_residual; an assertion
/// failure throws ResidualError with the residual.
CMatrix cline_formula(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol);

/// (hyp_weak, hyp_strong) re-evaluated under the given policy.
std::pair<bool, bool> quad_hypotheses(const QuadInstance& q, const NumericPolicy& pol);

/// Nilpotency-transfer detail: the verdict compares (ac)^2 against (bd)^2,
/// and the (db)^2 ordering is evaluated alongside so any divergence between
/// the two product orders can be reported rather than silently resolved.
struct QnilTransferDetail {
    bool verdict = false;    ///< is_nilpotent((ac)^2) == is_nilpotent((bd)^2)
    bool ac2_nilpotent = false;
    bool bd2_nilpotent = false;
    bool db2_nilpotent = false;
    bool orderings_agree = false;  ///< (bd)^2 and (db)^2 verdicts coincide
};

QnilTransferDetail qnil_transfer_detail(const QuadInstance& q, const NumericPolicy& pol);

/// True iff is_nilpotent((ac)^2) == is_nilpotent((bd)^2). Requires hyp_weak.
bool qnil_transfer(const QuadInstance& q, const NumericPolicy& pol);

/// True iff has_hirano(ac) == has_hirano(bd). Requires hyp_weak.
bool hirano_transfer(const QuadInstance& q, const NumericPolicy& pol);

/// Finite truncation of the shift-based counterexample quad: sigma maps basis
/// coordinates (x1, x2, ...) to (0, x1, x2, 0, ..., 0) on trunc-dimensional
/// space, and the 2x2 block elements are
///   a = [[0, sigma], [0, 0]],  b = [[I, 0], [0, 0]],
///   c = [[I, 0], [I, I]],      d = a,
/// each of dimension 2*trunc. Satisfies hyp_weak but not hyp_strong, and ac
/// is nilpotent. Requires trunc >= 3 so that sigma^2 != 0 = sigma^3.
QuadInstance example_3_7(Index trunc, const NumericPolicy& pol = {});

}  // namespace hirano
