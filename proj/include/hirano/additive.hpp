#pragma once

#include "hirano/hirano.hpp"
#include "hirano/types.hpp"

namespace hirano {

/// Pair (a, b) with the additive-theorem hypotheses evaluated at
/// construction:
///   weak_comm   — a^2 b = a b a  and  b^2 a = b a b
///   full_comm   — a b = b a (implies weak_comm)
///   both_hirano — has_hirano(a) and has_hirano(b)
struct PairInstance {
    CMatrix a;
    CMatrix b;
    bool weak_comm = false;
    bool full_comm = false;
    bool both_hirano = false;

    PairInstance(CMatrix a_, CMatrix b_, const NumericPolicy& pol);
};

/// has_hirano(ab); true under the preconditions weak_comm and both_hirano.
bool product_hirano(const PairInstance& p, const NumericPolicy& pol);

/// (has_hirano(a + b), has_hirano(I + a^d b)); the two booleans are equal
/// under the preconditions weak_comm and both_hirano.
std::pair<bool, bool> additive_equiv(const PairInstance& p, const NumericPolicy& pol);

/// has_hirano(a + b) under the splitting hypotheses: (a^2 + ab) and
/// (b^2 + ab) have gs-Drazin decompositions and a^2 b + a b^2 = 0.
bool split_sufficient(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol);

/// has_hirano(a + b) for Hirano-invertible a, b with ab = 0.
bool orthogonal_sum(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol);

}  // namespace hirano
