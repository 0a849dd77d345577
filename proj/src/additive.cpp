#include "hirano/additive.hpp"

namespace hirano {

PairInstance::PairInstance(CMatrix a_, CMatrix b_, const NumericPolicy& pol)
    : a(std::move(a_)), b(std::move(b_)) {
    CMatrix::check_same_dim(a, b, "PairInstance");
    check_dim_guard(a, pol);
    weak_comm = approx_equal(a * a * b, a * b * a, pol) &&
                approx_equal(b * b * a, b * a * b, pol);
    full_comm = commutes(a, b, pol);
    both_hirano = has_hirano(a, pol) && has_hirano(b, pol);
}

namespace {

void require_weak_hirano(const PairInstance& p, std::string_view who) {
    if (!p.weak_comm)
        throw PreconditionError(std::string(who) +
                                ": precondition a^2 b = aba and b^2 a = bab violated");
    if (!p.both_hirano)
        throw PreconditionError(std::string(who) +
                                ": precondition has_hirano(a) and has_hirano(b) violated");
}

}  // namespace

bool product_hirano(const PairInstance& p, const NumericPolicy& pol) {
    require_weak_hirano(p, "product_hirano");
    return has_hirano(p.a * p.b, pol);
}

std::pair<bool, bool> additive_equiv(const PairInstance& p, const NumericPolicy& pol) {
    require_weak_hirano(p, "additive_equiv");
    const bool sum = has_hirano(p.a + p.b, pol);
    const CMatrix ad = drazin_inverse(p.a, pol).dinv;
    const bool shifted = has_hirano(CMatrix::identity(p.a.dim()) + ad * p.b, pol);
    return {sum, shifted};
}

bool split_sufficient(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol) {
    CMatrix::check_same_dim(a, b, "split_sufficient");
    check_dim_guard(a, pol);
    const CMatrix ab = a * b;
    if (!gs_drazin(a * a + ab, pol).has_value())
        throw PreconditionError("split_sufficient: precondition a^2 + ab has gs-Drazin "
                                "decomposition violated");
    if (!gs_drazin(b * b + ab, pol).has_value())
        throw PreconditionError("split_sufficient: precondition b^2 + ab has gs-Drazin "
                                "decomposition violated");
    // a^2 b + a b^2 = a (a + b) b; the zero check uses the factor scales.
    const double scale = rel_scale(a) * rel_scale(a + b) * rel_scale(b);
    if (!approx_zero(a * a * b + ab * b, scale, pol))
        throw PreconditionError("split_sufficient: precondition a^2 b + a b^2 = 0 violated");
    return has_hirano(a + b, pol);
}

bool orthogonal_sum(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol) {
    CMatrix::check_same_dim(a, b, "orthogonal_sum");
    check_dim_guard(a, pol);
    if (!has_hirano(a, pol))
        throw PreconditionError("orthogonal_sum: precondition has_hirano(a) violated");
    if (!has_hirano(b, pol))
        throw PreconditionError("orthogonal_sum: precondition has_hirano(b) violated");
    if (!approx_zero(a * b, rel_scale(a) * rel_scale(b), pol))
        throw PreconditionError("orthogonal_sum: precondition ab = 0 violated");
    return has_hirano(a + b, pol);
}

}  // namespace hirano
