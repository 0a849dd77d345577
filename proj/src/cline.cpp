#include "hirano/cline.hpp"

#include <sstream>

namespace hirano {

namespace {

std::pair<bool, bool> evaluate_hypotheses(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                                          const CMatrix& d, const NumericPolicy& pol) {
    const CMatrix ac2 = matpow(a * c, 2);
    const CMatrix db2 = matpow(d * b, 2);
    const bool weak = approx_equal(ac2 * a, db2 * a, pol) && approx_equal(ac2 * d, db2 * d, pol);
    const bool strong = approx_equal(a * c * a, d * b * a, pol) &&
                        approx_equal(d * b * d, a * c * d, pol);
    return {weak, strong};
}

}  // namespace

QuadInstance::QuadInstance(CMatrix a_, CMatrix b_, CMatrix c_, CMatrix d_,
                           const NumericPolicy& pol)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    CMatrix::check_same_dim(a, b, "QuadInstance");
    CMatrix::check_same_dim(a, c, "QuadInstance");
    CMatrix::check_same_dim(a, d, "QuadInstance");
    check_dim_guard(a, pol);
    std::tie(hyp_weak, hyp_strong) = evaluate_hypotheses(a, b, c, d, pol);
    if (hyp_strong && !hyp_weak)
        throw ResidualError("QuadInstance: hyp_strong held but hyp_weak did not; "
                            "tolerance decisions are inconsistent for this instance");
}

CMatrix cline_formula(const CMatrix& a, const CMatrix& b, const NumericPolicy& pol) {
    CMatrix::check_same_dim(a, b, "cline_formula");
    const CMatrix ab_d = drazin_inverse(a * b, pol).dinv;
    const CMatrix ba_d = drazin_inverse(b * a, pol).dinv;
    const CMatrix transferred = b * ab_d * ab_d * a;
    const double resid = rel_residual(transferred, ba_d);
    if (resid > pol.tol_residual) {
        std::ostringstream msg;
        msg << "cline_formula: b((ab)^d)^2 a differs from (ba)^d by relative residual " << resid;
        throw ResidualError(msg.str());
    }
    return transferred;
}

std::pair<bool, bool> quad_hypotheses(const QuadInstance& q, const NumericPolicy& pol) {
    return evaluate_hypotheses(q.a, q.b, q.c, q.d, pol);
}

QnilTransferDetail qnil_transfer_detail(const QuadInstance& q, const NumericPolicy& pol) {
    if (!quad_hypotheses(q, pol).first)
        throw PreconditionError("qnil_transfer: hypothesis (ac)^2 a = (db)^2 a, "
                                "(ac)^2 d = (db)^2 d violated");
    QnilTransferDetail detail;
    detail.ac2_nilpotent = is_nilpotent(matpow(q.a * q.c, 2), pol);
    detail.bd2_nilpotent = is_nilpotent(matpow(q.b * q.d, 2), pol);
    detail.db2_nilpotent = is_nilpotent(matpow(q.d * q.b, 2), pol);
    detail.orderings_agree = detail.bd2_nilpotent == detail.db2_nilpotent;
    detail.verdict = detail.ac2_nilpotent == detail.bd2_nilpotent;
    return detail;
}

bool qnil_transfer(const QuadInstance& q, const NumericPolicy& pol) {
    return qnil_transfer_detail(q, pol).verdict;
}

bool hirano_transfer(const QuadInstance& q, const NumericPolicy& pol) {
    if (!quad_hypotheses(q, pol).first)
        throw PreconditionError("hirano_transfer: hypothesis (ac)^2 a = (db)^2 a, "
                                "(ac)^2 d = (db)^2 d violated");
    return has_hirano(q.a * q.c, pol) == has_hirano(q.b * q.d, pol);
}

QuadInstance example_3_7(Index trunc, const NumericPolicy& pol) {
    if (trunc < 3)
        throw PreconditionError("example_3_7: trunc must be >= 3 (sigma^3 = 0 is trivial below)");

    Dense sigma = Dense::Zero(trunc, trunc);
    sigma(1, 0) = 1.0;  // e1 -> e2
    sigma(2, 1) = 1.0;  // e2 -> e3, all later coordinates annihilated

    const Index n = 2 * trunc;
    Dense a = Dense::Zero(n, n);
    a.block(0, trunc, trunc, trunc) = sigma;

    Dense b = Dense::Zero(n, n);
    b.block(0, 0, trunc, trunc) = Dense::Identity(trunc, trunc);

    Dense c = Dense::Zero(n, n);
    c.block(0, 0, trunc, trunc) = Dense::Identity(trunc, trunc);
    c.block(trunc, 0, trunc, trunc) = Dense::Identity(trunc, trunc);
    c.block(trunc, trunc, trunc, trunc) = Dense::Identity(trunc, trunc);

    return QuadInstance(CMatrix(a), CMatrix(b), CMatrix(c), CMatrix(a), pol);
}

}  // namespace hirano
