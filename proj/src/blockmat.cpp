#include "hirano/blockmat.hpp"

#include <string>

namespace hirano {

namespace {

CMatrix assemble(const CMatrix& A, const Dense& B, const Dense& C, const CMatrix& D) {
    const Index p = A.dim();
    const Index q = D.dim();
    Dense m = Dense::Zero(p + q, p + q);
    m.topLeftCorner(p, p) = A.mat();
    m.topRightCorner(p, q) = B;
    m.bottomLeftCorner(q, p) = C;
    m.bottomRightCorner(q, q) = D.mat();
    return CMatrix(std::move(m));
}

}  // namespace

Block2x2::Block2x2(CMatrix A, Dense B, Dense C, CMatrix D)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)),
      assembled_(assemble(A_, B_, C_, D_)) {
    if (B_.rows() != p() || B_.cols() != q())
        throw DimensionError("Block2x2: B must be p x q, got " + std::to_string(B_.rows()) + "x" +
                             std::to_string(B_.cols()));
    if (C_.rows() != q() || C_.cols() != p())
        throw DimensionError("Block2x2: C must be q x p, got " + std::to_string(C_.rows()) + "x" +
                             std::to_string(C_.cols()));
    if (!B_.allFinite() || !C_.allFinite())
        throw InvalidMatrixError("Block2x2: off-diagonal entries must be finite");
}

namespace {

struct BlockContext {
    const Block2x2& m;
    const NumericPolicy& pol;
    double scale;  // 1 + ||assembled||_F, the shared zero-check scale

    bool zero(const Dense& x) const { return x.norm() <= pol.tol_residual * scale; }
    bool equal(const Dense& x, const Dense& y) const {
        return (x - y).norm() <= pol.tol_residual * scale;
    }
    [[noreturn]] void fail(const std::string& op, const std::string& condition) const {
        throw PreconditionError(op + ": precondition " + condition + " violated");
    }
};

}  // namespace

SchurData schur_data(const Block2x2& m, const NumericPolicy& pol) {
    check_dim_guard(m.assembled(), pol);
    const DrazinData da = drazin_inverse(m.A(), pol);
    const Dense ad = da.dinv.mat();
    const Dense w = m.A().mat() * ad + ad * m.B() * m.C() * ad;
    const Dense schur = m.C() * ad * m.B();
    SchurData data{CMatrix(w), false};
    data.schur_ok = (m.D().mat() - schur).norm() <=
                    pol.tol_residual * (1.0 + m.assembled().norm());
    return data;
}

bool triangular_hirano(const Block2x2& m, const NumericPolicy& pol) {
    check_dim_guard(m.assembled(), pol);
    BlockContext ctx{m, pol, 1.0 + m.assembled().norm()};
    if (!ctx.zero(m.C())) ctx.fail("triangular_hirano", "C=0");
    if (!has_hirano(m.A(), pol)) ctx.fail("triangular_hirano", "A has generalized Hirano inverse");
    if (!has_hirano(m.D(), pol)) ctx.fail("triangular_hirano", "D has generalized Hirano inverse");
    return has_hirano(m.assembled(), pol);
}

bool thm_5_3(const Block2x2& m, const NumericPolicy& pol) {
    check_dim_guard(m.assembled(), pol);
    BlockContext ctx{m, pol, 1.0 + m.assembled().norm()};
    if (!has_hirano(m.A(), pol)) ctx.fail("thm_5_3", "A has generalized Hirano inverse");
    if (!has_hirano(m.D(), pol)) ctx.fail("thm_5_3", "D has generalized Hirano inverse");
    if (!ctx.zero(m.B() * m.C()) || !ctx.zero(m.C() * m.B())) ctx.fail("thm_5_3", "BC=CB=0");

    const Dense a_pi = drazin_inverse(m.A(), pol).spec_idem.mat();
    const Dense d_pi = drazin_inverse(m.D(), pol).spec_idem.mat();
    const Dense ip = Dense::Identity(m.p(), m.p());
    const Dense iq = Dense::Identity(m.q(), m.q());

    if (!ctx.equal(m.C() * m.A().mat() * (ip - a_pi), d_pi * m.D().mat() * m.C()))
        ctx.fail("thm_5_3", "CA(I-A^pi)=D^pi DC");
    if (!ctx.equal(a_pi * m.A().mat() * m.B(), m.B() * m.D().mat() * (iq - d_pi)))
        ctx.fail("thm_5_3", "A^pi AB=BD(I-D^pi)");
    return has_hirano(m.assembled(), pol);
}

bool prop_5_4(const Block2x2& m, const NumericPolicy& pol) {
    check_dim_guard(m.assembled(), pol);
    BlockContext ctx{m, pol, 1.0 + m.assembled().norm()};
    if (!has_hirano(m.A(), pol)) ctx.fail("prop_5_4", "A has generalized Hirano inverse");
    if (!has_hirano(m.D(), pol)) ctx.fail("prop_5_4", "D has generalized Hirano inverse");
    if (!ctx.zero(m.B() * m.C()) || !ctx.zero(m.C() * m.B())) ctx.fail("prop_5_4", "BC=CB=0");

    const Dense a_pi = drazin_inverse(m.A(), pol).spec_idem.mat();
    const Dense d_pi = drazin_inverse(m.D(), pol).spec_idem.mat();
    const Dense ip = Dense::Identity(m.p(), m.p());
    const Dense iq = Dense::Identity(m.q(), m.q());

    if (!ctx.equal(m.C() * m.A().mat() * (ip - a_pi), (iq - d_pi) * m.D().mat() * m.C()))
        ctx.fail("prop_5_4", "CA(I-A^pi)=(I-D^pi)DC");
    if (!ctx.equal(a_pi * m.A().mat() * m.B(), m.B() * m.D().mat() * d_pi))
        ctx.fail("prop_5_4", "A^pi AB=BDD^pi");
    return has_hirano(m.assembled(), pol);
}

bool thm_5_5(const Block2x2& m, const NumericPolicy& pol) {
    check_dim_guard(m.assembled(), pol);
    BlockContext ctx{m, pol, 1.0 + m.assembled().norm()};
    if (!has_hirano(m.A(), pol)) ctx.fail("thm_5_5", "A has generalized Hirano inverse");

    const DrazinData da = drazin_inverse(m.A(), pol);
    const Dense ad = da.dinv.mat();
    const Dense a_pi = da.spec_idem.mat();
    const Dense bc = m.B() * m.C();

    if (!ctx.equal(m.D().mat(), m.C() * ad * m.B())) ctx.fail("thm_5_5", "D=CA^d B");
    if (!ctx.zero(a_pi * bc)) ctx.fail("thm_5_5", "A^pi BC=0");
    if (!ctx.zero(bc * a_pi)) ctx.fail("thm_5_5", "BCA^pi=0");
    if (!ctx.zero(m.A().mat() * a_pi * m.B())) ctx.fail("thm_5_5", "AA^pi B=0");

    const CMatrix w{Dense(m.A().mat() * ad + ad * bc * ad)};
    if (!has_hirano(m.A() * w, pol)) ctx.fail("thm_5_5", "AW has generalized Hirano inverse");
    return has_hirano(m.assembled(), pol);
}

}  // namespace hirano
