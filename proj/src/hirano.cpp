#include "hirano/hirano.hpp"

#include <Eigen/LU>

#include <sstream>

namespace hirano {

ResidualReport certificate_residuals(const CMatrix& a, const CMatrix& b, const CMatrix& e,
                                     const CMatrix& w, const CMatrix& f, const CMatrix& g,
                                     const NumericPolicy& pol) {
    ResidualReport rep;
    rep.add("b_fixed_point", rel_residual(b * a * b, b));
    rep.add("ab_commute", rel_residual(a * b, b * a));
    rep.add("a2_minus_ab_nilpotent", nilpotency_report(a * a - a * b, pol).power_residual);

    rep.add("e_tripotent", rel_residual(e * e * e, e));
    rep.add("ea_commute", rel_residual(e * a, a * e));
    rep.add("w_nilpotent", nilpotency_report(w, pol).power_residual);
    rep.add("w_split", rel_residual(w, a - e));

    rep.add("e_split", rel_residual(e, f - g));
    rep.add("f_idempotent", rel_residual(f * f, f));
    rep.add("g_idempotent", rel_residual(g * g, g));
    const double fg_scale = rel_scale(f) * rel_scale(g);
    rep.add("fg_zero", (f.mat() * g.mat()).norm() / fg_scale);
    rep.add("gf_zero", (g.mat() * f.mat()).norm() / fg_scale);

    // b^2 is the element of the squared characterization: it is a fixed point
    // of x -> (ax)^2 and a^2 - a^2 b^2 is nilpotent.
    const CMatrix b2 = b * b;
    rep.add("b2_fixed_point", rel_residual(b2, (a * b2) * (a * b2)));
    rep.add("a2_minus_a2b2_nilpotent",
            nilpotency_report(a * a - a * a * b2, pol).power_residual);
    return rep;
}

bool has_hirano(const CMatrix& a, const NumericPolicy& pol) {
    return is_nilpotent(a - a * a * a, pol);
}

std::optional<HiranoCertificate> hirano_inverse(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    if (!has_hirano(a, pol)) return std::nullopt;

    const CMatrix f = spectral_projector(a, Complex(1.0, 0.0), pol);
    const CMatrix g = spectral_projector(a, Complex(-1.0, 0.0), pol);
    const CMatrix e = f - g;
    const CMatrix w = a - e;
    const CMatrix b = drazin_inverse(a, pol).dinv;

    // Cross-check against the closed form (a^2 + I - e^2)^-1 e^2.
    const CMatrix e2 = e * e;
    const Dense lhs = a.mat() * a.mat() + Dense::Identity(a.dim(), a.dim()) - e2.mat();
    const CMatrix b_formula = CMatrix(Eigen::PartialPivLU<Dense>(lhs).solve(e2.mat()));
    const double crosscheck = rel_residual(b, b_formula);

    HiranoCertificate cert{b, e, w, f, g, certificate_residuals(a, b, e, w, f, g, pol)};
    cert.residuals.add("formula_crosscheck", crosscheck);

    if (!cert.residuals.all_below(pol.tol_residual)) {
        std::ostringstream msg;
        msg << "hirano_inverse: certificate residuals exceed tol_residual:";
        for (const auto& entry : cert.residuals.entries)
            if (entry.value > pol.tol_residual) msg << " " << entry.name << "=" << entry.value;
        if (crosscheck > pol.tol_residual)
            msg << " (Drazin candidate and closed-form candidate disagree by " << crosscheck << ")";
        throw ResidualError(msg.str());
    }
    return cert;
}

Halves halves(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const CMatrix a2 = a * a;
    Halves h{(a2 + a) / Complex(2.0, 0.0), (a2 - a) / Complex(2.0, 0.0), false};
    h.both_gs = gs_drazin(h.plus, pol).has_value() && gs_drazin(h.minus, pol).has_value();
    return h;
}

bool power_hirano(const CMatrix& a, unsigned long m, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    if (m < 1) throw PreconditionError("power_hirano: exponent must be >= 1");
    return has_hirano(matpow(a, m), pol);
}

bool corner_hirano(const CMatrix& e, const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    CMatrix::check_same_dim(e, a, "corner_hirano");
    if (rel_residual(e * e, e) > pol.tol_residual)
        throw PreconditionError("corner_hirano: precondition e^2 = e violated");
    if (!commutes(e, a, pol))
        throw PreconditionError("corner_hirano: precondition ea = ae violated");
    if (!has_hirano(a, pol))
        throw PreconditionError("corner_hirano: precondition has_hirano(a) violated");
    return has_hirano(e * a, pol);
}

}  // namespace hirano
