#include "hirano/spectral.hpp"

#include <cmath>
#include <sstream>

namespace hirano {

Index drazin_index(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const Index n = a.dim();
    // Powers of the normalized matrix; rank is scale-invariant.
    const CMatrix m = a / Complex(rel_scale(a), 0.0);
    CMatrix power = CMatrix::identity(n);
    Index prev_rank = n;  // rank(a^0)
    for (Index k = 0; k < n; ++k) {
        power = power * m;
        const Index r = rank(power, pol);
        if (r == prev_rank) return k;
        prev_rank = r;
    }
    return n;
}

DrazinData drazin_inverse(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const Index n = a.dim();
    const double scale = rel_scale(a);
    const CMatrix m = a / Complex(scale, 0.0);

    const Index k = drazin_index(a, pol);
    const CMatrix mk = matpow(m, static_cast<unsigned long>(k));
    const CMatrix m2k1 = matpow(m, static_cast<unsigned long>(2 * k + 1));
    // dinv(a) = s^-1 dinv(a/s) with s the normalization factor.
    const CMatrix dinv = (mk * pinv(m2k1, pol) * mk) / Complex(scale, 0.0);

    DrazinData data{k, dinv, CMatrix::identity(n) - a * dinv, {}};
    data.residuals.add("b_fixed_point", rel_residual(dinv * a * dinv, dinv));
    data.residuals.add("commute", rel_residual(a * dinv, dinv * a));
    const auto core = nilpotency_report(a - a * a * dinv, pol);
    data.residuals.add("core_nilpotent", core.power_residual);
    data.residuals.add("spec_idem_idempotent",
                       rel_residual(data.spec_idem * data.spec_idem, data.spec_idem));

    if (!data.residuals.all_below(pol.tol_residual)) {
        std::ostringstream msg;
        msg << "drazin_inverse: defining residuals exceed tol_residual (index " << k << "):";
        for (const auto& e : data.residuals.entries) msg << " " << e.name << "=" << e.value;
        throw ResidualError(msg.str());
    }
    return data;
}

namespace {

void check_cluster_overlap(const CMatrix& a, const NumericPolicy& pol) {
    static constexpr double centers[] = {-1.0, 0.0, 1.0};
    for (const Complex& ev : eigenvalues(a)) {
        int within = 0;
        for (double c : centers)
            if (std::abs(ev - Complex(c, 0.0)) <= pol.tol_spec) ++within;
        if (within > 1) {
            std::ostringstream msg;
            msg << "spectral_projector: eigenvalue (" << ev.real() << "," << ev.imag()
                << ") lies within tol_spec of two cluster centers";
            throw ClusterOverlapError(msg.str());
        }
    }
}

}  // namespace

CMatrix spectral_projector(const CMatrix& a, const Complex& center, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    const bool canonical = center.imag() == 0.0 &&
                           (center.real() == -1.0 || center.real() == 0.0 || center.real() == 1.0);
    if (!canonical)
        throw PreconditionError("spectral_projector: center must be one of -1, 0, 1");
    check_cluster_overlap(a, pol);

    const CMatrix shifted = a - center * CMatrix::identity(a.dim());
    const DrazinData dd = drazin_inverse(shifted, pol);
    const CMatrix proj = dd.spec_idem;

    const double idem = rel_residual(proj * proj, proj);
    const double comm = rel_residual(proj * a, a * proj);
    if (idem > pol.tol_residual || comm > pol.tol_residual) {
        std::ostringstream msg;
        msg << "spectral_projector: projector residuals exceed tol_residual, idempotent=" << idem
            << " commute=" << comm;
        throw ResidualError(msg.str());
    }
    return proj;
}

std::optional<GsDecomposition> gs_drazin(const CMatrix& a, const NumericPolicy& pol) {
    check_dim_guard(a, pol);
    if (!is_nilpotent(a - a * a, pol)) return std::nullopt;

    GsDecomposition dec{spectral_projector(a, Complex(1.0, 0.0), pol), CMatrix::zero(a.dim())};
    dec.w = a - dec.e;

    const double idem = rel_residual(dec.e * dec.e, dec.e);
    const double comm = rel_residual(dec.e * a, a * dec.e);
    const auto wn = nilpotency_report(dec.w, pol);
    if (idem > pol.tol_residual || comm > pol.tol_residual || !wn.by_power) {
        std::ostringstream msg;
        msg << "gs_drazin: decomposition residuals exceed tol_residual, idempotent=" << idem
            << " commute=" << comm << " w_nilpotent=" << wn.power_residual;
        throw ResidualError(msg.str());
    }
    return dec;
}

}  // namespace hirano
