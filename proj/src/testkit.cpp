#include "hirano/testkit.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace hirano::testkit {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
}

double Rng::normal() {
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Complex Rng::cnormal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

bool Rng::coin(double p) { return uniform() < p; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    const std::uint64_t v = r.next_u64();
    return v ? v : 1;
}

Index JordanSpec::dim() const {
    Index n = 0;
    for (const auto& b : blocks) n += b.size;
    return n;
}

CMatrix jordan_matrix(const JordanSpec& spec) {
    const Index n = spec.dim();
    if (n < 1) throw PreconditionError("jordan_matrix: spec has no blocks");
    Dense j = Dense::Zero(n, n);
    Index off = 0;
    for (const auto& b : spec.blocks) {
        if (b.size < 1) throw PreconditionError("jordan_matrix: block size must be positive");
        for (Index i = 0; i < b.size; ++i) {
            j(off + i, off + i) = b.eigenvalue;
            if (i + 1 < b.size) j(off + i, off + i + 1) = 1.0;
        }
        off += b.size;
    }
    return CMatrix(std::move(j));
}

namespace {

Dense random_unitary(Index n, Rng& rng) {
    Dense g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = rng.cnormal();
    Eigen::HouseholderQR<Dense> qr(g);
    return Dense(qr.householderQ());
}

}  // namespace

Similarity make_similarity(Index n, std::uint64_t seed, double cond_bound) {
    if (cond_bound < 1.0)
        throw PreconditionError("make_similarity: cond_bound must be >= 1");
    if (seed == 0)
        return {Dense::Identity(n, n), Dense::Identity(n, n)};

    Rng rng(seed);
    const Dense u = random_unitary(n, rng);
    const Dense v = random_unitary(n, rng);
    Eigen::VectorXcd s(n), s_inv(n);
    const double span = std::log(cond_bound);
    for (Index i = 0; i < n; ++i) {
        const double sv = std::exp(rng.uniform() * span);  // in [1, cond_bound]
        s(i) = Complex(sv, 0.0);
        s_inv(i) = Complex(1.0 / sv, 0.0);
    }
    return {Dense(u * s.asDiagonal() * v.adjoint()), Dense(v * s_inv.asDiagonal() * u.adjoint())};
}

namespace {

// Exact inverse of one Jordan block with eigenvalue lambda != 0:
// sum_k (-1)^k lambda^-(k+1) N^k.
Dense jordan_block_inverse(const Complex& lambda, Index s) {
    Dense b = Dense::Zero(s, s);
    Complex coef = 1.0 / lambda;
    for (Index k = 0; k < s; ++k) {
        for (Index i = 0; i + k < s; ++i) b(i, i + k) = coef;
        coef *= -1.0 / lambda;
    }
    return b;
}

bool is_hirano_eigenvalue(const Complex& ev) {
    return ev.imag() == 0.0 && (ev.real() == -1.0 || ev.real() == 0.0 || ev.real() == 1.0);
}

struct Conjugator {
    Similarity sim;
    CMatrix operator()(const Dense& x) const { return CMatrix(Dense(sim.s * x * sim.s_inv)); }
};

}  // namespace

HiranoInstance gen_hirano(const JordanSpec& spec, const NumericPolicy& pol) {
    const Index n = spec.dim();
    if (n < 1) throw PreconditionError("gen_hirano: spec has no blocks");
    for (const auto& blk : spec.blocks)
        if (!is_hirano_eigenvalue(blk.eigenvalue))
            throw PreconditionError("gen_hirano: eigenvalue outside {-1, 0, 1}");

    const Dense j = jordan_matrix(spec).mat();
    Dense bj = Dense::Zero(n, n), ej = Dense::Zero(n, n);
    Dense fj = Dense::Zero(n, n), gj = Dense::Zero(n, n);
    Index off = 0;
    for (const auto& blk : spec.blocks) {
        const double lam = blk.eigenvalue.real();
        if (lam != 0.0)
            bj.block(off, off, blk.size, blk.size) = jordan_block_inverse(blk.eigenvalue, blk.size);
        for (Index i = 0; i < blk.size; ++i) ej(off + i, off + i) = lam;
        if (lam == 1.0)
            fj.block(off, off, blk.size, blk.size) = Dense::Identity(blk.size, blk.size);
        if (lam == -1.0)
            gj.block(off, off, blk.size, blk.size) = Dense::Identity(blk.size, blk.size);
        off += blk.size;
    }
    const Dense wj = j - ej;

    const Conjugator conj{make_similarity(n, spec.similarity_seed, spec.cond_bound)};
    const CMatrix a = conj(j);
    HiranoCertificate cert{conj(bj), conj(ej), conj(wj), conj(fj), conj(gj), {}};
    cert.residuals = certificate_residuals(a, cert.b, cert.e, cert.w, cert.f, cert.g, pol);
    return {a, std::move(cert)};
}

JordanInstance gen_jordan(const JordanSpec& spec, const NumericPolicy& pol) {
    const Index n = spec.dim();
    if (n < 1) throw PreconditionError("gen_jordan: spec has no blocks");

    const Dense j = jordan_matrix(spec).mat();
    Dense dj = Dense::Zero(n, n), pij = Dense::Zero(n, n);
    Index index = 0;
    Index off = 0;
    for (const auto& blk : spec.blocks) {
        if (blk.eigenvalue == Complex(0.0, 0.0)) {
            index = std::max(index, blk.size);
            pij.block(off, off, blk.size, blk.size) = Dense::Identity(blk.size, blk.size);
        } else {
            dj.block(off, off, blk.size, blk.size) = jordan_block_inverse(blk.eigenvalue, blk.size);
        }
        off += blk.size;
    }

    const Conjugator conj{make_similarity(n, spec.similarity_seed, spec.cond_bound)};
    const CMatrix a = conj(j);
    DrazinData oracle{index, conj(dj), conj(pij), {}};
    oracle.residuals.add("b_fixed_point", rel_residual(oracle.dinv * a * oracle.dinv, oracle.dinv));
    oracle.residuals.add("commute", rel_residual(a * oracle.dinv, oracle.dinv * a));
    oracle.residuals.add("core_nilpotent",
                         nilpotency_report(a - a * a * oracle.dinv, pol).power_residual);
    oracle.residuals.add("spec_idem_idempotent",
                         rel_residual(oracle.spec_idem * oracle.spec_idem, oracle.spec_idem));
    return {a, std::move(oracle)};
}

namespace {

const Complex kHiranoPool[] = {Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
const Complex kMixedPool[] = {Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0),
                              Complex(2.0, 0.0),  Complex(0.5, 0.0), Complex(0.0, 1.0)};

JordanSpec random_spec_from_pool(Rng& rng, Index dim, double cond_bound, const Complex* pool,
                                 std::size_t pool_size) {
    JordanSpec spec;
    Index rem = dim;
    while (rem > 0) {
        const Index s = std::min<Index>(rem, rng.uniform_int(1, 3));
        spec.blocks.push_back({pool[rng.uniform_int(0, static_cast<std::int64_t>(pool_size) - 1)],
                               s});
        rem -= s;
    }
    spec.similarity_seed = derive_seed(rng.next_u64(), 7);
    spec.cond_bound = rng.uniform(1.0, std::max(1.0, cond_bound));
    return spec;
}

}  // namespace

JordanSpec random_hirano_spec(Rng& rng, Index dim, double cond_bound) {
    return random_spec_from_pool(rng, dim, cond_bound, kHiranoPool, 3);
}

JordanSpec random_mixed_spec(Rng& rng, Index dim, double cond_bound) {
    if (rng.coin())
        return random_spec_from_pool(rng, dim, cond_bound, kHiranoPool, 3);
    return random_spec_from_pool(rng, dim, cond_bound, kMixedPool, 6);
}

std::string_view to_string(PairFamily family) {
    switch (family) {
        case PairFamily::PolyCommuting: return "poly-commuting";
        case PairFamily::BlockTriangular: return "block-triangular";
        case PairFamily::Orthogonal: return "orthogonal";
    }
    return "unknown";
}

namespace {

Dense shift_matrix(Index k) {
    Dense n = Dense::Zero(k, k);
    for (Index i = 0; i + 1 < k; ++i) n(i, i + 1) = 1.0;
    return n;
}

Dense blkdiag(const Dense& x, const Dense& y) {
    Dense out = Dense::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    out.topLeftCorner(x.rows(), x.cols()) = x;
    out.bottomRightCorner(y.rows(), y.cols()) = y;
    return out;
}

Dense rand_int_matrix(Rng& rng, Index rows, Index cols, int lo, int hi) {
    Dense m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = Complex(static_cast<double>(rng.uniform_int(lo, hi)), 0.0);
    return m;
}

Dense rand_gauss_matrix(Rng& rng, Index rows, Index cols) {
    Dense m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
    return m;
}

// Exact similarity: signed permutation times one unit shear. Conjugation by
// these stays in small-integer (hence exactly representable) arithmetic.
struct ExactSim {
    Dense s;
    Dense s_inv;
};

ExactSim make_exact_similarity(Index n, Rng& rng) {
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    for (Index i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);

    Dense p = Dense::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        p(perm[static_cast<std::size_t>(i)], i) = rng.coin() ? 1.0 : -1.0;

    Dense t = Dense::Identity(n, n);
    Dense t_inv = Dense::Identity(n, n);
    if (n >= 2) {
        const Index i = rng.uniform_int(0, n - 1);
        Index j = rng.uniform_int(0, n - 2);
        if (j >= i) ++j;
        const double c = rng.coin() ? 1.0 : -1.0;
        t(i, j) = c;
        t_inv(i, j) = -c;
    }
    return {Dense(p * t), Dense(t_inv * p.transpose())};
}

std::pair<Dense, Dense> conjugate_pair(const Dense& a, const Dense& b, Rng& rng) {
    const ExactSim sim = make_exact_similarity(a.rows(), rng);
    return {Dense(sim.s * a * sim.s_inv), Dense(sim.s * b * sim.s_inv)};
}

// Menu of polynomials mapping spectra inside {-1, 0, 1} into {-1, 0, 1}.
Dense poly_from_menu(const Dense& m, int pick) {
    switch (pick) {
        case 0: return m;
        case 1: return m * m;
        case 2: return m * m * m;
        case 3: return -m;
        case 4: return Dense(-(m * m));
        case 5: return Dense((m * m + m) / 2.0);
        default: return Dense((m * m - m) / 2.0);
    }
}

JordanSpec random_nilpotent_spec(Rng& rng, Index dim) {
    JordanSpec spec;
    Index rem = dim;
    while (rem > 0) {
        const Index s = std::min<Index>(rem, rng.uniform_int(1, 3));
        spec.blocks.push_back({Complex(0.0, 0.0), s});
        rem -= s;
    }
    spec.similarity_seed = derive_seed(rng.next_u64(), 11);
    spec.cond_bound = rng.uniform(1.0, 10.0);
    return spec;
}

std::pair<Dense, Dense> family_poly(Rng& rng, Index dim, bool nilpotent_only) {
    const JordanSpec spec = nilpotent_only ? random_nilpotent_spec(rng, dim)
                                           : random_hirano_spec(rng, dim, 20.0);
    const Dense m = gen_hirano(spec).a.mat();
    return {poly_from_menu(m, static_cast<int>(rng.uniform_int(0, 6))),
            poly_from_menu(m, static_cast<int>(rng.uniform_int(0, 6)))};
}

std::pair<Dense, Dense> family_block_triangular(Rng& rng, Index dim, bool nilpotent_only) {
    if (dim < 3)
        throw PreconditionError("gen_weak_comm_pair: block-triangular family needs dim >= 3");
    const Index base_n = rng.uniform_int(3, dim);  // nilpotent block of size base_n - 1
    const Index tail = dim - base_n;
    const Index k = base_n - 1;

    const Dense nmat = shift_matrix(k);
    const double c2 = static_cast<double>(rng.coin() ? rng.uniform_int(1, 2)
                                                     : -rng.uniform_int(1, 2));
    const Dense x = rand_int_matrix(rng, k, 1, -2, 2);
    // y = c2 x + v with v in the span of e1, e2: keeps a^2 b = aba and
    // b^2 a = bab exact while ab != ba whenever beta != 0.
    const double alpha = static_cast<double>(rng.uniform_int(-2, 2));
    const double beta = static_cast<double>(rng.coin() ? 1 : -1) *
                        static_cast<double>(rng.uniform_int(1, 2));
    Dense y = c2 * x;
    y(0, 0) += alpha;
    y(1, 0) += beta;

    Dense a0 = Dense::Zero(base_n, base_n);
    a0.topLeftCorner(k, k) = nmat;
    a0.block(0, k, k, 1) = x;
    Dense b0 = Dense::Zero(base_n, base_n);
    b0.topLeftCorner(k, k) = c2 * nmat;
    b0.block(0, k, k, 1) = y;

    Dense ta = Dense::Zero(tail, tail);
    Dense tb = Dense::Zero(tail, tail);
    for (Index i = 0; i < tail; ++i) {
        ta(i, i) = nilpotent_only ? 0.0 : static_cast<double>(rng.uniform_int(-1, 1));
        tb(i, i) = nilpotent_only ? 0.0 : static_cast<double>(rng.uniform_int(-1, 1));
    }
    return {blkdiag(a0, ta), blkdiag(b0, tb)};
}

std::pair<Dense, Dense> family_orthogonal(Rng& rng, Index dim, bool nilpotent_only) {
    if (dim < 2)
        throw PreconditionError("gen_weak_comm_pair: orthogonal family needs dim >= 2");
    const Index p = rng.uniform_int(1, dim - 1);
    const Index q = dim - p;
    const JordanSpec sa = nilpotent_only ? random_nilpotent_spec(rng, p)
                                         : random_hirano_spec(rng, p, 20.0);
    const JordanSpec sb = nilpotent_only ? random_nilpotent_spec(rng, q)
                                         : random_hirano_spec(rng, q, 20.0);
    return {blkdiag(jordan_matrix(sa).mat(), Dense::Zero(q, q)),
            blkdiag(Dense::Zero(p, p), jordan_matrix(sb).mat())};
}

PairInstance build_pair(std::uint64_t seed, Index dim, PairFamily family, bool nilpotent_only,
                        const NumericPolicy& pol) {
    if (dim < 3) throw PreconditionError("gen_weak_comm_pair: dim must be >= 3");
    Rng rng(seed);
    std::pair<Dense, Dense> raw;
    switch (family) {
        case PairFamily::PolyCommuting: raw = family_poly(rng, dim, nilpotent_only); break;
        case PairFamily::BlockTriangular:
            raw = family_block_triangular(rng, dim, nilpotent_only);
            break;
        case PairFamily::Orthogonal: raw = family_orthogonal(rng, dim, nilpotent_only); break;
    }
    if (family != PairFamily::PolyCommuting)
        raw = conjugate_pair(raw.first, raw.second, rng);
    return PairInstance(CMatrix(raw.first), CMatrix(raw.second), pol);
}

}  // namespace

PairInstance gen_weak_comm_pair(std::uint64_t seed, Index dim, PairFamily family,
                                const NumericPolicy& pol) {
    return build_pair(seed, dim, family, /*nilpotent_only=*/false, pol);
}

PairInstance gen_nilpotent_pair(std::uint64_t seed, Index dim, PairFamily family,
                                const NumericPolicy& pol) {
    return build_pair(seed, dim, family, /*nilpotent_only=*/true, pol);
}

// ---------------------------------------------------------------------------
// Trial runner
// ---------------------------------------------------------------------------

namespace {

PairFamily pick_family(Rng& rng) {
    switch (rng.uniform_int(0, 2)) {
        case 0: return PairFamily::PolyCommuting;
        case 1: return PairFamily::BlockTriangular;
        default: return PairFamily::Orthogonal;
    }
}

TrialOutcome skipped(std::uint64_t seed, std::string family, std::string why) {
    return {seed, std::move(family), false, true, 0.0, "skipped: " + std::move(why)};
}

// --- section 2: characterizations --------------------------------------

TrialOutcome trial_L21(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const PairFamily fam = pick_family(rng);
    const Index dim = rng.uniform_int(3, 8);
    const PairInstance p = gen_nilpotent_pair(rng.next_u64() | 1, dim, fam, pol);

    TrialOutcome out{ts, std::string(to_string(fam)), false, true, 0.0, ""};
    const bool an = is_nilpotent(p.a, pol);
    const bool bn = is_nilpotent(p.b, pol);
    if (!(p.weak_comm && an && bn))
        return skipped(ts, out.family, "pair not weakly commuting nilpotent");
    out.hypotheses_met = true;

    const auto sum_rep = nilpotency_report(p.a + p.b, pol);
    const auto prod_rep = nilpotency_report(p.a * p.b, pol);
    out.conclusion_ok = sum_rep.by_power && prod_rep.by_power;
    out.residual_max = std::max(sum_rep.power_residual, prod_rep.power_residual);
    if (!out.conclusion_ok) out.detail = "a+b or ab failed the nilpotency power test";
    return out;
}

CMatrix mixed_instance(Rng& rng, const NumericPolicy& pol, Index max_dim = 8) {
    const Index dim = rng.uniform_int(1, max_dim);
    const JordanSpec spec = random_mixed_spec(rng, dim, 50.0);
    return gen_jordan(spec, pol).a;
}

TrialOutcome trial_T24(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const CMatrix a = mixed_instance(rng, pol);
    TrialOutcome out{ts, "jordan-mixed", true, true, 0.0, ""};
    const bool predicate = has_hirano(a, pol);
    const auto cert = hirano_inverse(a, pol);
    out.conclusion_ok = predicate == cert.has_value();
    if (cert) {
        out.residual_max = cert->residuals.max();
        out.conclusion_ok = out.conclusion_ok && out.residual_max <= pol.tol_residual;
    }
    if (!out.conclusion_ok) out.detail = "a - a^3 test and certificate existence disagree";
    return out;
}

TrialOutcome trial_C25(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const Index dim = rng.uniform_int(1, 8);
    const HiranoInstance inst = gen_hirano(random_hirano_spec(rng, dim, 50.0), pol);
    const auto m = static_cast<unsigned long>(rng.uniform_int(1, 4));
    TrialOutcome out{ts, "jordan-hirano", false, true, 0.0, ""};
    if (!has_hirano(inst.a, pol)) return skipped(ts, out.family, "generated instance not Hirano");
    out.hypotheses_met = true;
    out.conclusion_ok = power_hirano(inst.a, m, pol);
    if (!out.conclusion_ok) out.detail = "a^" + std::to_string(m) + " lost Hirano invertibility";
    return out;
}

TrialOutcome trial_L26(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const CMatrix a = mixed_instance(rng, pol);
    TrialOutcome out{ts, "jordan-mixed", true, true, 0.0, ""};
    out.conclusion_ok = halves(a, pol).both_gs == has_hirano(a, pol);
    if (!out.conclusion_ok) out.detail = "halves flag disagrees with a - a^3 test";
    return out;
}

TrialOutcome trial_T27(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const CMatrix a = mixed_instance(rng, pol);
    TrialOutcome out{ts, "jordan-mixed", true, true, 0.0, ""};
    const bool predicate = has_hirano(a, pol);
    const auto cert = hirano_inverse(a, pol);
    out.conclusion_ok = predicate == cert.has_value();
    if (cert) {
        for (const char* key : {"e_tripotent", "ea_commute", "w_nilpotent", "w_split"}) {
            const double r = cert->residuals.get(key);
            out.residual_max = std::max(out.residual_max, r);
        }
        out.conclusion_ok = out.conclusion_ok && out.residual_max <= pol.tol_residual;
    }
    if (!out.conclusion_ok) out.detail = "tripotent-plus-nilpotent decomposition failed";
    return out;
}

TrialOutcome trial_C28(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const CMatrix a = mixed_instance(rng, pol);
    TrialOutcome out{ts, "jordan-mixed", true, true, 0.0, ""};
    out.conclusion_ok = classify(a, pol).is_hirano == has_hirano(a, pol);
    if (!out.conclusion_ok) out.detail = "spectral classification disagrees with a - a^3 test";
    return out;
}

TrialOutcome trial_P29(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const Index dim = rng.uniform_int(1, 6);
    const HiranoInstance inst = gen_hirano(random_hirano_spec(rng, dim, 50.0), pol);
    TrialOutcome out{ts, "jordan-hirano", false, true, 0.0, ""};
    const auto cert = hirano_inverse(inst.a, pol);
    if (!cert) return skipped(ts, out.family, "generated instance not Hirano");
    out.hypotheses_met = true;
    out.residual_max = cert->residuals.get("formula_crosscheck");
    out.conclusion_ok = out.residual_max <= pol.tol_residual &&
                        in_comm2(inst.a, cert->e, pol) && in_comm2(inst.a, cert->b, pol);
    if (!out.conclusion_ok)
        out.detail = "double-commutant membership or closed-form cross-check failed";
    return out;
}

// --- section 3: Cline transfer ------------------------------------------

// Random nilpotent sigma with sigma^3 = 0 (chains of length <= 3, scaled
// small-dyadic entries), assembled into the shift-style quad.
QuadInstance quad_shift(Rng& rng, const NumericPolicy& pol) {
    const Index trunc = rng.uniform_int(3, 4);
    Dense sigma = Dense::Zero(trunc, trunc);
    const double scales[] = {1.0, -1.0, 2.0, 0.5};
    Index pos = 0;
    bool placed_long_chain = false;
    while (pos < trunc) {
        Index chain = std::min<Index>(trunc - pos, placed_long_chain ? rng.uniform_int(1, 3) : 3);
        if (chain == 3) placed_long_chain = true;
        for (Index i = 0; i + 1 < chain; ++i)
            sigma(pos + i + 1, pos + i) = scales[rng.uniform_int(0, 3)];
        pos += chain;
    }

    const Index n = 2 * trunc;
    Dense a = Dense::Zero(n, n);
    a.block(0, trunc, trunc, trunc) = sigma;
    Dense b = Dense::Zero(n, n);
    b.topLeftCorner(trunc, trunc) = Dense::Identity(trunc, trunc);
    Dense c = Dense::Zero(n, n);
    c.topLeftCorner(trunc, trunc) = Dense::Identity(trunc, trunc);
    c.bottomLeftCorner(trunc, trunc) = Dense::Identity(trunc, trunc);
    c.bottomRightCorner(trunc, trunc) = Dense::Identity(trunc, trunc);
    return QuadInstance(CMatrix(a), CMatrix(b), CMatrix(c), CMatrix(a), pol);
}

// d = a with c = b - delta, where a delta a = 0 exactly in Jordan
// coordinates (delta built from a kernel column and a left null row of the
// zero cluster). Gives aca = aba and dbd = acd with ab != ac.
QuadInstance quad_embed(Rng& rng, bool nilpotent_a, bool poly_b, const NumericPolicy& pol) {
    const Index dim = rng.uniform_int(3, 6);
    JordanSpec spec = nilpotent_a ? random_nilpotent_spec(rng, dim)
                                  : random_hirano_spec(rng, dim, 20.0);
    // Need a zero block: force one if the draw has none.
    bool has_zero = false;
    for (const auto& blk : spec.blocks) has_zero = has_zero || blk.eigenvalue == Complex(0.0, 0.0);
    if (!has_zero) spec.blocks.front().eigenvalue = Complex(0.0, 0.0);

    const Index n = spec.dim();
    const Dense j = jordan_matrix(spec).mat();
    Index zero_first = -1, zero_last = -1, off = 0;
    for (const auto& blk : spec.blocks) {
        if (blk.eigenvalue == Complex(0.0, 0.0) && zero_first < 0) {
            zero_first = off;
            zero_last = off + blk.size - 1;
        }
        off += blk.size;
    }

    const Dense bj = poly_b ? poly_from_menu(j, static_cast<int>(rng.uniform_int(0, 6)))
                            : rand_int_matrix(rng, n, n, -2, 2);
    // delta = e_{zero_first} r^T + l e_{zero_last}^T satisfies J delta J = 0
    // exactly: J kills the first column of a zero block and the last row of
    // one is a left null row.
    const Dense r = rand_int_matrix(rng, 1, n, -2, 2);
    const Dense l = rand_int_matrix(rng, n, 1, -2, 2);
    Dense delta = Dense::Zero(n, n);
    delta.row(zero_first) += r;
    delta.col(zero_last) += l;
    const Dense cj = bj - delta;

    const Conjugator conj{make_similarity(n, derive_seed(rng.next_u64(), 3), 20.0)};
    return QuadInstance(conj(j), conj(bj), conj(cj), conj(j), pol);
}

// b = c (and optionally b = -c) with d = a: the classic ab-versus-ba pair.
QuadInstance quad_cline_pair(Rng& rng, bool negate, bool hirano_menu, const NumericPolicy& pol) {
    const Index dim = rng.uniform_int(2, 6);
    Dense a, c;
    if (hirano_menu) {
        const Dense m = gen_hirano(random_hirano_spec(rng, dim, 20.0)).a.mat();
        a = m;
        c = poly_from_menu(m, static_cast<int>(rng.uniform_int(0, 6)));
    } else {
        const Conjugator conj{make_similarity(dim, derive_seed(rng.next_u64(), 5), 10.0)};
        a = conj(rand_int_matrix(rng, dim, dim, -2, 2)).mat();
        c = conj(rand_int_matrix(rng, dim, dim, -2, 2)).mat();
    }
    const Dense b = negate ? Dense(-c) : c;
    return QuadInstance(CMatrix(a), CMatrix(b), CMatrix(c), CMatrix(a), pol);
}

TrialOutcome trial_L31(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"shift-quad", "embed-nilpotent", "cline-pair"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};
    const QuadInstance q = fam == 0   ? quad_shift(rng, pol)
                           : fam == 1 ? quad_embed(rng, true, true, pol)
                                      : quad_cline_pair(rng, false, true, pol);
    if (!q.hyp_weak) return skipped(ts, out.family, "weak hypothesis not satisfied");
    out.hypotheses_met = true;
    const auto detail = qnil_transfer_detail(q, pol);
    out.conclusion_ok = detail.verdict;
    if (!detail.orderings_agree)
        out.detail = "note: (bd)^2 and (db)^2 nilpotency verdicts diverge";
    if (!out.conclusion_ok) out.detail = "(ac)^2 and (bd)^2 nilpotency verdicts disagree";
    return out;
}

TrialOutcome trial_T33(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 3));
    const char* names[] = {"shift-quad", "embed", "cline-pair", "negated-pair"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};
    const QuadInstance q = fam == 0   ? quad_shift(rng, pol)
                           : fam == 1 ? quad_embed(rng, false, rng.coin(), pol)
                           : fam == 2 ? quad_cline_pair(rng, false, true, pol)
                                      : quad_cline_pair(rng, true, rng.coin(), pol);
    if (!q.hyp_weak) return skipped(ts, out.family, "weak hypothesis not satisfied");
    out.hypotheses_met = true;
    out.conclusion_ok = hirano_transfer(q, pol);
    if (!out.conclusion_ok) out.detail = "has_hirano(ac) and has_hirano(bd) disagree";
    return out;
}

TrialOutcome trial_C34(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"embed", "embed-nilpotent", "cline-pair"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};
    const QuadInstance q = fam == 0   ? quad_embed(rng, false, rng.coin(), pol)
                           : fam == 1 ? quad_embed(rng, true, true, pol)
                                      : quad_cline_pair(rng, false, rng.coin(), pol);
    if (!q.hyp_strong) return skipped(ts, out.family, "strong hypothesis not satisfied");
    out.hypotheses_met = true;
    out.conclusion_ok = is_nilpotent(matpow(q.a * q.c, 2), pol) ==
                        is_nilpotent(matpow(q.b * q.d, 2), pol);
    if (!out.conclusion_ok) out.detail = "(ac)^2 and (bd)^2 nilpotency verdicts disagree";
    return out;
}

TrialOutcome trial_C35(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const bool poly_b = rng.coin();
    TrialOutcome out{ts, poly_b ? "embed-poly" : "embed", false, true, 0.0, ""};
    const QuadInstance q = quad_embed(rng, false, poly_b, pol);
    // Corollary hypothesis: aba = aca (d = a embeds it into the quad form).
    if (!approx_equal(q.a * q.b * q.a, q.a * q.c * q.a, pol))
        return skipped(ts, out.family, "aba = aca not satisfied");
    out.hypotheses_met = true;
    out.conclusion_ok = has_hirano(q.a * q.c, pol) == has_hirano(q.b * q.a, pol);
    if (!out.conclusion_ok) out.detail = "has_hirano(ac) and has_hirano(ba) disagree";
    return out;
}

TrialOutcome trial_C36(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const bool negate = rng.coin();
    TrialOutcome out{ts, negate ? "negated-pair" : "cline-pair", false, true, 0.0, ""};
    const QuadInstance q = quad_cline_pair(rng, negate, rng.coin(), pol);
    const CMatrix acac = matpow(q.a * q.c, 2);
    const CMatrix dbdb = matpow(q.d * q.b, 2);
    if (!approx_equal(acac, dbdb, pol)) return skipped(ts, out.family, "acac = dbdb not satisfied");
    out.hypotheses_met = true;
    out.conclusion_ok = has_hirano(q.a * q.c, pol) == has_hirano(q.b * q.d, pol);
    if (!out.conclusion_ok) out.detail = "has_hirano(ac) and has_hirano(bd) disagree";
    return out;
}

TrialOutcome trial_Cline(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"invertible", "commuting-poly", "singular-random"};
    TrialOutcome out{ts, names[fam], true, true, 0.0, ""};

    const Index dim = rng.uniform_int(2, 6);
    Dense a, b;
    if (fam == 0) {
        const Complex pool[] = {Complex(1, 0), Complex(-1, 0), Complex(2, 0), Complex(0.5, 0),
                                Complex(0, 1)};
        JordanSpec sa = random_spec_from_pool(rng, dim, 20.0, pool, 5);
        JordanSpec sb = random_spec_from_pool(rng, dim, 20.0, pool, 5);
        a = gen_jordan(sa, pol).a.mat();
        b = gen_jordan(sb, pol).a.mat();
    } else if (fam == 1) {
        const Dense m = gen_jordan(random_mixed_spec(rng, dim, 20.0), pol).a.mat();
        a = poly_from_menu(m, static_cast<int>(rng.uniform_int(0, 6)));
        b = poly_from_menu(m, static_cast<int>(rng.uniform_int(0, 6)));
    } else {
        a = gen_jordan(random_mixed_spec(rng, dim, 10.0), pol).a.mat();
        b = rand_int_matrix(rng, dim, dim, -2, 2);
    }

    const CMatrix ca(a), cb(b);
    const CMatrix ab_d = drazin_inverse(ca * cb, pol).dinv;
    const CMatrix ba_d = drazin_inverse(cb * ca, pol).dinv;
    out.residual_max = rel_residual(cb * ab_d * ab_d * ca, ba_d);
    out.conclusion_ok = out.residual_max <= pol.tol_residual;
    if (!out.conclusion_ok) out.detail = "Cline formula residual above tol_residual";
    return out;
}

// --- section 4: additive -------------------------------------------------

PairInstance additive_pair(Rng& rng, PairFamily fam, const NumericPolicy& pol) {
    const Index dim = rng.uniform_int(3, 8);
    return gen_weak_comm_pair(rng.next_u64() | 1, dim, fam, pol);
}

TrialOutcome trial_L41(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const PairFamily fam = pick_family(rng);
    TrialOutcome out{ts, std::string(to_string(fam)), false, true, 0.0, ""};
    const PairInstance p = additive_pair(rng, fam, pol);
    if (!(p.weak_comm && p.both_hirano))
        return skipped(ts, out.family, "weakly commuting Hirano hypotheses not satisfied");
    out.hypotheses_met = true;
    out.conclusion_ok = product_hirano(p, pol);
    if (!out.conclusion_ok) out.detail = "ab lost Hirano invertibility";
    return out;
}

TrialOutcome trial_T43(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const PairFamily fam = pick_family(rng);
    TrialOutcome out{ts, std::string(to_string(fam)), false, true, 0.0, ""};
    const PairInstance p = additive_pair(rng, fam, pol);
    if (!(p.weak_comm && p.both_hirano))
        return skipped(ts, out.family, "weakly commuting Hirano hypotheses not satisfied");
    out.hypotheses_met = true;
    const auto [sum_ok, shifted_ok] = additive_equiv(p, pol);
    out.conclusion_ok = sum_ok == shifted_ok;
    if (!out.conclusion_ok)
        out.detail = std::string("biconditional broken: a+b=") + (sum_ok ? "yes" : "no") +
                     " 1+a^db=" + (shifted_ok ? "yes" : "no");
    return out;
}

TrialOutcome trial_L42(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const PairFamily fam = pick_family(rng);
    TrialOutcome out{ts, std::string(to_string(fam)), false, true, 0.0, ""};
    const PairInstance p = additive_pair(rng, fam, pol);
    if (!(p.weak_comm && p.both_hirano))
        return skipped(ts, out.family, "weakly commuting Hirano hypotheses not satisfied");
    out.hypotheses_met = true;
    const auto [sum_ok, shifted_ok] = additive_equiv(p, pol);
    out.conclusion_ok = !shifted_ok || sum_ok;
    if (!out.conclusion_ok) out.detail = "1+a^db Hirano but a+b not";
    return out;
}

TrialOutcome trial_C44(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const PairFamily fam = rng.coin() ? PairFamily::PolyCommuting : PairFamily::Orthogonal;
    TrialOutcome out{ts, std::string(to_string(fam)), false, true, 0.0, ""};
    const PairInstance p = additive_pair(rng, fam, pol);
    if (!(p.full_comm && p.both_hirano))
        return skipped(ts, out.family, "commuting Hirano hypotheses not satisfied");
    out.hypotheses_met = true;
    const auto [sum_ok, shifted_ok] = additive_equiv(p, pol);
    out.conclusion_ok = sum_ok == shifted_ok;
    if (!out.conclusion_ok) out.detail = "biconditional broken under full commutation";
    return out;
}

TrialOutcome trial_P45(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"negated", "orthogonal", "shift-pair"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};

    Dense a, b;
    const Index dim = rng.uniform_int(2, 8);
    if (fam == 0) {
        a = gen_jordan(random_mixed_spec(rng, dim, 20.0), pol).a.mat();
        b = -a;
    } else if (fam == 1) {
        const PairInstance p = gen_weak_comm_pair(rng.next_u64() | 1, std::max<Index>(dim, 3),
                                                  PairFamily::Orthogonal, pol);
        a = p.a.mat();
        b = p.b.mat();
    } else {
        const double alphas[] = {1.0, -1.0, 2.0, 0.5};
        const double alpha = alphas[rng.uniform_int(0, 3)];
        Dense a0 = Dense::Zero(2, 2), b0 = Dense::Zero(2, 2);
        a0(0, 1) = alpha;
        b0(1, 0) = 1.0 / alpha;
        const Index tail = dim >= 2 ? dim - 2 : 0;
        Dense ta = Dense::Zero(tail, tail);
        for (Index i = 0; i < tail; ++i)
            ta(i, i) = static_cast<double>(rng.uniform_int(-1, 1));
        a = blkdiag(a0, ta);
        b = blkdiag(b0, Dense::Zero(tail, tail));
        std::tie(a, b) = conjugate_pair(a, b, rng);
    }

    try {
        out.conclusion_ok = split_sufficient(CMatrix(a), CMatrix(b), pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "a+b lost Hirano invertibility";
    return out;
}

TrialOutcome trial_C46(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const bool lower = rng.coin();
    TrialOutcome out{ts, lower ? "lower-block" : "orthogonal", false, true, 0.0, ""};

    Dense a, b;
    if (lower) {
        const Index p = rng.uniform_int(1, 4);
        const Index q = rng.uniform_int(1, 4);
        const Dense a1 = jordan_matrix(random_hirano_spec(rng, p, 20.0)).mat();
        const Dense b2 = jordan_matrix(random_hirano_spec(rng, q, 20.0)).mat();
        const Dense c = rand_int_matrix(rng, q, p, -2, 2);
        a = blkdiag(a1, Dense::Zero(q, q));
        b = Dense::Zero(p + q, p + q);
        b.bottomLeftCorner(q, p) = c;
        b.bottomRightCorner(q, q) = b2;
        std::tie(a, b) = conjugate_pair(a, b, rng);
    } else {
        const Index dim = rng.uniform_int(3, 8);
        const PairInstance p = gen_weak_comm_pair(rng.next_u64() | 1, dim,
                                                  PairFamily::Orthogonal, pol);
        a = p.a.mat();
        b = p.b.mat();
    }

    try {
        out.conclusion_ok = orthogonal_sum(CMatrix(a), CMatrix(b), pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "a+b lost Hirano invertibility";
    return out;
}

// --- section 5: block matrices ------------------------------------------

struct Frame {
    JordanSpec spec;
    Dense j;           // Jordan matrix, exact
    Dense pi;          // zero-cluster selector, exact
    Dense dinv;        // blockwise Drazin inverse, exact
    Similarity sim;
};

Frame make_frame(Rng& rng, Index dim, bool force_zero, bool force_core, Index zero_max,
                 Index min_zero_blocks = 0) {
    JordanSpec spec;
    Index rem = dim;
    if (force_core) {
        const Index s = std::min<Index>(rem, rng.uniform_int(1, 2));
        spec.blocks.push_back({Complex(rng.coin() ? 1.0 : -1.0, 0.0), s});
        rem -= s;
    }
    Index zero_blocks = 0;
    while (zero_blocks < min_zero_blocks && rem > 0) {
        const Index s = std::min<Index>(rem, rng.uniform_int(1, std::max<Index>(1, zero_max)));
        spec.blocks.push_back({Complex(0.0, 0.0), s});
        ++zero_blocks;
        rem -= s;
    }
    if (force_zero && zero_blocks == 0 && rem > 0) {
        const Index s = std::min<Index>(rem, rng.uniform_int(1, std::max<Index>(1, zero_max)));
        spec.blocks.push_back({Complex(0.0, 0.0), s});
        ++zero_blocks;
        rem -= s;
    }
    while (rem > 0) {
        const bool zero = rng.coin(0.4);
        const Index cap = zero ? std::max<Index>(1, zero_max) : 3;
        const Index s = std::min<Index>(rem, rng.uniform_int(1, cap));
        spec.blocks.push_back({zero ? Complex(0.0, 0.0)
                                    : Complex(rng.coin() ? 1.0 : -1.0, 0.0),
                               s});
        rem -= s;
    }
    spec.similarity_seed = derive_seed(rng.next_u64(), 13);
    spec.cond_bound = rng.uniform(1.0, 20.0);

    Frame f;
    f.spec = spec;
    f.j = jordan_matrix(spec).mat();
    const Index n = spec.dim();
    f.pi = Dense::Zero(n, n);
    f.dinv = Dense::Zero(n, n);
    Index off = 0;
    for (const auto& blk : spec.blocks) {
        if (blk.eigenvalue == Complex(0.0, 0.0))
            f.pi.block(off, off, blk.size, blk.size) = Dense::Identity(blk.size, blk.size);
        else
            f.dinv.block(off, off, blk.size, blk.size) =
                jordan_block_inverse(blk.eigenvalue, blk.size);
        off += blk.size;
    }
    f.sim = make_similarity(n, spec.similarity_seed, spec.cond_bound);
    return f;
}

Dense conj_block(const Frame& row_frame, const Dense& x, const Frame& col_frame) {
    return row_frame.sim.s * x * col_frame.sim.s_inv;
}

TrialOutcome trial_L51(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    TrialOutcome out{ts, "triangular", false, true, 0.0, ""};
    const Index p = rng.uniform_int(1, 4);
    const Index q = rng.uniform_int(1, 4);
    const CMatrix A = gen_hirano(random_hirano_spec(rng, p, 20.0), pol).a;
    const CMatrix D = gen_hirano(random_hirano_spec(rng, q, 20.0), pol).a;
    const Dense B = rand_gauss_matrix(rng, p, q);
    const Block2x2 m(A, B, Dense::Zero(q, p), D);
    try {
        out.conclusion_ok = triangular_hirano(m, pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "assembled triangular matrix lost Hirano invertibility";
    return out;
}

TrialOutcome trial_L52(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    TrialOutcome out{ts, "block-projector", false, true, 0.0, ""};
    const Index dim = rng.uniform_int(1, 8);
    const JordanSpec spec = random_hirano_spec(rng, dim, 50.0);
    const Similarity sim = make_similarity(spec.dim(), spec.similarity_seed, spec.cond_bound);
    const Conjugator conj{sim};

    Dense ej = Dense::Zero(spec.dim(), spec.dim());
    Index off = 0;
    for (const auto& blk : spec.blocks) {
        if (rng.coin())
            ej.block(off, off, blk.size, blk.size) = Dense::Identity(blk.size, blk.size);
        off += blk.size;
    }
    const CMatrix a = conj(jordan_matrix(spec).mat());
    const CMatrix e = conj(ej);
    try {
        out.conclusion_ok = corner_hirano(e, a, pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& ex) {
        return skipped(ts, out.family, ex.what());
    }
    if (!out.conclusion_ok) out.detail = "ea lost Hirano invertibility";
    return out;
}

TrialOutcome trial_T53(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"b-only", "c-only", "two-sided"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};

    const Index p = rng.uniform_int(2, 4);
    const Index q = rng.uniform_int(2, 4);
    Frame fa, fd;
    Dense bj = Dense::Zero(p, q), cj = Dense::Zero(q, p);
    if (fam == 0) {
        // C = 0, B = (I - A^pi) R D^pi.
        fa = make_frame(rng, p, false, true, 3);
        fd = make_frame(rng, q, true, false, 3);
        bj = (Dense::Identity(p, p) - fa.pi) * rand_gauss_matrix(rng, p, q) * fd.pi;
    } else if (fam == 1) {
        // B = 0, C = D^pi R A^pi with semisimple zero cluster in D.
        fa = make_frame(rng, p, true, false, 3);
        fd = make_frame(rng, q, true, false, 1);
        cj = fd.pi * rand_gauss_matrix(rng, q, p) * fa.pi;
    } else {
        // B through one zero sub-block of D, C through a disjoint size-1 one.
        fa = make_frame(rng, p, true, true, 3);
        fd = make_frame(rng, q, true, false, 1, /*min_zero_blocks=*/2);
        Dense pi1 = Dense::Zero(q, q), pi2 = Dense::Zero(q, q);
        Index off = 0;
        bool first = true;
        for (const auto& blk : fd.spec.blocks) {
            if (blk.eigenvalue == Complex(0.0, 0.0)) {
                (first ? pi2 : pi1).block(off, off, blk.size, blk.size) =
                    Dense::Identity(blk.size, blk.size);
                first = false;
            }
            off += blk.size;
        }
        bj = (Dense::Identity(p, p) - fa.pi) * rand_gauss_matrix(rng, p, q) * pi1;
        cj = pi2 * rand_gauss_matrix(rng, q, p) * fa.pi;
    }

    const Block2x2 m(CMatrix(Dense(fa.sim.s * fa.j * fa.sim.s_inv)), conj_block(fa, bj, fd),
                     conj_block(fd, cj, fa), CMatrix(Dense(fd.sim.s * fd.j * fd.sim.s_inv)));
    try {
        out.conclusion_ok = thm_5_3(m, pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "assembled matrix lost Hirano invertibility";
    return out;
}

TrialOutcome trial_P54(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"b-only", "c-only", "two-sided"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};

    const Index p = rng.uniform_int(2, 4);
    const Index q = rng.uniform_int(2, 4);
    const Frame fa = make_frame(rng, p, true, true, 3);
    const Frame fd = make_frame(rng, q, true, true, 3);
    Dense bj = Dense::Zero(p, q), cj = Dense::Zero(q, p);
    if (fam != 1)
        bj = (Dense::Identity(p, p) - fa.pi) * rand_gauss_matrix(rng, p, q) *
             (Dense::Identity(q, q) - fd.pi);
    if (fam != 0) cj = fd.pi * rand_gauss_matrix(rng, q, p) * fa.pi;

    const Block2x2 m(CMatrix(Dense(fa.sim.s * fa.j * fa.sim.s_inv)), conj_block(fa, bj, fd),
                     conj_block(fd, cj, fa), CMatrix(Dense(fd.sim.s * fd.j * fd.sim.s_inv)));
    try {
        out.conclusion_ok = prop_5_4(m, pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "assembled matrix lost Hirano invertibility";
    return out;
}

TrialOutcome trial_T55(std::uint64_t ts, const NumericPolicy& pol) {
    Rng rng(ts);
    const int fam = static_cast<int>(rng.uniform_int(0, 2));
    const char* names[] = {"c-zero", "b-zero", "rank-one"};
    TrialOutcome out{ts, names[fam], false, true, 0.0, ""};

    const Index p = rng.uniform_int(2, 4);
    const Index q = rng.uniform_int(1, 3);
    const Frame fa = make_frame(rng, p, rng.coin(), true, 3);
    Dense bj = Dense::Zero(p, q), cj = Dense::Zero(q, p);
    const Dense ip = Dense::Identity(p, p);
    if (fam == 0) {
        bj = (ip - fa.pi) * rand_gauss_matrix(rng, p, q);
    } else if (fam == 1) {
        cj = rand_gauss_matrix(rng, q, p) * (ip - fa.pi);
    } else {
        Dense u = rand_gauss_matrix(rng, p, 1), z = rand_gauss_matrix(rng, p, 1);
        Dense v = rand_gauss_matrix(rng, q, 1), w = rand_gauss_matrix(rng, q, 1);
        // v orthogonal to w so that BC = 0 and W stays A A^d.
        const Complex proj = (w.adjoint() * v)(0, 0) / (w.adjoint() * w)(0, 0);
        v -= proj * w;
        bj = (ip - fa.pi) * u * v.adjoint();
        cj = w * z.adjoint() * (ip - fa.pi);
    }
    const Dense dj = cj * fa.dinv * bj;

    const Frame fd_like{{}, Dense(), Dense(), Dense(),
                        make_similarity(q, derive_seed(rng.next_u64(), 17), 20.0)};
    const Dense b = fa.sim.s * bj * fd_like.sim.s_inv;
    const Dense c = fd_like.sim.s * cj * fa.sim.s_inv;
    const Dense d = fd_like.sim.s * dj * fd_like.sim.s_inv;

    const Block2x2 m(CMatrix(Dense(fa.sim.s * fa.j * fa.sim.s_inv)), b, c, CMatrix(d));
    try {
        out.conclusion_ok = thm_5_5(m, pol);
        out.hypotheses_met = true;
    } catch (const PreconditionError& e) {
        return skipped(ts, out.family, e.what());
    }
    if (!out.conclusion_ok) out.detail = "assembled matrix lost Hirano invertibility";
    return out;
}

using TrialFn = TrialOutcome (*)(std::uint64_t, const NumericPolicy&);

const std::map<std::string, TrialFn>& registry() {
    static const std::map<std::string, TrialFn> reg = {
        {"L2.1", trial_L21}, {"T2.4", trial_T24}, {"C2.5", trial_C25}, {"L2.6", trial_L26},
        {"T2.7", trial_T27}, {"C2.8", trial_C28}, {"P2.9", trial_P29}, {"L3.1", trial_L31},
        {"T3.3", trial_T33}, {"C3.4", trial_C34}, {"C3.5", trial_C35}, {"C3.6", trial_C36},
        {"L4.1", trial_L41}, {"L4.2", trial_L42}, {"T4.3", trial_T43}, {"C4.4", trial_C44},
        {"P4.5", trial_P45}, {"C4.6", trial_C46}, {"L5.1", trial_L51}, {"L5.2", trial_L52},
        {"T5.3", trial_T53}, {"P5.4", trial_P54}, {"T5.5", trial_T55}, {"Cline", trial_Cline},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& theorem_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return labels;
}

std::vector<TrialOutcome> run_trials(const std::string& theorem, int count, std::uint64_t seed,
                                     const NumericPolicy& pol) {
    pol.validate();
    if (count < 0) throw PreconditionError("run_trials: count must be nonnegative");
    const auto it = registry().find(theorem);
    if (it == registry().end())
        throw PreconditionError("run_trials: unknown theorem label '" + theorem + "'");

    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(i));
        TrialOutcome out;
        try {
            out = it->second(ts, pol);
        } catch (const Error& e) {
            out = TrialOutcome{ts, "harness", true, false, 0.0,
                               std::string("error: ") + e.what()};
        }
        out.seed = ts;
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

TrialSummary summarize(const std::vector<TrialOutcome>& outcomes) {
    TrialSummary s;
    s.total = static_cast<int>(outcomes.size());
    for (const auto& o : outcomes) {
        if (o.hypotheses_met) {
            ++s.met;
            if (!o.conclusion_ok) ++s.failed;
            s.residual_max = std::max(s.residual_max, o.residual_max);
        } else {
            ++s.skipped;
        }
        ++s.families[o.family];
    }
    return s;
}

}  // namespace hirano::testkit
