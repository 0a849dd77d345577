#pragma once

#include "hirano/spectral.hpp"
#include "hirano/types.hpp"

#include <optional>

namespace hirano {

/// Certificate for a generalized Hirano inverse:
///   b — the inverse:      b a b = b,  a b = b a,  a^2 - a b nilpotent
///   e — tripotent part:   e^3 = e,  e a = a e,  with  e = f - g
///   w — nilpotent part:   w = a - e
///   f, g — orthogonal idempotent projectors onto the eigenvalue-1 and
///          eigenvalue--1 generalized eigenspaces (f g = g f = 0)
/// b^2 additionally satisfies b^2 = (a b^2)^2 with a^2 - a^2 b^2 nilpotent.
struct HiranoCertificate {
    CMatrix b;
    CMatrix e;
    CMatrix w;
    CMatrix f;
    CMatrix g;
    ResidualReport residuals;
};

/// All certificate residuals for the given parts, nilpotency entries recorded
/// as the normalized power residual.
ResidualReport certificate_residuals(const CMatrix& a, const CMatrix& b, const CMatrix& e,
                                     const CMatrix& w, const CMatrix& f, const CMatrix& g,
                                     const NumericPolicy& pol);

/// True iff a - a^3 passes the nilpotency test (existence of the g-Drazin
/// inverse is automatic for matrices).
bool has_hirano(const CMatrix& a, const NumericPolicy& pol);

/// Empty iff has_hirano(a) is false. Otherwise f and g are the spectral
/// projectors at +1 and -1, e = f - g, w = a - e, and b is the Drazin
/// inverse, cross-checked against (a^2 + I - e^2)^-1 e^2. A cross-check
/// disagreement throws ResidualError with both candidates' distance.
std::optional<HiranoCertificate> hirano_inverse(const CMatrix& a, const NumericPolicy& pol);

/// The two halves (a^2 + a)/2 and (a^2 - a)/2 plus a flag that is true iff
/// both pass the gs-Drazin test; the flag equals has_hirano(a).
struct Halves {
    CMatrix plus;
    CMatrix minus;
    bool both_gs = false;
};

Halves halves(const CMatrix& a, const NumericPolicy& pol);

/// has_hirano(a^m); true for every m >= 1 whenever has_hirano(a) holds.
bool power_hirano(const CMatrix& a, unsigned long m, const NumericPolicy& pol);

/// has_hirano(e a) for an idempotent e commuting with a Hirano-invertible a.
/// Violated preconditions throw PreconditionError naming the condition,
/// distinct from a false verdict.
bool corner_hirano(const CMatrix& e, const CMatrix& a, const NumericPolicy& pol);

}  // namespace hirano
