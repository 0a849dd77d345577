#pragma once

#include "hirano/additive.hpp"
#include "hirano/blockmat.hpp"
#include "hirano/cline.hpp"
#include "hirano/hirano.hpp"
#include "hirano/spectral.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hirano::testkit {

/// Deterministic splitmix64-based generator. Implemented here rather than on
/// top of <random> distributions so identical seeds give identical streams
/// with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();                       ///< [0, 1)
    double uniform(double lo, double hi);
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  ///< inclusive
    double normal();                        ///< standard normal (Box-Muller)
    Complex cnormal();                      ///< complex standard normal
    bool coin(double p = 0.5);

private:
    std::uint64_t state_;
};

/// Per-trial seed stream: mixes the run seed with a stream index; never 0.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct JordanBlockSpec {
    Complex eigenvalue;
    Index size = 1;
};

/// Jordan data with a similarity transform of bounded condition number.
/// similarity_seed == 0 requests the identity similarity.
struct JordanSpec {
    std::vector<JordanBlockSpec> blocks;
    std::uint64_t similarity_seed = 0;
    double cond_bound = 1.0;

    Index dim() const;
};

/// The block-diagonal Jordan matrix of a spec, exact small-integer entries.
CMatrix jordan_matrix(const JordanSpec& spec);

/// Similarity transform built from random unitary factors times a bounded
/// diagonal scaling, so cond(S) <= cond_bound by construction. Both S and
/// its inverse are returned explicitly.
struct Similarity {
    Dense s;
    Dense s_inv;
};

Similarity make_similarity(Index n, std::uint64_t seed, double cond_bound);

/// Hirano instance with the certificate computed blockwise in Jordan
/// coordinates (exact block inverses for eigenvalues +-1, zero blocks for
/// eigenvalue 0) and conjugated. Every block eigenvalue must be one of
/// -1, 0, 1.
struct HiranoInstance {
    CMatrix a;
    HiranoCertificate oracle;
};

HiranoInstance gen_hirano(const JordanSpec& spec, const NumericPolicy& pol = {});

/// Jordan instance with arbitrary eigenvalues and the blockwise Drazin
/// oracle (exact inverse series on invertible blocks, zero on nilpotent
/// blocks).
struct JordanInstance {
    CMatrix a;
    DrazinData oracle;
};

JordanInstance gen_jordan(const JordanSpec& spec, const NumericPolicy& pol = {});

/// Random Jordan spec with eigenvalues in {-1, 0, 1} (generalized Hirano
/// instances by construction).
JordanSpec random_hirano_spec(Rng& rng, Index dim, double cond_bound);

/// Random Jordan spec drawing eigenvalues from {-1, 0, 1, 2, 0.5, i}; about
/// half the draws are restricted to the Hirano pool so both positive and
/// negative instances occur.
JordanSpec random_mixed_spec(Rng& rng, Index dim, double cond_bound);

/// Generator families for weakly commuting pairs (a^2 b = aba, b^2 a = bab).
enum class PairFamily {
    PolyCommuting,    ///< polynomials in a common Hirano matrix (fully commuting)
    BlockTriangular,  ///< genuinely non-commuting, built on a shared nilpotent block
    Orthogonal        ///< ab = ba = 0 with block-disjoint support
};

std::string_view to_string(PairFamily family);

/// Weakly commuting pair of Hirano-invertible matrices from the given
/// family; the defining identities hold exactly where the construction
/// permits (integer arithmetic), and at similarity-conjugation accuracy
/// otherwise. Requires dim >= 3.
PairInstance gen_weak_comm_pair(std::uint64_t seed, Index dim, PairFamily family,
                                const NumericPolicy& pol = {});

/// Same construction restricted to nilpotent ingredients on both sides.
PairInstance gen_nilpotent_pair(std::uint64_t seed, Index dim, PairFamily family,
                                const NumericPolicy& pol = {});

/// One property trial. A trial whose hypotheses are not met counts as
/// skipped and its conclusion is vacuously true.
struct TrialOutcome {
    std::uint64_t seed = 0;
    std::string family;
    bool hypotheses_met = false;
    bool conclusion_ok = true;
    double residual_max = 0.0;
    std::string detail;
};

struct TrialSummary {
    int total = 0;
    int met = 0;
    int skipped = 0;
    int failed = 0;
    double residual_max = 0.0;
    std::map<std::string, int> families;
};

/// Statement labels accepted by run_trials.
const std::vector<std::string>& theorem_labels();

/// Deterministic property-trial runner: identical (theorem, count, seed,
/// policy) yields identical outcome sequences. Unknown labels throw
/// PreconditionError.
std::vector<TrialOutcome> run_trials(const std::string& theorem, int count, std::uint64_t seed,
                                     const NumericPolicy& pol);

TrialSummary summarize(const std::vector<TrialOutcome>& outcomes);

}  // namespace hirano::testkit
