#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pclean/decompositions.hpp"

namespace pclean {

/// A 2×2 matrix with entries in a base ring, row-major.
struct Matrix2 {
    Index a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    bool operator==(const Matrix2&) const = default;
};

namespace m2 {

Matrix2 identity(const RingTable& r);
Matrix2 diag(Index x, Index y, const RingTable& r);
/// I + ξ·E_ij for (i, j) ∈ {(1,2), (2,1)}.
Matrix2 transvection(int i, int j, Index xi, const RingTable& r);
Matrix2 add(const RingTable& r, const Matrix2& x, const Matrix2& y);
Matrix2 sub(const RingTable& r, const Matrix2& x, const Matrix2& y);
Matrix2 mul(const RingTable& r, const Matrix2& x, const Matrix2& y);
Matrix2 square(const RingTable& r, const Matrix2& x);
Index trace(const RingTable& r, const Matrix2& x);
/// a11·a22 − a12·a21; meaningful for commutative bases.
Index det(const RingTable& r, const Matrix2& x);
/// Inverse via the adjugate when det is a unit (commutative base).
std::optional<Matrix2> inverse(const RingTable& r, const Matrix2& x);
bool is_nilpotent(const RingTable& r, const Matrix2& x);
/// Decided from the power sequence, as for ring elements.
bool strongly_pi_regular(const RingTable& r, const Matrix2& a);
/// Every entry satisfies `pred`.
template <typename Pred>
bool entrywise(const Matrix2& x, Pred&& pred) {
    return pred(x.a11) && pred(x.a12) && pred(x.a21) && pred(x.a22);
}

std::string format(const RingTable& r, const Matrix2& x);
/// Parses "[a,b;c,d]" with entries in the base ring's syntax. Throws
/// ParseError with the byte offset into `text`.
Matrix2 parse(const RingTable& r, std::string_view text);

}  // namespace m2

enum class Classification { InP, OneMinusInP, Split, NotPClean };
std::string_view to_string(Classification c);

enum class RootClass { InP, OnePlusP, Other };
std::string_view to_string(RootClass c);

struct QuadraticRoot {
    Index root = 0;
    RootClass cls = RootClass::Other;
};

/// Shared context for 2×2 work over one commutative base ring. M2(base) is
/// materialized when |base|^4 ≤ m2_limit; otherwise the definitional check
/// falls back to an idempotent list gathered by scanning all 4-tuples and
/// entrywise radical membership.
class MatrixContext {
public:
    explicit MatrixContext(RingPtr base, std::uint64_t m2_limit = 65536);

    const RingAnalysis& base() const noexcept { return base_; }
    const RingTable& ring() const noexcept { return base_.ring(); }
    bool commutative() const noexcept { return commutative_; }
    bool local() const;

    /// Null when M2(base) was not materialized.
    const RingAnalysis* m2() const noexcept { return m2_ ? &*m2_ : nullptr; }
    Index to_index(const Matrix2& x) const;
    Matrix2 from_index(Index i) const;

    bool in_p(Index x) const { return base_.in_prime_radical(x); }
    bool in_one_plus_p(Index x) const { return in_p(ring().sub(x, ring().one())); }
    bool in_mp(const Matrix2& x) const {
        return m2::entrywise(x, [&](Index v) { return in_p(v); });
    }

    /// Idempotents of M2(base) in index order of the materialized ring, or in
    /// 4-tuple scan order otherwise.
    const std::vector<Matrix2>& idempotents() const;

    /// Throws NotCommutative / NotLocal unless the base is commutative local.
    void require_commutative_local() const;

private:
    RingAnalysis base_;
    std::optional<RingAnalysis> m2_;
    bool commutative_ = false;
    mutable std::once_flag local_once_;
    mutable bool local_ = false;
    mutable std::once_flag idem_once_;
    mutable std::vector<Matrix2> idempotents_;
};

/// All x with x² − t·x + d = 0, each classified against P(r).
/// Throws Error(NotCommutative).
std::vector<QuadraticRoot> quadratic_roots(const MatrixContext& ctx, Index t, Index d);

struct SimilarityWitness {
    enum class Form { Diagonal, Companion };
    Form form = Form::Diagonal;
    Matrix2 h;
    Matrix2 h_inv;
    /// Diagonal: diag(lambda, mu). Companion: [[0, lambda], [1, mu]].
    Index lambda = 0;
    Index mu = 0;

    Matrix2 target(const RingTable& r) const;
};

/// H·H⁻¹ = I and H·A·H⁻¹ equals the tagged form.
bool check_witness(const RingTable& r, const Matrix2& a, const SimilarityWitness& w);

struct MatrixCertificate {
    Matrix2 idempotent;
    Matrix2 remainder;
    /// Same decomposition inside the materialized M2 ring, when available.
    std::optional<CleanCertificate> in_ring;
};

struct CriteriaVerdicts {
    bool definitional = false;  // (i) idempotent scan
    bool square_test = false;   // (ii) A − A² ∈ M2(P)
    bool root_test = false;     // (iii) trivial classes or roots in P and 1+P
    std::vector<QuadraticRoot> roots;
    std::optional<MatrixCertificate> certificate;
};

/// Evaluates all three criteria without comparing them.
CriteriaVerdicts evaluate_criteria(const MatrixContext& ctx, const Matrix2& a);

struct MatrixAnalysis {
    Classification cls = Classification::NotPClean;
    CriteriaVerdicts criteria;
    std::optional<SimilarityWitness> witness;
};

/// Classifies A; throws CriterionMismatch if the three criteria disagree.
MatrixAnalysis classify_pclean_2x2(const MatrixContext& ctx, const Matrix2& a);

/// H with H·A·H⁻¹ = diag(1+v11, v22), built by moving E to diag(1,0) using a
/// unimodular column of E and of I−E; GL2 search fallback for |r| ≤ 16.
/// Throws TrivialIdempotent for E ∈ {0, I}.
SimilarityWitness diagonalize_split(const MatrixContext& ctx, const Matrix2& a, const MatrixCertificate& cert);

/// The transvection product conjugating diag(α, β) to [[0, −αβ], [1, α+β]],
/// evaluated verbatim. Throws NotInvertible when α − β is not a unit.
SimilarityWitness companion_form(const RingTable& r, Index alpha, Index beta);

/// H with H·A·H⁻¹ = [[0, −det A], [1, tr A]], from a vector v with
/// det[v | Av] a unit. nullopt when A has no such cyclic vector.
std::optional<SimilarityWitness> companion_similarity(const RingTable& r, const Matrix2& a);

/// x = Σ_{k<m} a^{−(k+1)}·v·b^k solving a·x − x·b = v. Requires a a unit and
/// b^m = 0. Throws PreconditionFailed.
Index solve_phi(const RingTable& r, Index a, Index b, Index v);
/// y = Σ_{k<m} a^k·v·b^{−(k+1)} solving y·b − a·y = v for a nilpotent, b a unit.
Index solve_phi_mirror(const RingTable& r, Index a, Index b, Index v);

struct TriangularResult {
    bool pclean = false;
    std::optional<CleanCertificate> certificate;
};

/// Decides [[a, v], [0, b]] in T2(base) by diagonal membership and builds the
/// idempotent from solve_phi in the mixed case. `t2` must be T2 of a local
/// ring. Throws NotLocal, or CriterionMismatch if the built certificate fails.
TriangularResult triangular_pclean(const RingAnalysis& t2, Index a, Index v, Index b);

struct DiscriminantRecord {
    Index trace = 0;
    Index det = 0;
    Index discriminant = 0;  // tr² − 4·det
    bool trivial = false;    // A or I − A in M2(P)
    bool trace_in_one_plus_p = false;
    std::vector<Index> square_witnesses;  // u ∈ 1+P with u² = discriminant
    std::vector<Index> cor45_roots;       // a ∈ P with a² − a = −det·tr⁻²
    std::vector<Index> half_roots;        // (tr − u)/2 when 2 is a unit
    bool two_is_unit = false;

    bool discriminant_condition() const { return trivial || (trace_in_one_plus_p && !square_witnesses.empty()); }
    bool cor45_condition() const { return trivial || (trace_in_one_plus_p && !cor45_roots.empty()); }
};

DiscriminantRecord discriminant_record(const MatrixContext& ctx, const Matrix2& a);

/// Record plus agreement with classify_pclean_2x2: discriminant condition is
/// necessary; it is also sufficient when 2 is a unit; the trace-root
/// condition is equivalent. Throws CriterionMismatch on disagreement.
DiscriminantRecord discriminant_criteria(const MatrixContext& ctx, const Matrix2& a);

enum class PiRegularClass { Unit, Nilpotent, PClean, NotPiRegular };
std::string_view to_string(PiRegularClass c);

/// Requires a commutative base with R/J(R) ≅ Z2 and J(R) nilpotent (else
/// HypothesisViolated). Checks the class against strong π-regularity decided
/// in M2(base) when materialized (CriterionMismatch otherwise).
PiRegularClass pi_regular_trichotomy(const MatrixContext& ctx, const Matrix2& a);

}  // namespace pclean
