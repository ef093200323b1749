#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "pclean/error.hpp"
#include "pclean/matrix.hpp"

namespace pclean {

std::string_view to_string(Classification c) {
    switch (c) {
    case Classification::InP: return "IN_P";
    case Classification::OneMinusInP: return "ONE_MINUS_IN_P";
    case Classification::Split: return "SPLIT";
    case Classification::NotPClean: return "NOT_PCLEAN";
    }
    return "?";
}

std::string_view to_string(RootClass c) {
    switch (c) {
    case RootClass::InP: return "P";
    case RootClass::OnePlusP: return "1+P";
    case RootClass::Other: return "OTHER";
    }
    return "?";
}

std::string_view to_string(PiRegularClass c) {
    switch (c) {
    case PiRegularClass::Unit: return "UNIT";
    case PiRegularClass::Nilpotent: return "NILPOTENT";
    case PiRegularClass::PClean: return "PCLEAN";
    case PiRegularClass::NotPiRegular: return "NOT_PI_REGULAR";
    }
    return "?";
}

namespace {

RingPtr materialize_m2(const RingPtr& base, std::uint64_t limit) {
    if (!base->spec()) return nullptr;
    const std::uint64_t n = base->order();
    if (n > 256 || n * n * n * n > limit) return nullptr;
    BuildOptions options;
    options.order_limit = limit;
    return build_ring(RingSpec::matrix(2, *base->spec()), options);
}

}  // namespace

MatrixContext::MatrixContext(RingPtr base, std::uint64_t m2_limit)
    : base_(base), commutative_(base->is_commutative()) {
    if (RingPtr m = materialize_m2(base, m2_limit)) m2_.emplace(std::move(m));
}

bool MatrixContext::local() const {
    std::call_once(local_once_, [this] { local_ = is_local(ring()); });
    return local_;
}

void MatrixContext::require_commutative_local() const {
    if (!commutative_) throw Error(ErrorCode::NotCommutative, ring().name() + " is not commutative");
    if (!local()) throw Error(ErrorCode::NotLocal, ring().name() + " is not local");
}

Index MatrixContext::to_index(const Matrix2& x) const {
    if (!m2_) throw Error(ErrorCode::PreconditionFailed, "M2 of " + ring().name() + " is not materialized");
    const Index e[] = {x.a11, x.a12, x.a21, x.a22};
    return m2_->ring().from_matrix_entries(e);
}

Matrix2 MatrixContext::from_index(Index i) const {
    if (!m2_) throw Error(ErrorCode::PreconditionFailed, "M2 of " + ring().name() + " is not materialized");
    const auto e = m2_->ring().matrix_entries(i);
    return {e[0], e[1], e[2], e[3]};
}

const std::vector<Matrix2>& MatrixContext::idempotents() const {
    std::call_once(idem_once_, [this] {
        if (m2_) {
            for (Index e : m2_->ring().idempotents()) idempotents_.push_back(from_index(e));
            return;
        }
        const RingTable& r = ring();
        const std::uint64_t n = r.order();
        if (n * n * n * n > (std::uint64_t{1} << 27))
            throw Error(ErrorCode::OrderLimitExceeded, "M2 of " + r.name() + " is too large to scan");
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c)
                    for (Index d = 0; d < n; ++d) {
                        const Matrix2 m{a, b, c, d};
                        if (m2::square(r, m) == m) idempotents_.push_back(m);
                    }
    });
    return idempotents_;
}

std::vector<QuadraticRoot> quadratic_roots(const MatrixContext& ctx, Index t, Index d) {
    if (!ctx.commutative()) throw Error(ErrorCode::NotCommutative, ctx.ring().name() + " is not commutative");
    const RingTable& r = ctx.ring();
    std::vector<QuadraticRoot> out;
    for (Index x = 0; x < r.order(); ++x) {
        if (r.add(r.sub(r.mul(x, x), r.mul(t, x)), d) != r.zero()) continue;
        RootClass cls = RootClass::Other;
        if (ctx.in_p(x)) cls = RootClass::InP;
        else if (ctx.in_one_plus_p(x)) cls = RootClass::OnePlusP;
        out.push_back({x, cls});
    }
    return out;
}

Matrix2 SimilarityWitness::target(const RingTable& r) const {
    if (form == Form::Diagonal) return m2::diag(lambda, mu, r);
    return {r.zero(), lambda, r.one(), mu};
}

bool check_witness(const RingTable& r, const Matrix2& a, const SimilarityWitness& w) {
    if (m2::mul(r, w.h, w.h_inv) != m2::identity(r)) return false;
    if (m2::mul(r, w.h_inv, w.h) != m2::identity(r)) return false;
    return m2::mul(r, m2::mul(r, w.h, a), w.h_inv) == w.target(r);
}

CriteriaVerdicts evaluate_criteria(const MatrixContext& ctx, const Matrix2& a) {
    ctx.require_commutative_local();
    const RingTable& r = ctx.ring();
    CriteriaVerdicts out;
    const Matrix2 id = m2::identity(r);

    out.square_test = ctx.in_mp(m2::sub(r, a, m2::square(r, a)));

    out.roots = quadratic_roots(ctx, m2::trace(r, a), m2::det(r, a));
    bool root_p = false, root_1p = false;
    for (const auto& q : out.roots) {
        root_p = root_p || q.cls == RootClass::InP;
        root_1p = root_1p || q.cls == RootClass::OnePlusP;
    }
    out.root_test = ctx.in_mp(a) || ctx.in_mp(m2::sub(r, id, a)) || (root_p && root_1p);

    if (const RingAnalysis* m2r = ctx.m2()) {
        const RingTable& big = m2r->ring();
        const Index ai = ctx.to_index(a);
        for (Index e : big.idempotents()) {
            if (!big.commutes(ai, e)) continue;
            const Index w = big.sub(ai, e);
            if (!m2r->in_prime_radical(w)) continue;
            out.definitional = true;
            CleanCertificate c;
            c.kind = CleanKind::StronglyPClean;
            c.element = ai;
            c.idempotent = e;
            c.remainder = w;
            c.witness_index = is_strongly_nilpotent(big, w).index;
            out.certificate = MatrixCertificate{ctx.from_index(e), ctx.from_index(w), c};
            break;
        }
    } else {
        for (const Matrix2& e : ctx.idempotents()) {
            if (m2::mul(r, a, e) != m2::mul(r, e, a)) continue;
            const Matrix2 w = m2::sub(r, a, e);
            if (!ctx.in_mp(w)) continue;
            out.definitional = true;
            out.certificate = MatrixCertificate{e, w, std::nullopt};
            break;
        }
    }
    return out;
}

MatrixAnalysis classify_pclean_2x2(const MatrixContext& ctx, const Matrix2& a) {
    MatrixAnalysis out;
    out.criteria = evaluate_criteria(ctx, a);
    const auto& c = out.criteria;
    const RingTable& r = ctx.ring();
    if (c.definitional != c.square_test || c.definitional != c.root_test)
        throw Error(ErrorCode::CriterionMismatch,
                    "criteria disagree for " + m2::format(r, a) + " over " + r.name() + ": scan=" +
                        std::to_string(c.definitional) + " square=" + std::to_string(c.square_test) +
                        " roots=" + std::to_string(c.root_test));
    if (ctx.in_mp(a)) out.cls = Classification::InP;
    else if (ctx.in_mp(m2::sub(r, m2::identity(r), a))) out.cls = Classification::OneMinusInP;
    else if (c.definitional) {
        out.cls = Classification::Split;
        out.witness = diagonalize_split(ctx, a, *c.certificate);
    } else out.cls = Classification::NotPClean;
    return out;
}

namespace {

// A column with a unit entry, or nullopt.
std::optional<std::pair<Index, Index>> unimodular_column(const RingTable& r, const Matrix2& m) {
    if (r.is_unit(m.a11) || r.is_unit(m.a21)) return std::make_pair(m.a11, m.a21);
    if (r.is_unit(m.a12) || r.is_unit(m.a22)) return std::make_pair(m.a12, m.a22);
    return std::nullopt;
}

std::optional<SimilarityWitness> finish_diagonal(const RingTable& r, const Matrix2& a, const Matrix2& e,
                                                 const Matrix2& h, const Matrix2& h_inv) {
    if (m2::mul(r, m2::mul(r, h, e), h_inv) != m2::diag(r.one(), r.zero(), r)) return std::nullopt;
    const Matrix2 d = m2::mul(r, m2::mul(r, h, a), h_inv);
    SimilarityWitness w;
    w.form = SimilarityWitness::Form::Diagonal;
    w.h = h;
    w.h_inv = h_inv;
    w.lambda = d.a11;
    w.mu = d.a22;
    if (!check_witness(r, a, w)) return std::nullopt;
    return w;
}

}  // namespace

SimilarityWitness diagonalize_split(const MatrixContext& ctx, const Matrix2& a, const MatrixCertificate& cert) {
    const RingTable& r = ctx.ring();
    const Matrix2& e = cert.idempotent;
    const Matrix2 id = m2::identity(r);
    const Matrix2 zero{r.zero(), r.zero(), r.zero(), r.zero()};
    if (e == zero || e == id) throw Error(ErrorCode::TrivialIdempotent, "idempotent part is 0 or I");
    if (m2::square(r, e) != e || m2::mul(r, a, e) != m2::mul(r, e, a))
        throw Error(ErrorCode::PreconditionFailed, "certificate idempotent is invalid");

    // Columns u of E and v of I − E: E·u = u, E·v = 0, so [u | v]⁻¹·E·[u | v] = diag(1, 0).
    const auto u = unimodular_column(r, e);
    const auto v = unimodular_column(r, m2::sub(r, id, e));
    if (u && v) {
        const Matrix2 p{u->first, v->first, u->second, v->second};
        if (auto p_inv = m2::inverse(r, p))
            if (auto w = finish_diagonal(r, a, e, *p_inv, p)) return *w;
    }
    if (r.order() <= 16) {
        const Index n = Index(r.order());
        for (Index h11 = 0; h11 < n; ++h11)
            for (Index h12 = 0; h12 < n; ++h12)
                for (Index h21 = 0; h21 < n; ++h21)
                    for (Index h22 = 0; h22 < n; ++h22) {
                        const Matrix2 h{h11, h12, h21, h22};
                        if (auto h_inv = m2::inverse(r, h))
                            if (auto w = finish_diagonal(r, a, e, h, *h_inv)) return *w;
                    }
    }
    throw Error(ErrorCode::PreconditionFailed, "no diagonalizing conjugator found for " + m2::format(r, a));
}

SimilarityWitness companion_form(const RingTable& r, Index alpha, Index beta) {
    const Index d = r.sub(alpha, beta);
    const auto inv = r.inverse(d);
    if (!inv) throw Error(ErrorCode::NotInvertible, r.format(alpha) + " - " + r.format(beta) + " is not a unit");
    const Index x = r.mul(alpha, *inv);
    const Matrix2 left = m2::mul(r, m2::mul(r, m2::diag(d, r.one(), r), m2::transvection(1, 2, r.neg(x), r)),
                                 m2::transvection(2, 1, r.one(), r));
    const Matrix2 right = m2::mul(r, m2::mul(r, m2::transvection(2, 1, r.neg(r.one()), r), m2::transvection(1, 2, x, r)),
                                  m2::diag(*inv, r.one(), r));
    const Matrix2 diag = m2::diag(alpha, beta, r);
    const Matrix2 c = m2::mul(r, m2::mul(r, left, diag), right);
    SimilarityWitness w;
    w.form = SimilarityWitness::Form::Companion;
    w.h = left;
    w.h_inv = right;
    w.lambda = c.a12;
    w.mu = c.a22;
    if (c.a11 != r.zero() || c.a21 != r.one() || !check_witness(r, diag, w))
        throw Error(ErrorCode::CriterionMismatch, "transvection product is not in companion form");
    return w;
}

std::optional<SimilarityWitness> companion_similarity(const RingTable& r, const Matrix2& a) {
    const Index n = Index(r.order());
    for (Index v1 = 0; v1 < n; ++v1)
        for (Index v2 = 0; v2 < n; ++v2) {
            const Index w1 = r.add(r.mul(a.a11, v1), r.mul(a.a12, v2));
            const Index w2 = r.add(r.mul(a.a21, v1), r.mul(a.a22, v2));
            const Matrix2 p{v1, w1, v2, w2};
            const auto p_inv = m2::inverse(r, p);
            if (!p_inv) continue;
            SimilarityWitness w;
            w.form = SimilarityWitness::Form::Companion;
            w.h = *p_inv;
            w.h_inv = p;
            w.lambda = r.neg(m2::det(r, a));
            w.mu = m2::trace(r, a);
            if (check_witness(r, a, w)) return w;
        }
    return std::nullopt;
}

Index solve_phi(const RingTable& r, Index a, Index b, Index v) {
    const auto a_inv = r.inverse(a);
    if (!a_inv) throw Error(ErrorCode::PreconditionFailed, r.format(a) + " is not a unit");
    const auto m = r.nilpotency_exponent(b);
    if (!m) throw Error(ErrorCode::PreconditionFailed, r.format(b) + " is not nilpotent");
    Index x = r.zero();
    Index left = *a_inv;  // a^{-(k+1)}
    Index right = r.one();  // b^k
    for (std::size_t k = 0; k < *m; ++k) {
        x = r.add(x, r.mul(r.mul(left, v), right));
        left = r.mul(left, *a_inv);
        right = r.mul(right, b);
    }
    if (r.sub(r.mul(a, x), r.mul(x, b)) != v) throw Error(ErrorCode::PreconditionFailed, "a*x - x*b != v");
    return x;
}

Index solve_phi_mirror(const RingTable& r, Index a, Index b, Index v) {
    const auto b_inv = r.inverse(b);
    if (!b_inv) throw Error(ErrorCode::PreconditionFailed, r.format(b) + " is not a unit");
    const auto m = r.nilpotency_exponent(a);
    if (!m) throw Error(ErrorCode::PreconditionFailed, r.format(a) + " is not nilpotent");
    Index y = r.zero();
    Index left = r.one();  // a^k
    Index right = *b_inv;  // b^{-(k+1)}
    for (std::size_t k = 0; k < *m; ++k) {
        y = r.add(y, r.mul(r.mul(left, v), right));
        left = r.mul(left, a);
        right = r.mul(right, *b_inv);
    }
    if (r.sub(r.mul(y, b), r.mul(a, y)) != v) throw Error(ErrorCode::PreconditionFailed, "y*b - a*y != v");
    return y;
}

TriangularResult triangular_pclean(const RingAnalysis& t2, Index a, Index v, Index b) {
    const RingTable& t = t2.ring();
    if (t.kind() != RingKind::Triangular || t.matrix_size() != 2)
        throw Error(ErrorCode::PreconditionFailed, t.name() + " is not a 2x2 triangular ring");
    const RingTable& r = *t.components().at(0);
    if (!is_local(r)) throw Error(ErrorCode::NotLocal, r.name() + " is not local");
    // P(r) membership from the base ring's own RxR test.
    auto in_p = [&](Index x) { return is_strongly_nilpotent(r, x).strongly_nilpotent; };
    auto in_1p = [&](Index x) { return in_p(r.sub(x, r.one())); };

    std::optional<Matrix2> e;
    if (in_p(a) && in_p(b)) e = Matrix2{r.zero(), r.zero(), r.zero(), r.zero()};
    else if (in_1p(a) && in_1p(b)) e = m2::identity(r);
    else if (in_1p(a) && in_p(b)) e = Matrix2{r.one(), solve_phi(r, a, b, v), r.zero(), r.zero()};
    else if (in_p(a) && in_1p(b)) e = Matrix2{r.zero(), solve_phi_mirror(r, a, b, v), r.zero(), r.one()};

    TriangularResult out;
    if (!e) return out;
    const Index ai_entries[] = {a, v, r.zero(), b};
    const Index ei_entries[] = {e->a11, e->a12, e->a21, e->a22};
    const Index ai = t.from_matrix_entries(ai_entries);
    const Index ei = t.from_matrix_entries(ei_entries);
    CleanCertificate c;
    c.kind = CleanKind::StronglyPClean;
    c.element = ai;
    c.idempotent = ei;
    c.remainder = t.sub(ai, ei);
    const auto s = is_strongly_nilpotent(t, c.remainder);
    c.witness_index = s.index;
    if (!s.strongly_nilpotent || validate(t2, c))
        throw Error(ErrorCode::CriterionMismatch, "constructed triangular decomposition does not validate");
    out.pclean = true;
    out.certificate = c;
    return out;
}

DiscriminantRecord discriminant_record(const MatrixContext& ctx, const Matrix2& a) {
    ctx.require_commutative_local();
    const RingTable& r = ctx.ring();
    DiscriminantRecord d;
    d.trace = m2::trace(r, a);
    d.det = m2::det(r, a);
    d.discriminant = r.sub(r.mul(d.trace, d.trace), r.mul(r.scale(4, r.one()), d.det));
    d.trivial = ctx.in_mp(a) || ctx.in_mp(m2::sub(r, m2::identity(r), a));
    d.trace_in_one_plus_p = ctx.in_one_plus_p(d.trace);
    for (Index u = 0; u < r.order(); ++u)
        if (ctx.in_one_plus_p(u) && r.mul(u, u) == d.discriminant) d.square_witnesses.push_back(u);
    if (auto t_inv = r.inverse(d.trace)) {
        const Index rhs = r.neg(r.mul(d.det, r.mul(*t_inv, *t_inv)));
        for (Index x = 0; x < r.order(); ++x)
            if (ctx.in_p(x) && r.sub(r.mul(x, x), x) == rhs) d.cor45_roots.push_back(x);
    }
    const auto half = r.inverse(r.scale(2, r.one()));
    d.two_is_unit = half.has_value();
    if (half)
        for (Index u : d.square_witnesses) d.half_roots.push_back(r.mul(*half, r.sub(d.trace, u)));
    return d;
}

DiscriminantRecord discriminant_criteria(const MatrixContext& ctx, const Matrix2& a) {
    const DiscriminantRecord d = discriminant_record(ctx, a);
    const bool pclean = classify_pclean_2x2(ctx, a).cls != Classification::NotPClean;
    const RingTable& r = ctx.ring();
    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::CriterionMismatch, what + " for " + m2::format(r, a) + " over " + r.name());
    };
    if (pclean && !d.discriminant_condition()) fail("strongly P-clean but no square root u in 1+P");
    if (d.two_is_unit && d.discriminant_condition() != pclean) fail("discriminant criterion disagrees");
    if (d.cor45_condition() != pclean) fail("trace-normalized root criterion disagrees");
    return d;
}

PiRegularClass pi_regular_trichotomy(const MatrixContext& ctx, const Matrix2& a) {
    const RingTable& r = ctx.ring();
    if (!ctx.commutative()) throw Error(ErrorCode::HypothesisViolated, r.name() + " is not commutative");
    const Ideal& j = ctx.base().jacobson_radical();
    if (r.order() != 2 * j.size()) throw Error(ErrorCode::HypothesisViolated, "R/J(R) is not Z2 for " + r.name());
    if (!nilpotency_index(r, j)) throw Error(ErrorCode::HypothesisViolated, "J(R) is not nilpotent for " + r.name());

    PiRegularClass cls = PiRegularClass::NotPiRegular;
    if (r.is_unit(m2::det(r, a))) cls = PiRegularClass::Unit;
    else if (m2::is_nilpotent(r, a)) cls = PiRegularClass::Nilpotent;
    else if (classify_pclean_2x2(ctx, a).cls != Classification::NotPClean) cls = PiRegularClass::PClean;

    bool regular = false;
    if (const RingAnalysis* m2r = ctx.m2()) regular = strongly_pi_regular_element(m2r->ring(), ctx.to_index(a)).regular;
    else regular = m2::strongly_pi_regular(r, a);
    if (regular != (cls != PiRegularClass::NotPiRegular))
        throw Error(ErrorCode::CriterionMismatch, "pi-regular trichotomy disagrees for " + m2::format(r, a));
    return cls;
}

}  // namespace pclean
