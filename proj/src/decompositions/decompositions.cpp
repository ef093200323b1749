#include "pclean/decompositions.hpp"

#include <algorithm>
#include <unordered_map>

#include "pclean/error.hpp"

namespace pclean {

RingAnalysis::RingAnalysis(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error(ErrorCode::PreconditionFailed, "null ring");
}

const Ideal& RingAnalysis::prime_radical() const {
    std::call_once(p_once_, [this] { p_ = pclean::prime_radical(*ring_); });
    return *p_;
}

const Ideal& RingAnalysis::jacobson_radical() const {
    std::call_once(j_once_, [this] { j_ = pclean::jacobson_radical(*ring_); });
    return *j_;
}

bool RingAnalysis::in_prime_radical(Index x) const {
    if (ring_->order() > kEagerRadicalLimit) return is_strongly_nilpotent(*ring_, x).strongly_nilpotent;
    return prime_radical().contains(x);
}

std::string_view to_string(CleanKind kind) {
    switch (kind) {
    case CleanKind::StronglyClean: return "STRONGLY_CLEAN";
    case CleanKind::StronglyNilClean: return "STRONGLY_NIL_CLEAN";
    case CleanKind::StronglyJClean: return "STRONGLY_J_CLEAN";
    case CleanKind::StronglyPClean: return "STRONGLY_P_CLEAN";
    }
    return "?";
}

std::optional<std::string> validate(const RingAnalysis& analysis, const CleanCertificate& c) {
    const RingTable& r = analysis.ring();
    const Index n = Index(r.order());
    if (c.element >= n || c.idempotent >= n || c.remainder >= n) return "index out of range";
    const Index e = c.idempotent;
    const Index w = c.remainder;
    if (r.mul(e, e) != e) return "e is not idempotent";
    if (r.add(e, w) != c.element) return "a != e + w";
    if (r.mul(e, w) != r.mul(w, e)) return "e and w do not commute";
    switch (c.kind) {
    case CleanKind::StronglyClean:
        if (!c.witness_inverse) return "missing inverse witness";
        if (r.mul(w, *c.witness_inverse) != r.one() || r.mul(*c.witness_inverse, w) != r.one())
            return "witness is not an inverse of w";
        break;
    case CleanKind::StronglyNilClean: {
        if (!c.witness_index || *c.witness_index == 0) return "missing nilpotency exponent";
        if (r.pow(w, *c.witness_index) != r.zero()) return "w^k != 0";
        if (*c.witness_index > 1 && r.pow(w, *c.witness_index - 1) == r.zero()) return "exponent not minimal";
        break;
    }
    case CleanKind::StronglyJClean:
        for (Index y = 0; y < n; ++y)
            if (!r.is_unit(r.sub(r.one(), r.mul(y, w)))) return "1 - y*w is not a unit for y = " + r.format(y);
        break;
    case CleanKind::StronglyPClean: {
        if (!c.witness_index) return "missing ideal nilpotency index";
        const auto s = is_strongly_nilpotent(r, w);
        if (!s.strongly_nilpotent) return "RwR is not nilpotent";
        if (s.index != *c.witness_index) return "wrong nilpotency index for RwR";
        break;
    }
    }
    return std::nullopt;
}

PCleanResult strongly_pclean_element(const RingAnalysis& analysis, Index a) {
    const RingTable& r = analysis.ring();
    PCleanResult out;
    for (Index e : r.idempotents()) {
        const Index w = r.sub(a, e);
        if (!analysis.in_prime_radical(w)) continue;
        ++out.any_count;
        if (!r.commutes(a, e)) continue;
        ++out.count;
        if (!out.certificate) {
            CleanCertificate c;
            c.kind = CleanKind::StronglyPClean;
            c.element = a;
            c.idempotent = e;
            c.remainder = w;
            c.witness_index = is_strongly_nilpotent(r, w).index;
            out.certificate = c;
        }
    }
    return out;
}

LiftResult idempotent_lift(const RingTable& r, Index a) {
    const Index d = r.sub(a, r.mul(a, a));
    const auto exponent = r.nilpotency_exponent(d);
    if (!exponent) throw Error(ErrorCode::NotLiftable, r.format(a) + " - " + r.format(a) + "^2 is not nilpotent");
    const std::size_t n = *exponent;
    const std::uint64_t ch = r.characteristic();
    // Row 2n of Pascal's triangle modulo the characteristic.
    std::vector<std::uint64_t> row{1 % ch};
    for (std::size_t k = 1; k <= 2 * n; ++k) {
        std::vector<std::uint64_t> next(k + 1);
        next[0] = next[k] = 1 % ch;
        for (std::size_t i = 1; i < k; ++i) next[i] = (row[i - 1] + row[i]) % ch;
        row = std::move(next);
    }
    const Index b = r.sub(r.one(), a);
    Index e = r.zero();
    for (std::size_t i = 0; i <= n; ++i) {
        const Index term = r.mul(r.pow(a, 2 * n - i), r.pow(b, i));
        e = r.add(e, r.mul(r.scale(row[i], r.one()), term));
    }
    return {e, n};
}

namespace {

template <typename Accept>
std::optional<CleanCertificate> first_commuting(const RingTable& r, Index a, CleanKind kind, Accept&& accept) {
    for (Index e : r.idempotents()) {
        if (!r.commutes(a, e)) continue;
        CleanCertificate c;
        c.kind = kind;
        c.element = a;
        c.idempotent = e;
        c.remainder = r.sub(a, e);
        if (accept(c)) return c;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CleanCertificate> strongly_clean_element(const RingTable& r, Index a) {
    return first_commuting(r, a, CleanKind::StronglyClean, [&](CleanCertificate& c) {
        c.witness_inverse = r.inverse(c.remainder);
        return c.witness_inverse.has_value();
    });
}

std::optional<CleanCertificate> strongly_nilclean_element(const RingTable& r, Index a) {
    return first_commuting(r, a, CleanKind::StronglyNilClean, [&](CleanCertificate& c) {
        c.witness_index = r.nilpotency_exponent(c.remainder);
        return c.witness_index.has_value();
    });
}

std::optional<CleanCertificate> strongly_jclean_element(const RingAnalysis& analysis, Index a) {
    return first_commuting(analysis.ring(), a, CleanKind::StronglyJClean,
                           [&](CleanCertificate& c) { return analysis.in_jacobson_radical(c.remainder); });
}

PiRegularity strongly_pi_regular_element(const RingTable& r, Index a, bool check_bare) {
    // Powers a^0, a^1, ... until the first repeat a^{m+p} = a^m.
    std::unordered_map<Index, std::size_t> seen;
    Index p = r.one();
    for (std::size_t k = 0;; ++k) {
        auto [it, fresh] = seen.emplace(p, k);
        if (!fresh) {
            const std::size_t m = it->second;
            const std::size_t period = k - m;
            PiRegularity out;
            out.n = std::max<std::size_t>(m, 1);
            out.b = r.pow(a, period - 1);
            out.regular = r.pow(a, out.n) == r.mul(r.pow(a, out.n + 1), out.b) && r.commutes(a, out.b);
            if (check_bare) {
                for (std::size_t n = 1; n <= r.order() && !out.bare_n; ++n) {
                    const Index an = r.pow(a, n);
                    const Index an1 = r.mul(an, a);
                    for (Index x = 0; x < r.order(); ++x)
                        if (r.mul(an1, x) == an) {
                            out.bare_n = n;
                            break;
                        }
                }
            }
            return out;
        }
        p = r.mul(p, a);
    }
}

std::size_t clean_idempotent_count(const RingTable& r, Index a) {
    std::size_t count = 0;
    for (Index e : r.idempotents())
        if (r.is_unit(r.sub(a, e))) ++count;
    return count;
}

std::size_t nilclean_idempotent_count(const RingTable& r, Index a) {
    std::size_t count = 0;
    for (Index e : r.idempotents())
        if (r.nilpotency_exponent(r.sub(a, e))) ++count;
    return count;
}

bool uniquely_clean_element(const RingTable& r, Index a) { return clean_idempotent_count(r, a) == 1; }
bool uniquely_nilclean_element(const RingTable& r, Index a) { return nilclean_idempotent_count(r, a) == 1; }

namespace {

template <typename Pred>
RingVerdict for_all(const RingTable& r, Pred&& pred) {
    for (Index x = 0; x < r.order(); ++x)
        if (!pred(x)) return {false, x};
    return {};
}

}  // namespace

RingVerdict is_strongly_pclean_ring(const RingAnalysis& analysis) {
    const RingTable& r = analysis.ring();
    return for_all(r, [&](Index x) {
        for (Index e : r.idempotents())
            if (r.commutes(x, e) && analysis.in_prime_radical(r.sub(x, e))) return true;
        return false;
    });
}

RingVerdict is_uniquely_pclean_ring(const RingAnalysis& analysis) {
    const RingTable& r = analysis.ring();
    return for_all(r, [&](Index x) {
        std::size_t count = 0;
        for (Index e : r.idempotents())
            if (analysis.in_prime_radical(r.sub(x, e)) && ++count > 1) return false;
        return count == 1;
    });
}

RingVerdict is_strongly_clean_ring(const RingTable& r) {
    return for_all(r, [&](Index x) { return strongly_clean_element(r, x).has_value(); });
}

RingVerdict is_strongly_nilclean_ring(const RingTable& r) {
    return for_all(r, [&](Index x) { return strongly_nilclean_element(r, x).has_value(); });
}

RingVerdict is_strongly_jclean_ring(const RingAnalysis& analysis) {
    return for_all(analysis.ring(), [&](Index x) { return strongly_jclean_element(analysis, x).has_value(); });
}

RingVerdict is_uniquely_clean_ring(const RingTable& r) {
    return for_all(r, [&](Index x) { return uniquely_clean_element(r, x); });
}

RingVerdict is_uniquely_nilclean_ring(const RingTable& r) {
    return for_all(r, [&](Index x) { return uniquely_nilclean_element(r, x); });
}

RingVerdict is_strongly_pi_regular_ring(const RingTable& r) {
    return for_all(r, [&](Index x) { return strongly_pi_regular_element(r, x).regular; });
}

}  // namespace pclean
