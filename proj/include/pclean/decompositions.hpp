#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pclean/radicals.hpp"
#include "pclean/ring.hpp"

namespace pclean {

/// Shared per-ring context: the ring plus its lazily computed radicals.
/// Thread-safe; the radicals are computed at most once.
class RingAnalysis {
public:
    explicit RingAnalysis(RingPtr ring);

    const RingTable& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }

    const Ideal& prime_radical() const;
    const Ideal& jacobson_radical() const;

    /// Membership in P(R). Rings above kEagerRadicalLimit answer per element
    /// from the RxR test instead of materializing P(R).
    bool in_prime_radical(Index x) const;
    bool in_jacobson_radical(Index x) const { return jacobson_radical().contains(x); }

    static constexpr std::size_t kEagerRadicalLimit = 65536;

private:
    RingPtr ring_;
    mutable std::once_flag p_once_;
    mutable std::optional<Ideal> p_;
    mutable std::once_flag j_once_;
    mutable std::optional<Ideal> j_;
};

enum class CleanKind { StronglyClean, StronglyNilClean, StronglyJClean, StronglyPClean };

std::string_view to_string(CleanKind kind);

/// a = e + w with e idempotent commuting with w. The witness depends on kind:
/// inverse of w (clean), nilpotency exponent of w (nil clean), nilpotency
/// index of RwR (P-clean), nothing (J-clean).
struct CleanCertificate {
    CleanKind kind = CleanKind::StronglyPClean;
    Index element = 0;
    Index idempotent = 0;
    Index remainder = 0;
    std::optional<std::size_t> witness_index;
    std::optional<Index> witness_inverse;
};

/// Re-checks every certificate invariant from scratch. Returns a description
/// of the first failure, or nullopt when the certificate is valid.
std::optional<std::string> validate(const RingAnalysis& analysis, const CleanCertificate& cert);

struct PCleanResult {
    /// Certificate for the least-index idempotent e with ea = ae and a − e ∈ P(R).
    std::optional<CleanCertificate> certificate;
    /// Number of idempotents e with ea = ae and a − e ∈ P(R).
    std::size_t count = 0;
    /// Number of idempotents e with a − e ∈ P(R), commuting or not.
    std::size_t any_count = 0;
};

PCleanResult strongly_pclean_element(const RingAnalysis& analysis, Index a);

struct LiftResult {
    Index idempotent = 0;
    /// Smallest n with (a − a²)^n = 0.
    std::size_t n = 0;
};

/// e = f(a) with f(t) = Σ_{i=0}^{n} C(2n,i)·t^{2n−i}(1−t)^i. Binomials are
/// reduced modulo the characteristic before entering the ring.
/// Throws Error(NotLiftable) when a − a² is not nilpotent.
LiftResult idempotent_lift(const RingTable& r, Index a);

std::optional<CleanCertificate> strongly_clean_element(const RingTable& r, Index a);
std::optional<CleanCertificate> strongly_nilclean_element(const RingTable& r, Index a);
std::optional<CleanCertificate> strongly_jclean_element(const RingAnalysis& analysis, Index a);

struct PiRegularity {
    bool regular = false;
    /// Least n with a^n = a^{n+1}·b for some b commuting with a, and such a b.
    std::size_t n = 0;
    Index b = 0;
    /// Least n with a^n ∈ a^{n+1}R, found by scanning R.
    std::optional<std::size_t> bare_n;
};

/// The commuting witness comes from the eventually periodic power sequence:
/// if a^m = a^{m+p} with m minimal then n = max(m, 1) and b = a^{p−1}. The bare
/// form is scanned independently when `check_bare` is set.
PiRegularity strongly_pi_regular_element(const RingTable& r, Index a, bool check_bare = false);

/// Number of idempotents e with a − e a unit (no commuting requirement).
std::size_t clean_idempotent_count(const RingTable& r, Index a);
/// Number of idempotents e with a − e nilpotent (no commuting requirement).
std::size_t nilclean_idempotent_count(const RingTable& r, Index a);

bool uniquely_clean_element(const RingTable& r, Index a);
bool uniquely_nilclean_element(const RingTable& r, Index a);

/// Ring-level verdict; `counterexample` is the least failing index.
struct RingVerdict {
    bool holds = true;
    std::optional<Index> counterexample;

    explicit operator bool() const noexcept { return holds; }
};

RingVerdict is_strongly_pclean_ring(const RingAnalysis& analysis);
RingVerdict is_uniquely_pclean_ring(const RingAnalysis& analysis);
RingVerdict is_strongly_clean_ring(const RingTable& r);
RingVerdict is_strongly_nilclean_ring(const RingTable& r);
RingVerdict is_strongly_jclean_ring(const RingAnalysis& analysis);
RingVerdict is_uniquely_clean_ring(const RingTable& r);
RingVerdict is_uniquely_nilclean_ring(const RingTable& r);
RingVerdict is_strongly_pi_regular_ring(const RingTable& r);

}  // namespace pclean
