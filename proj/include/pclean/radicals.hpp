#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pclean/element_set.hpp"
#include "pclean/ring.hpp"

namespace pclean {

/// A two-sided ideal of one ring: its member bit set plus a set of additive
/// generators. `nilpotency` is filled by nilpotency_index() and by the radical
/// computations; an engaged-but-empty value means "known not nilpotent".
struct Ideal {
    RingId ring = 0;
    ElementSet members;
    std::vector<Index> generators;
    std::optional<std::optional<std::size_t>> nilpotency;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Index x) const noexcept { return members.contains(x); }
};

/// Smallest two-sided ideal containing `gens`. The fixpoint is re-checked for
/// closure under +, − and multiplication by every additive generator of r
/// before returning.
Ideal ideal_generated(const RingTable& r, std::span<const Index> gens);

/// Wraps a subset known (or claimed) to be an ideal. Returns nullopt when the
/// set is not closed under addition or two-sided multiplication.
std::optional<Ideal> as_ideal(const RingTable& r, const ElementSet& members);

/// True when `members` is an additive subgroup closed under left and right
/// multiplication by r.
bool is_ideal(const RingTable& r, const ElementSet& members);

/// Smallest k with I^k = {0}, or nullopt when the powers stabilise at a nonzero
/// ideal. Powers are additive closures of products of generators.
std::optional<std::size_t> nilpotency_index(const RingTable& r, const Ideal& ideal);
/// Computes and caches the index on `ideal`.
std::optional<std::size_t> nilpotency_index(const RingTable& r, Ideal& ideal);

struct StrongNilpotency {
    bool strongly_nilpotent = false;
    /// Nilpotency index of RaR when strongly nilpotent.
    std::size_t index = 0;
    /// Order of RaR, or 0 when the test stopped before forming it (a not nilpotent).
    std::size_t ideal_order = 0;
};

/// Decides whether RaR is nilpotent. Elements that are not nilpotent are
/// rejected without building the ideal.
StrongNilpotency is_strongly_nilpotent(const RingTable& r, Index a);

/// The set of strongly nilpotent elements. Throws Error(RadicalNotIdeal) if
/// the collected set fails ideal closure.
Ideal prime_radical(const RingTable& r);

/// {x : 1 − y·x is a unit for every y}, verified to be an ideal.
/// Throws Error(RadicalNotIdeal) otherwise.
Ideal jacobson_radical(const RingTable& r);

bool is_boolean(const RingTable& r);
/// Non-units form a two-sided ideal.
bool is_local(const RingTable& r);
/// Every idempotent is central.
bool is_abelian(const RingTable& r);
/// Every element of the ideal generates a nilpotent two-sided ideal.
bool is_locally_nilpotent(const RingTable& r, const Ideal& ideal);

}  // namespace pclean
