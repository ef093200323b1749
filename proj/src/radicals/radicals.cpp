#include "pclean/radicals.hpp"

#include <string>

#include "pclean/error.hpp"

namespace pclean {

namespace {

Ideal from_closure(const RingTable& r, IdealClosure closure) {
    Ideal out;
    out.ring = r.id();
    out.members = std::move(closure.members);
    out.generators = std::move(closure.generators);
    return out;
}

// Additive generators of an additive subgroup, chosen greedily.
std::vector<Index> subgroup_generators(const RingTable& r, const ElementSet& members) {
    SubgroupBuilder builder(r);
    for (Index m : members.sorted()) {
        if (builder.set().size() == members.size()) break;
        builder.add_generator(m);
    }
    return builder.release_generators();
}

}  // namespace

bool is_ideal(const RingTable& r, const ElementSet& members) {
    if (members.universe() != r.order() || !members.contains(r.zero())) return false;
    const auto& gens = r.additive_generators();
    for (Index x : members.members()) {
        if (!members.contains(r.neg(x))) return false;
        for (Index g : gens)
            if (!members.contains(r.mul(g, x)) || !members.contains(r.mul(x, g))) return false;
    }
    // Closed under + iff the generated subgroup has no new members.
    SubgroupBuilder builder(r);
    for (Index m : members.members()) {
        builder.add_generator(m);
        if (builder.set().size() > members.size()) return false;
    }
    return builder.set().size() == members.size();
}

Ideal ideal_generated(const RingTable& r, std::span<const Index> gens) {
    for (Index g : gens)
        if (g >= r.order()) throw Error(ErrorCode::PreconditionFailed, "generator outside the ring");
    Ideal out = from_closure(r, ideal_closure(r, gens));
    for (Index g : gens)
        if (!out.contains(g) || !is_ideal(r, out.members))
            throw Error(ErrorCode::RadicalNotIdeal, "ideal closure did not reach a fixpoint in " + r.name());
    return out;
}

std::optional<Ideal> as_ideal(const RingTable& r, const ElementSet& members) {
    if (!is_ideal(r, members)) return std::nullopt;
    Ideal out;
    out.ring = r.id();
    out.members = members;
    out.generators = subgroup_generators(r, members);
    return out;
}

std::optional<std::size_t> nilpotency_index(const RingTable& r, const Ideal& ideal) {
    if (ideal.ring != r.id()) throw Error(ErrorCode::MixedRingOperands, "ideal belongs to another ring");
    if (ideal.nilpotency) return *ideal.nilpotency;
    if (ideal.size() == 1) return 1;
    std::vector<Index> power = ideal.generators;  // additive generators of I^k
    std::size_t power_size = ideal.size();
    for (std::size_t k = 1; k <= r.order(); ++k) {
        SubgroupBuilder next(r);
        for (Index g : ideal.generators)
            for (Index h : power) next.add_generator(r.mul(g, h));
        if (next.set().size() == 1) return k + 1;
        if (next.set().size() == power_size) return std::nullopt;
        power_size = next.set().size();
        power = next.release_generators();
    }
    return std::nullopt;
}

std::optional<std::size_t> nilpotency_index(const RingTable& r, Ideal& ideal) {
    if (!ideal.nilpotency) ideal.nilpotency = nilpotency_index(r, static_cast<const Ideal&>(ideal));
    return *ideal.nilpotency;
}

StrongNilpotency is_strongly_nilpotent(const RingTable& r, Index a) {
    StrongNilpotency out;
    if (a == r.zero()) {
        out.strongly_nilpotent = true;
        out.index = 1;
        out.ideal_order = 1;
        return out;
    }
    if (!r.nilpotency_exponent(a)) return out;
    const Index gens[] = {a};
    const Ideal ideal = from_closure(r, ideal_closure(r, gens));
    out.ideal_order = ideal.size();
    if (auto k = nilpotency_index(r, ideal)) {
        out.strongly_nilpotent = true;
        out.index = *k;
    }
    return out;
}

Ideal prime_radical(const RingTable& r) {
    ElementSet members(r.order());
    for (Index x = 0; x < r.order(); ++x) {
        if (members.contains(x) || !r.nilpotency_exponent(x)) continue;
        const Index gens[] = {x};
        const Ideal rxr = from_closure(r, ideal_closure(r, gens));
        // Every element of a nilpotent ideal generates a nilpotent ideal.
        if (nilpotency_index(r, rxr))
            for (Index m : rxr.members.members()) members.insert(m);
    }
    auto ideal = as_ideal(r, members);
    if (!ideal) throw Error(ErrorCode::RadicalNotIdeal, "strongly nilpotent elements of " + r.name() + " do not form an ideal");
    nilpotency_index(r, *ideal);
    return std::move(*ideal);
}

Ideal jacobson_radical(const RingTable& r) {
    ElementSet members(r.order());
    const Index n = Index(r.order());
    for (Index x = 0; x < n; ++x) {
        if (r.is_unit(x)) continue;
        bool in = true;
        for (Index y = 0; y < n && in; ++y) in = r.is_unit(r.sub(r.one(), r.mul(y, x)));
        if (in) members.insert(x);
    }
    auto ideal = as_ideal(r, members);
    if (!ideal) throw Error(ErrorCode::RadicalNotIdeal, "Jacobson set of " + r.name() + " is not an ideal");
    nilpotency_index(r, *ideal);
    return std::move(*ideal);
}

bool is_boolean(const RingTable& r) { return r.idempotents().size() == r.order(); }

bool is_local(const RingTable& r) {
    ElementSet non_units(r.order());
    for (Index x = 0; x < r.order(); ++x)
        if (!r.is_unit(x)) non_units.insert(x);
    return is_ideal(r, non_units);
}

bool is_abelian(const RingTable& r) {
    for (Index e : r.idempotents())
        if (!r.is_central(e)) return false;
    return true;
}

bool is_locally_nilpotent(const RingTable& r, const Ideal& ideal) {
    if (ideal.ring != r.id()) throw Error(ErrorCode::MixedRingOperands, "ideal belongs to another ring");
    for (Index x : ideal.members.members())
        if (!is_strongly_nilpotent(r, x).strongly_nilpotent) return false;
    return true;
}

}  // namespace pclean
