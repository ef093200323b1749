#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pclean {

/// Dense index of an element inside a materialized ring.
using Index = std::uint32_t;

/// Bit set over the dense indices of one ring, with a member list kept in
/// insertion order so that scans over small subsets stay cheap.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(Index x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }

    /// Returns true when `x` was not yet a member.
    bool insert(Index x) {
        auto& w = words_[x >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (w & bit) return false;
        w |= bit;
        members_.push_back(x);
        return true;
    }

    const std::vector<Index>& members() const noexcept { return members_; }

    /// Members in increasing index order.
    std::vector<Index> sorted() const;

    bool operator==(const ElementSet& other) const noexcept {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    bool is_subset_of(const ElementSet& other) const noexcept;

    static ElementSet intersection(const ElementSet& a, const ElementSet& b);

private:
    std::vector<std::uint64_t> words_;
    std::vector<Index> members_;
    std::size_t universe_ = 0;
};

class RingTable;

/// Incrementally grows an additive subgroup of a ring from generators.
/// Adding a generator h to a subgroup S enumerates the cosets S + k·h until
/// k·h falls back into S, so each insertion costs the size of the new group.
class SubgroupBuilder {
public:
    explicit SubgroupBuilder(const RingTable& ring);

    /// Adds `h` as a generator. Returns false when `h` was already a member.
    bool add_generator(Index h);

    const ElementSet& set() const noexcept { return set_; }
    ElementSet release() { return std::move(set_); }
    const std::vector<Index>& generators() const noexcept { return generators_; }
    std::vector<Index> release_generators() { return std::move(generators_); }

private:
    const RingTable* ring_;
    ElementSet set_;
    std::vector<Index> generators_;
};

}  // namespace pclean
