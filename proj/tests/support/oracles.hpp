#pragma once

// Brute-force reference implementations used only by tests. Each works
// straight from a definition and shares no code with the library algorithms
// beyond ring arithmetic.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pclean/ring.hpp"

namespace oracle {

using pclean::Index;
using pclean::RingTable;

inline std::vector<Index> units(const RingTable& r) {
    std::vector<Index> out;
    for (Index x = 0; x < r.order(); ++x)
        for (Index y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
                out.push_back(x);
                break;
            }
    return out;
}

inline bool is_unit(const RingTable& r, Index x) {
    for (Index y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
    return false;
}

inline std::vector<Index> idempotents(const RingTable& r) {
    std::vector<Index> out;
    for (Index x = 0; x < r.order(); ++x)
        if (r.mul(x, x) == x) out.push_back(x);
    return out;
}

inline bool is_nilpotent(const RingTable& r, Index x) {
    Index p = x;
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (p == r.zero()) return true;
        p = r.mul(p, x);
    }
    return false;
}

/// Strong nilpotency from the descent-sequence definition: every sequence
/// a_{i+1} = a_i·y·a_i reaches 0. Equivalent to the graph of such steps,
/// restricted to nonzero nodes reachable from a, being acyclic.
class DescentOracle {
public:
    explicit DescentOracle(const RingTable& r) : r_(r), state_(r.order(), 0) {}

    bool strongly_nilpotent(Index a) { return visit(a); }

private:
    // 0 unvisited, 1 on stack, 2 good, 3 bad
    bool visit(Index x) {
        if (x == r_.zero()) return true;
        if (state_[x] == 2) return true;
        if (state_[x] == 3 || state_[x] == 1) return false;
        state_[x] = 1;
        bool good = true;
        for (Index y = 0; y < r_.order() && good; ++y) good = visit(r_.mul(r_.mul(x, y), x));
        state_[x] = good ? 2 : 3;
        return good;
    }

    const RingTable& r_;
    std::vector<std::uint8_t> state_;
};

/// x ∈ J iff 1 − y·x is a unit for every y, with units found by pair search.
inline std::vector<Index> jacobson(const RingTable& r) {
    std::vector<bool> unit(r.order(), false);
    for (Index u : units(r)) unit[u] = true;
    std::vector<Index> out;
    for (Index x = 0; x < r.order(); ++x) {
        bool in = true;
        for (Index y = 0; y < r.order() && in; ++y) in = unit[r.sub(r.one(), r.mul(y, x))];
        if (in) out.push_back(x);
    }
    return out;
}

/// Two-sided ideal generated by gens, by naive fixpoint over all ring elements.
inline std::vector<Index> ideal(const RingTable& r, const std::vector<Index>& gens) {
    std::vector<bool> in(r.order(), false);
    std::vector<Index> members{r.zero()};
    in[r.zero()] = true;
    for (Index g : gens)
        if (!in[g]) {
            in[g] = true;
            members.push_back(g);
        }
    for (bool grew = true; grew;) {
        grew = false;
        const auto snapshot = members;
        for (Index x : snapshot) {
            for (Index y : snapshot) {
                const Index s = r.add(x, y);
                if (!in[s]) in[s] = true, members.push_back(s), grew = true;
            }
            for (Index y = 0; y < r.order(); ++y)
                for (Index p : {r.mul(x, y), r.mul(y, x)})
                    if (!in[p]) in[p] = true, members.push_back(p), grew = true;
        }
    }
    std::vector<Index> out;
    for (Index x = 0; x < r.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

inline std::set<std::string> formatted(const RingTable& r, const std::vector<Index>& xs) {
    std::set<std::string> s;
    for (auto x : xs) s.insert(r.format(x));
    return s;
}

}  // namespace oracle
