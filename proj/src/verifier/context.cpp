#include "context.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pclean::verifier {

RingContext::RingContext(RingPtr ring, const VerifierOptions& options)
    : ring_(std::move(ring)), options_(options), analysis_(ring_) {}

const RingVerdict& RingContext::spc_verdict() {
    return spc_.get([&] { return is_strongly_pclean_ring(analysis_); });
}

bool RingContext::spc() { return spc_verdict().holds; }
bool RingContext::upc() {
    return upc_.get([&] { return is_uniquely_pclean_ring(analysis_).holds; });
}
bool RingContext::local() {
    return local_.get([&] { return is_local(r()); });
}
bool RingContext::abelian() {
    return abelian_.get([&] { return is_abelian(r()); });
}

bool RingContext::element_spc(Index x) {
    if (element_spc_.empty()) element_spc_.assign(r().order(), -1);
    if (element_spc_[x] < 0) element_spc_[x] = strongly_pclean_element(analysis_, x).certificate.has_value();
    return element_spc_[x] == 1;
}

const std::vector<Ideal>& RingContext::ideals() {
    return ideals_.get([&] {
        std::vector<Ideal> out;
        std::set<std::vector<Index>> seen;
        auto keep = [&](Ideal ideal) {
            if (seen.insert(ideal.members.sorted()).second) out.push_back(std::move(ideal));
        };
        for (Index x = 0; x < r().order(); ++x) {
            const Index g[] = {x};
            keep(ideal_generated(r(), g));
        }
        const std::size_t principal = out.size();
        for (std::size_t i = 0; i < principal; ++i)
            for (std::size_t j = i + 1; j < principal; ++j) {
                std::vector<Index> gens = out[i].generators;
                gens.insert(gens.end(), out[j].generators.begin(), out[j].generators.end());
                keep(ideal_generated(r(), gens));
            }
        return out;
    });
}

RingPtr RingContext::quotient(const ElementSet& ideal) {
    BuildOptions b;
    b.order_limit = options_.derived_limit;
    return quotient_by_ideal(ring_, ideal, b).ring;
}

bool RingContext::quotient_spc(const ElementSet& ideal) {
    auto key = ideal.sorted();
    auto it = quotient_spc_.find(key);
    if (it != quotient_spc_.end()) return it->second;
    const bool v = is_strongly_pclean_ring(RingAnalysis(quotient(ideal))).holds;
    quotient_spc_.emplace(std::move(key), v);
    return v;
}

RingPtr RingContext::derived(RingSpec::Kind kind, std::size_t k) {
    const RingAnalysis* a = derived_analysis(kind, k);
    return a ? a->ring_ptr() : nullptr;
}

const RingAnalysis* RingContext::derived_analysis(RingSpec::Kind kind, std::size_t k) {
    const auto key = std::make_pair(int(kind), k);
    auto it = derived_.find(key);
    if (it != derived_.end()) return it->second.get();
    std::unique_ptr<RingAnalysis> made;
    if (const auto& spec = r().spec()) {
        RingSpec s;
        switch (kind) {
        case RingSpec::Kind::Matrix: s = RingSpec::matrix(k, *spec); break;
        case RingSpec::Kind::Triangular: s = RingSpec::triangular(k, *spec); break;
        case RingSpec::Kind::ConstDiagTriangular: s = RingSpec::const_diag_triangular(k, *spec); break;
        default: throw Error(ErrorCode::PreconditionFailed, "unsupported derived ring kind");
        }
        if (s.order_bound(options_.derived_limit)) {
            BuildOptions b;
            b.order_limit = options_.derived_limit;
            made = std::make_unique<RingAnalysis>(build_ring(s, b));
        }
    }
    return derived_.emplace(key, std::move(made)).first->second.get();
}

bool RingContext::derived_spc(RingSpec::Kind kind, std::size_t k) {
    const auto key = std::make_pair(int(kind), k);
    auto it = derived_spc_.find(key);
    if (it != derived_spc_.end()) return it->second;
    const RingAnalysis* a = derived_analysis(kind, k);
    if (!a) throw Error(ErrorCode::OrderLimitExceeded, "derived ring of " + name() + " is not available");
    const bool v = is_strongly_pclean_ring(*a).holds;
    derived_spc_.emplace(key, v);
    return v;
}

MatrixContext* RingContext::matrices() {
    if (!matrices_built_) {
        matrices_built_ = true;
        if (r().is_commutative() && local()) matrices_ = std::make_unique<MatrixContext>(ring_, options_.m2_limit);
    }
    return matrices_.get();
}

std::vector<std::uint64_t> RingContext::pick(std::uint64_t n, std::size_t limit, bool& exhaustive) const {
    std::vector<std::uint64_t> out;
    if (n <= limit) {
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    exhaustive = false;
    std::mt19937_64 gen(options_.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < limit) chosen.insert(dist(gen));
    out.assign(chosen.begin(), chosen.end());
    return out;
}

Ideal ideal_product(const RingTable& r, const Ideal& a, const Ideal& b) {
    std::vector<Index> gens;
    for (Index x : a.generators)
        for (Index y : b.generators) gens.push_back(r.mul(x, y));
    if (gens.empty()) gens.push_back(r.zero());
    return ideal_generated(r, gens);
}

Ideal ideal_intersection(const RingTable& r, const Ideal& a, const Ideal& b) {
    auto ideal = as_ideal(r, ElementSet::intersection(a.members, b.members));
    if (!ideal) throw Error(ErrorCode::RadicalNotIdeal, "intersection of ideals is not an ideal");
    return *ideal;
}

json ideal_json(const RingTable& r, const Ideal& ideal) {
    json gens = json::array();
    for (Index g : ideal.generators) gens.push_back(r.format(g));
    return gens;
}

Ideal ideal_from_json(const RingTable& r, const json& gens) {
    std::vector<Index> g;
    for (const auto& x : gens) g.push_back(r.parse(x.get<std::string>()));
    if (g.empty()) g.push_back(r.zero());
    return ideal_generated(r, g);
}

}  // namespace pclean::verifier
