#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pclean/decompositions.hpp"
#include "pclean/matrix.hpp"
#include "pclean/radicals.hpp"
#include "pclean/verifier.hpp"

namespace pclean::verifier {

using nlohmann::json;

template <typename T>
class Lazy {
public:
    template <typename F>
    const T& get(F&& make) {
        if (!value_) value_.emplace(make());
        return *value_;
    }

private:
    std::optional<T> value_;
};

/// Per-ring cache shared by every check in one run.
class RingContext {
public:
    RingContext(RingPtr ring, const VerifierOptions& options);

    const RingTable& r() const { return *ring_; }
    const RingPtr& ring() const { return ring_; }
    const RingAnalysis& analysis() const { return analysis_; }
    const VerifierOptions& options() const { return options_; }
    std::string name() const { return ring_->name(); }

    bool in_p(Index x) const { return analysis_.in_prime_radical(x); }
    bool in_one_plus_p(Index x) const { return in_p(r().sub(x, r().one())); }

    bool spc();
    bool upc();
    bool local();
    bool abelian();
    const RingVerdict& spc_verdict();

    /// Strong P-cleanness of one element, cached.
    bool element_spc(Index x);

    /// Ideals generated by at most two elements, deduplicated, in discovery order.
    const std::vector<Ideal>& ideals();
    /// Strong P-cleanness of r/I, cached by the member set.
    bool quotient_spc(const ElementSet& ideal);
    /// R/I as a ring.
    RingPtr quotient(const ElementSet& ideal);

    /// Ring built from a spec wrapping this ring's spec ("T2(...)" etc.).
    /// Null when the ring has no spec or the order exceeds the derived limit.
    RingPtr derived(RingSpec::Kind kind, std::size_t k);
    bool derived_spc(RingSpec::Kind kind, std::size_t k);
    const RingAnalysis* derived_analysis(RingSpec::Kind kind, std::size_t k);

    /// Null when the base is not commutative and local.
    MatrixContext* matrices();

    /// Deterministic index subset of [0, n): all of it when n ≤ limit.
    std::vector<std::uint64_t> pick(std::uint64_t n, std::size_t limit, bool& exhaustive) const;

    Matrix2 parse_matrix(const json& text) const { return m2::parse(r(), text.get<std::string>()); }
    Index parse_element(const json& text) const { return r().parse(text.get<std::string>()); }

private:
    RingPtr ring_;
    VerifierOptions options_;
    RingAnalysis analysis_;
    Lazy<RingVerdict> spc_;
    Lazy<bool> upc_, local_, abelian_;
    std::vector<signed char> element_spc_;
    Lazy<std::vector<Ideal>> ideals_;
    std::map<std::vector<Index>, bool> quotient_spc_;
    std::map<std::pair<int, std::size_t>, std::unique_ptr<RingAnalysis>> derived_;
    std::map<std::pair<int, std::size_t>, bool> derived_spc_;
    bool matrices_built_ = false;
    std::unique_ptr<MatrixContext> matrices_;
};

/// Product of two ideals: additive closure of products of their generators.
Ideal ideal_product(const RingTable& r, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const RingTable& r, const Ideal& a, const Ideal& b);

json ideal_json(const RingTable& r, const Ideal& ideal);
Ideal ideal_from_json(const RingTable& r, const json& gens);

/// Why a theorem is not evaluated on a ring.
struct Gate {
    Verdict verdict = Verdict::HypothesisNotMet;
    std::string reason;
};

/// What a theorem check needs: applicability, the instances it quantifies
/// over, and a per-instance test returning the violation.
struct Theorem {
    std::string id;
    std::string statement;
    std::optional<Gate> (*applies)(RingContext&);
    std::vector<json> (*instances)(RingContext&, bool& exhaustive);
    std::optional<json> (*check)(RingContext&, const json& instance);
};

const std::vector<Theorem>& theorems();
const Theorem* find_theorem(std::string_view id);

}  // namespace pclean::verifier
