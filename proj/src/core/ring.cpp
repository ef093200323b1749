#include "pclean/ring.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "arithmetic.hpp"
#include "literal.hpp"

namespace pclean {

namespace {

std::atomic<RingId> next_ring_id{1};

// Visits a, a², a³, ... in order until `visit` returns true, or until Brent's
// cycle detection proves every distinct power has been seen. Returns whether
// `visit` accepted some power.
template <class Visit>
bool walk_powers(const RingTable& r, Index a, Visit&& visit) {
    if (visit(a, std::size_t{1})) return true;
    Index tortoise = a;
    Index hare = r.mul(a, a);
    std::size_t k = 2;
    std::size_t power = 1;
    std::size_t lam = 1;
    for (;;) {
        if (visit(hare, k)) return true;
        if (tortoise == hare) return false;
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = r.mul(hare, a);
        ++k;
        ++lam;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ElementSet / SubgroupBuilder

std::vector<Index> ElementSet::sorted() const {
    std::vector<Index> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    if (universe_ != other.universe_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

ElementSet ElementSet::intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out(a.universe());
    for (Index x : a.sorted())
        if (b.contains(x)) out.insert(x);
    return out;
}

SubgroupBuilder::SubgroupBuilder(const RingTable& ring) : ring_(&ring), set_(ring.order()) {
    set_.insert(ring.zero());
}

bool SubgroupBuilder::add_generator(Index h) {
    if (set_.contains(h)) return false;
    generators_.push_back(h);
    const std::vector<Index> old = set_.members();
    Index shift = h;
    while (!set_.contains(shift)) {
        for (Index m : old) set_.insert(ring_->add(m, shift));
        shift = ring_->add(shift, h);
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingTable

RingTable::RingTable() : id_(next_ring_id.fetch_add(1)) {}
RingTable::~RingTable() = default;

Index RingTable::slow_add(Index a, Index b) const { return arith_->add(a, b); }
Index RingTable::slow_mul(Index a, Index b) const { return arith_->mul(a, b); }

void RingTable::finish(const BuildOptions& options) {
    order_ = arith_->order();
    zero_ = 0;
    one_ = arith_->one();
    neg_table_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) neg_table_[a] = arith_->neg(Index(a));
    const std::uint64_t table_limit = std::min<std::uint64_t>(options.table_limit, 65536);
    if (order_ <= table_limit) {
        add_table_.resize(order_ * order_);
        mul_table_.resize(order_ * order_);
        arith_->fill_tables(add_table_.data(), mul_table_.data());
    }
}

Index RingTable::pow(Index a, std::uint64_t e) const {
    Index result = one_;
    Index base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Index RingTable::scale(std::uint64_t n, Index a) const {
    Index result = zero_;
    Index base = a;
    while (n > 0) {
        if (n & 1) result = add(result, base);
        base = add(base, base);
        n >>= 1;
    }
    return result;
}

Element RingTable::element(Index i) const {
    if (i >= order_) throw Error(ErrorCode::PreconditionFailed, "element index out of range");
    return Element{id_, i};
}

Index RingTable::index_of(Element e) const {
    if (e.ring != id_) throw Error(ErrorCode::MixedRingOperands, "element belongs to a different ring");
    if (e.index >= order_) throw Error(ErrorCode::PreconditionFailed, "element index out of range");
    return e.index;
}

Element RingTable::add(Element a, Element b) const { return {id_, add(index_of(a), index_of(b))}; }
Element RingTable::sub(Element a, Element b) const { return {id_, sub(index_of(a), index_of(b))}; }
Element RingTable::mul(Element a, Element b) const { return {id_, mul(index_of(a), index_of(b))}; }
Element RingTable::neg(Element a) const { return {id_, neg(index_of(a))}; }

std::string RingTable::format(Index a) const { return arith_->format(a); }

Index RingTable::parse(std::string_view text) const {
    std::string storage;
    std::vector<std::size_t> offsets;
    const auto view = detail::LiteralView::normalize(text, storage, offsets);
    return detail::parse_literal(*this, view);
}

Index detail::parse_literal(const RingTable& ring, const LiteralView& literal) {
    return ring.arith_->parse(literal);
}

void RingTable::compute_units() const {
    std::call_once(units_once_, [this] {
        inverse_.assign(order_, Index(order_));
        for (std::size_t a = 0; a < order_; ++a) {
            if (inverse_[a] != order_) continue;
            Index prev = one_;
            const bool unit = walk_powers(*this, Index(a), [&](Index p, std::size_t) {
                if (p == one_) return true;
                prev = p;
                return false;
            });
            if (unit) {
                // a^k = 1 with prev = a^(k-1).
                inverse_[a] = prev;
                inverse_[prev] = Index(a);
            }
        }
        for (std::size_t a = 0; a < order_; ++a)
            if (inverse_[a] != order_) units_.push_back(Index(a));
    });
}

const std::vector<Index>& RingTable::units() const {
    compute_units();
    return units_;
}

bool RingTable::is_unit(Index a) const {
    compute_units();
    return inverse_[a] != order_;
}

std::optional<Index> RingTable::inverse(Index a) const {
    compute_units();
    if (inverse_[a] == order_) return std::nullopt;
    return inverse_[a];
}

const std::vector<Index>& RingTable::idempotents() const {
    std::call_once(idempotents_once_, [this] {
        for (std::size_t a = 0; a < order_; ++a)
            if (is_idempotent(Index(a))) idempotents_.push_back(Index(a));
    });
    return idempotents_;
}

const std::vector<Index>& RingTable::additive_generators() const {
    std::call_once(generators_once_, [this] {
        SubgroupBuilder builder(*this);
        for (std::size_t a = 0; a < order_ && builder.set().size() < order_; ++a) builder.add_generator(Index(a));
        generators_ = builder.release_generators();
    });
    return generators_;
}

bool RingTable::is_commutative() const {
    std::call_once(commutative_once_, [this] {
        const auto& gens = additive_generators();
        commutative_ = true;
        for (std::size_t i = 0; i < gens.size() && commutative_; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!commutes(gens[i], gens[j])) {
                    commutative_ = false;
                    break;
                }
    });
    return commutative_;
}

bool RingTable::is_central(Index a) const {
    for (Index g : additive_generators())
        if (!commutes(a, g)) return false;
    return true;
}

std::optional<std::size_t> RingTable::nilpotency_exponent(Index a) const {
    std::size_t exponent = 0;
    const bool nilpotent = walk_powers(*this, a, [&](Index p, std::size_t k) {
        if (p != zero_) return false;
        exponent = k;
        return true;
    });
    if (!nilpotent) return std::nullopt;
    return exponent;
}

std::uint64_t RingTable::characteristic() const {
    std::uint64_t n = 1;
    for (Index x = one_; x != zero_; x = add(x, one_)) ++n;
    return one_ == zero_ ? 1 : n;
}

std::vector<Index> RingTable::coordinates(Index a) const { return arith_->coordinates(a); }
Index RingTable::compose(std::span<const Index> coords) const { return arith_->compose(coords); }
std::vector<Index> RingTable::matrix_entries(Index a) const { return arith_->matrix_entries(a); }
Index RingTable::from_matrix_entries(std::span<const Index> entries) const {
    return arith_->from_matrix_entries(entries);
}

std::optional<std::string> RingTable::check_axioms(std::size_t exhaustive_limit, std::size_t samples) const {
    if (zero_ == one_) return "zero equals one";
    auto describe = [this](const char* law, Index a, Index b, Index c) {
        return std::string(law) + " fails at (" + format(a) + ", " + format(b) + ", " + format(c) + ")";
    };
    auto check_triple = [&](Index a, Index b, Index c) -> std::optional<std::string> {
        if (add(add(a, b), c) != add(a, add(b, c))) return describe("additive associativity", a, b, c);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return describe("multiplicative associativity", a, b, c);
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return describe("left distributivity", a, b, c);
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) return describe("right distributivity", a, b, c);
        return std::nullopt;
    };
    for (std::size_t x = 0; x < order_; ++x) {
        const Index a = Index(x);
        if (add(a, zero_) != a || add(zero_, a) != a) return "zero is not an additive identity at " + format(a);
        if (add(a, neg(a)) != zero_) return "missing additive inverse at " + format(a);
        if (mul(one_, a) != a || mul(a, one_) != a) return "one is not a multiplicative identity at " + format(a);
    }
    if (order_ <= exhaustive_limit) {
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b) {
                if (add(Index(a), Index(b)) != add(Index(b), Index(a)))
                    return describe("additive commutativity", Index(a), Index(b), zero_);
                for (std::size_t c = 0; c < order_; ++c)
                    if (auto bad = check_triple(Index(a), Index(b), Index(c))) return bad;
            }
        return std::nullopt;
    }
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        const Index a = Index(pick(rng)), b = Index(pick(rng)), c = Index(pick(rng));
        if (add(a, b) != add(b, a)) return describe("additive commutativity", a, b, zero_);
        if (auto bad = check_triple(a, b, c)) return bad;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

struct RingFactory {
    static std::shared_ptr<RingTable> make(RingKind kind, std::string name, std::unique_ptr<detail::Arithmetic> arith,
                        std::vector<RingPtr> components, const BuildOptions& options) {
        std::shared_ptr<RingTable> ring(new RingTable());
        ring->kind_ = kind;
        ring->name_ = std::move(name);
        ring->arith_ = std::move(arith);
        ring->components_ = std::move(components);
        ring->finish(options);
        return ring;
    }

    static RingPtr build(const RingSpec& spec, const BuildOptions& options) {
        using Kind = RingSpec::Kind;
        switch (spec.kind) {
        case Kind::Zn:
            return finish_spec(make(RingKind::Zn, spec.to_string(), std::make_unique<detail::ZnArithmetic>(spec.modulus),
                                    {}, options),
                               spec);
        case Kind::GaussianMod:
        case Kind::EisensteinMod: {
            const auto rel = spec.kind == Kind::GaussianMod ? detail::QuadraticArithmetic::Relation::Gaussian
                                                            : detail::QuadraticArithmetic::Relation::Eisenstein;
            return finish_spec(
                make(spec.kind == Kind::GaussianMod ? RingKind::GaussianMod : RingKind::EisensteinMod, spec.to_string(),
                     std::make_unique<detail::QuadraticArithmetic>(spec.modulus, rel), {}, options),
                spec);
        }
        case Kind::Product: {
            if (spec.children.size() > 16) throw Error(ErrorCode::MalformedSpec, "at most 16 product factors");
            std::vector<RingPtr> factors;
            for (const auto& child : spec.children) factors.push_back(build(child, options));
            auto arith = std::make_unique<detail::ProductArithmetic>(factors);
            return finish_spec(make(RingKind::Product, spec.to_string(), std::move(arith), factors, options), spec);
        }
        case Kind::Matrix:
        case Kind::Triangular:
        case Kind::ConstDiagTriangular: {
            using Shape = detail::MatrixArithmetic::Shape;
            RingPtr base = build(spec.children.at(0), options);
            const Shape shape = spec.kind == Kind::Matrix       ? Shape::Full
                                : spec.kind == Kind::Triangular ? Shape::Upper
                                                                : Shape::ConstDiagUpper;
            const RingKind kind = spec.kind == Kind::Matrix       ? RingKind::Matrix
                                  : spec.kind == Kind::Triangular ? RingKind::Triangular
                                                                  : RingKind::ConstDiagTriangular;
            auto arith = std::make_unique<detail::MatrixArithmetic>(base, spec.size, shape);
            auto ring = make(kind, spec.to_string(), std::move(arith), {base}, options);
            ring->matrix_size_ = spec.size;
            return finish_spec(ring, spec);
        }
        case Kind::Quotient: {
            RingPtr base = build(spec.children.at(0), options);
            std::vector<Index> gens;
            for (const auto& g : spec.generators) {
                try {
                    gens.push_back(base->parse(g));
                } catch (const ParseError& e) {
                    throw Error(ErrorCode::MalformedSpec,
                                "quotient generator '" + g + "' is not an element of " + base->name() + " (" +
                                    e.what() + ")");
                }
            }
            const auto closure = ideal_closure(*base, gens);
            std::vector<Index> projection;
            auto ring = quotient(base, closure.members, options, projection);
            ring->name_ = spec.to_string();
            return finish_spec(ring, spec);
        }
        }
        throw Error(ErrorCode::MalformedSpec, "unknown ring kind");
    }

    static RingPtr finish_spec(std::shared_ptr<RingTable> ring, const RingSpec& spec) {
        ring->spec_ = spec;
        return ring;
    }

    static std::shared_ptr<RingTable> quotient(const RingPtr& r, const ElementSet& ideal, const BuildOptions& options,
                            std::vector<Index>& projection) {
        const std::size_t n = r->order();
        projection.assign(n, Index(n));
        std::vector<Index> reps;
        for (std::size_t i = 0; i < n; ++i) {
            if (projection[i] != n) continue;
            const Index q = Index(reps.size());
            reps.push_back(Index(i));
            for (Index m : ideal.members()) projection[r->add(Index(i), m)] = q;
        }
        std::string name = r->name() + "/I";
        auto arith = std::make_unique<detail::QuotientArithmetic>(r, reps, projection);
        auto ring = make(RingKind::Quotient, std::move(name), std::move(arith), {r}, options);
        ring->projection_ = projection;
        return ring;
    }

    static RingPtr corner(const RingPtr& r, Index f, const BuildOptions& options, std::vector<Index>& members) {
        ElementSet set(r->order());
        for (std::size_t x = 0; x < r->order(); ++x) set.insert(r->mul(r->mul(f, Index(x)), f));
        members = set.sorted();
        auto arith = std::make_unique<detail::CornerArithmetic>(r, members, f);
        auto ring = make(RingKind::Corner, r->name() + " corner at " + r->format(f), std::move(arith), {r}, options);
        ring->embedding_ = members;
        return ring;
    }

    static RingPtr explicit_ring(std::string name, std::size_t order, std::vector<Index> add_table,
                                 std::vector<Index> mul_table, Index one) {
        if (order == 0 || order > 65536) throw Error(ErrorCode::MalformedSpec, "explicit ring order out of range");
        auto arith = std::make_unique<detail::ExplicitArithmetic>(order, std::move(add_table), std::move(mul_table), one);
        for (std::size_t a = 0; a < order; ++a)
            if (arith->add(0, Index(a)) != a) throw Error(ErrorCode::MalformedSpec, "index 0 must be the zero element");
        BuildOptions options;
        options.table_limit = order;
        return make(RingKind::Explicit, std::move(name), std::move(arith), {}, options);
    }
};

RingPtr RingTable::from_tables(std::string name, std::size_t order, std::vector<Index> add_table,
                               std::vector<Index> mul_table, Index one) {
    return RingFactory::explicit_ring(std::move(name), order, std::move(add_table), std::move(mul_table), one);
}

RingPtr build_ring(const RingSpec& spec, const BuildOptions& options) {
    spec.validate();
    if (!spec.order_bound(options.order_limit))
        throw Error(ErrorCode::OrderLimitExceeded,
                    spec.to_string() + " exceeds the order limit " + std::to_string(options.order_limit));
    return RingFactory::build(spec, options);
}

RingPtr build_ring(std::string_view spec_text, const BuildOptions& options) {
    return build_ring(parse_ring_spec(spec_text), options);
}

IdealClosure ideal_closure(const RingTable& r, std::span<const Index> gens) {
    SubgroupBuilder builder(r);
    std::vector<Index> work;
    for (Index g : gens)
        if (builder.add_generator(g)) work.push_back(g);
    const auto& ring_gens = r.additive_generators();
    while (!work.empty()) {
        const Index h = work.back();
        work.pop_back();
        for (Index g : ring_gens) {
            for (Index p : {r.mul(g, h), r.mul(h, g)})
                if (builder.add_generator(p)) work.push_back(p);
        }
    }
    IdealClosure out;
    out.generators = builder.generators();
    out.members = builder.release();
    return out;
}

QuotientResult quotient_ring(const RingPtr& r, std::span<const Index> gens, const BuildOptions& options) {
    for (Index g : gens)
        if (g >= r->order()) throw Error(ErrorCode::PreconditionFailed, "generator outside the ring");
    const auto closure = ideal_closure(*r, gens);
    QuotientResult out;
    out.ring = RingFactory::quotient(r, closure.members, options, out.projection);
    return out;
}

QuotientResult quotient_by_ideal(const RingPtr& r, const ElementSet& ideal, const BuildOptions& options) {
    QuotientResult out;
    out.ring = RingFactory::quotient(r, ideal, options, out.projection);
    return out;
}

CornerResult corner_ring(const RingPtr& r, Index f, const BuildOptions& options) {
    if (!r->is_idempotent(f)) throw Error(ErrorCode::PreconditionFailed, "corner requires an idempotent");
    CornerResult out;
    out.ring = RingFactory::corner(r, f, options, out.embedding);
    return out;
}

}  // namespace pclean
