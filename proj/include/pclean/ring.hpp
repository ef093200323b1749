#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pclean/element_set.hpp"
#include "pclean/error.hpp"
#include "pclean/ring_spec.hpp"

namespace pclean {

using RingId = std::uint64_t;

inline constexpr std::uint64_t kDefaultOrderLimit = 65536;
inline constexpr std::uint64_t kDefaultTableLimit = 4096;

/// An element tagged with the ring it belongs to. RingTable rejects
/// operations that mix elements of different rings.
struct Element {
    RingId ring = 0;
    Index index = 0;

    bool operator==(const Element&) const = default;
};

struct BuildOptions {
    std::uint64_t order_limit = kDefaultOrderLimit;
    /// Rings at or below this order get full Cayley tables; larger rings
    /// compute on coordinates.
    std::uint64_t table_limit = kDefaultTableLimit;
};

enum class RingKind {
    Zn,
    GaussianMod,
    EisensteinMod,
    Product,
    Matrix,
    Triangular,
    ConstDiagTriangular,
    Quotient,
    Corner,
    Explicit,
};

class RingTable;

namespace detail {
class Arithmetic;
class LiteralView;
Index parse_literal(const RingTable& ring, const LiteralView& literal);
}  // namespace detail

/// A fully materialized finite ring with identity. Elements are dense indices
/// 0..order()-1; the zero element always has index 0. Immutable after
/// construction; the lazily computed caches (units, idempotents, additive
/// generators, commutativity) are filled once under std::call_once.
class RingTable {
public:
    ~RingTable();
    RingTable(const RingTable&) = delete;
    RingTable& operator=(const RingTable&) = delete;

    RingId id() const noexcept { return id_; }
    std::size_t order() const noexcept { return order_; }
    RingKind kind() const noexcept { return kind_; }
    /// Canonical spec string for rings built from a spec; a descriptive name otherwise.
    const std::string& name() const noexcept { return name_; }
    const std::optional<RingSpec>& spec() const noexcept { return spec_; }

    Index zero() const noexcept { return zero_; }
    Index one() const noexcept { return one_; }

    Index add(Index a, Index b) const {
        return add_table_.empty() ? slow_add(a, b) : add_table_[std::size_t(a) * order_ + b];
    }
    Index mul(Index a, Index b) const {
        return mul_table_.empty() ? slow_mul(a, b) : mul_table_[std::size_t(a) * order_ + b];
    }
    Index neg(Index a) const { return neg_table_[a]; }
    Index sub(Index a, Index b) const { return add(a, neg_table_[b]); }
    Index pow(Index a, std::uint64_t e) const;
    /// n·a for a non-negative integer n (double-and-add).
    Index scale(std::uint64_t n, Index a) const;

    bool has_tables() const noexcept { return !mul_table_.empty(); }

    // Tagged-element interface.
    Element element(Index i) const;
    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    Element neg(Element a) const;
    /// Throws Error(MixedRingOperands) when `e` does not belong to this ring.
    Index index_of(Element e) const;

    std::string format(Index a) const;
    /// Parses an element literal in this ring's canonical syntax.
    Index parse(std::string_view text) const;

    const std::vector<Index>& units() const;
    bool is_unit(Index a) const;
    std::optional<Index> inverse(Index a) const;

    const std::vector<Index>& idempotents() const;
    bool is_idempotent(Index a) const { return mul(a, a) == a; }

    bool is_commutative() const;
    bool commutes(Index a, Index b) const { return mul(a, b) == mul(b, a); }
    /// True when `a` commutes with every element of the ring.
    bool is_central(Index a) const;

    /// A minimal-ish set of elements generating (R, +), chosen greedily in
    /// index order. Used to test bilinear closure properties cheaply.
    const std::vector<Index>& additive_generators() const;

    /// Smallest n >= 1 with a^n = 0, or nullopt when `a` is not nilpotent.
    std::optional<std::size_t> nilpotency_exponent(Index a) const;

    /// Additive order of one.
    std::uint64_t characteristic() const;

    /// Component rings: factors of a product, or the single base ring of a
    /// matrix/triangular/quotient/corner ring. Empty for primitive rings.
    const std::vector<std::shared_ptr<const RingTable>>& components() const noexcept { return components_; }

    /// Matrix size k for Matrix/Triangular/ConstDiagTriangular rings, else 0.
    std::size_t matrix_size() const noexcept { return matrix_size_; }

    /// Coordinates of a composite element (product components, or stored
    /// matrix entries: full row-major for Matrix, upper triangle row-major for
    /// Triangular, diagonal value then strict upper triangle for
    /// ConstDiagTriangular).
    std::vector<Index> coordinates(Index a) const;
    Index compose(std::span<const Index> coords) const;

    /// Full k×k entries (row-major, base ring indices) of a matrix-like element.
    std::vector<Index> matrix_entries(Index a) const;
    /// Inverse of matrix_entries; throws PreconditionFailed when the entries
    /// fall outside the ring's shape (e.g. nonzero below the diagonal).
    Index from_matrix_entries(std::span<const Index> entries) const;

    /// Quotient rings: image of each base index. Corner rings: base index of
    /// each element. Empty otherwise.
    const std::vector<Index>& projection() const noexcept { return projection_; }
    const std::vector<Index>& embedding() const noexcept { return embedding_; }

    /// Exhaustive ring-axiom check for order <= exhaustive_limit, otherwise a
    /// deterministic sample of `samples` triples. Returns a description of the
    /// first violation found.
    std::optional<std::string> check_axioms(std::size_t exhaustive_limit = 512, std::size_t samples = 200000) const;

    /// Builds a ring from explicit Cayley tables (test fixtures, custom rings).
    /// No axioms are checked; call check_axioms() to validate.
    static std::shared_ptr<const RingTable> from_tables(std::string name, std::size_t order,
                                                        std::vector<Index> add_table, std::vector<Index> mul_table,
                                                        Index one);

private:
    friend struct RingFactory;
    friend Index detail::parse_literal(const RingTable& ring, const detail::LiteralView& literal);
    RingTable();

    Index slow_add(Index a, Index b) const;
    Index slow_mul(Index a, Index b) const;
    void finish(const BuildOptions& options);
    void compute_units() const;

    RingId id_ = 0;
    std::size_t order_ = 0;
    RingKind kind_ = RingKind::Explicit;
    std::string name_;
    std::optional<RingSpec> spec_;
    Index zero_ = 0;
    Index one_ = 0;
    std::size_t matrix_size_ = 0;

    std::unique_ptr<detail::Arithmetic> arith_;
    std::vector<std::shared_ptr<const RingTable>> components_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<Index> neg_table_;
    std::vector<Index> projection_;
    std::vector<Index> embedding_;

    mutable std::once_flag units_once_;
    mutable std::vector<Index> units_;
    mutable std::vector<Index> inverse_;  // order_ sentinel for non-units
    mutable std::once_flag idempotents_once_;
    mutable std::vector<Index> idempotents_;
    mutable std::once_flag generators_once_;
    mutable std::vector<Index> generators_;
    mutable std::once_flag commutative_once_;
    mutable bool commutative_ = false;
};

using RingPtr = std::shared_ptr<const RingTable>;

/// Materializes the ring described by `spec`. Deterministic: the same spec
/// always yields the same indexing. Throws Error(OrderLimitExceeded) or
/// Error(MalformedSpec).
RingPtr build_ring(const RingSpec& spec, const BuildOptions& options = {});
RingPtr build_ring(std::string_view spec_text, const BuildOptions& options = {});

/// Smallest two-sided ideal containing `gens`, computed by closing an additive
/// subgroup under left and right multiplication by the additive generators of
/// the ring. Returns the member set and its additive generators.
struct IdealClosure {
    ElementSet members;
    std::vector<Index> generators;
};
IdealClosure ideal_closure(const RingTable& r, std::span<const Index> gens);

/// Quotient by the two-sided ideal generated by `gens`. Coset representatives
/// are the least dense index in each coset, and quotient indices follow the
/// order of those representatives. `projection[i]` is the image of base index i.
struct QuotientResult {
    RingPtr ring;
    std::vector<Index> projection;
};
QuotientResult quotient_ring(const RingPtr& r, std::span<const Index> gens, const BuildOptions& options = {});
/// Quotient by a set already known to be a two-sided ideal.
QuotientResult quotient_by_ideal(const RingPtr& r, const ElementSet& ideal, const BuildOptions& options = {});

/// The corner ring fRf with identity f, for an idempotent f. `embedding[i]`
/// is the index in r of corner element i.
struct CornerResult {
    RingPtr ring;
    std::vector<Index> embedding;
};
CornerResult corner_ring(const RingPtr& r, Index f, const BuildOptions& options = {});

}  // namespace pclean
