#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "literal.hpp"
#include "pclean/ring.hpp"

namespace pclean::detail {

/// Structured arithmetic backing a RingTable. Tables (when present) are filled
/// from these operations, so observable behaviour is identical either way.
class Arithmetic {
public:
    virtual ~Arithmetic() = default;

    virtual std::size_t order() const = 0;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
    virtual Index mul(Index a, Index b) const = 0;
    virtual Index one() const = 0;

    virtual std::string format(Index a) const = 0;
    virtual Index parse(const LiteralView& lit) const = 0;

    virtual std::vector<Index> coordinates(Index) const { return {}; }
    virtual Index compose(std::span<const Index>) const;
    virtual std::vector<Index> matrix_entries(Index) const;
    virtual Index from_matrix_entries(std::span<const Index>) const;

    /// Writes full order×order Cayley tables (row-major).
    virtual void fill_tables(std::uint16_t* add_table, std::uint16_t* mul_table) const;
};

class ZnArithmetic final : public Arithmetic {
public:
    explicit ZnArithmetic(std::uint64_t n) : n_(n) {}
    std::size_t order() const override { return n_; }
    Index add(Index a, Index b) const override { return Index((std::uint64_t(a) + b) % n_); }
    Index neg(Index a) const override { return a == 0 ? 0 : Index(n_ - a); }
    Index mul(Index a, Index b) const override { return Index((std::uint64_t(a) * b) % n_); }
    Index one() const override { return Index(1 % n_); }
    std::string format(Index a) const override { return std::to_string(a); }
    Index parse(const LiteralView& lit) const override;

private:
    std::uint64_t n_;
};

/// Z_n[u] with u² = -1 (Gaussian) or u² = -u - 1 (Eisenstein). Index a + n·b.
class QuadraticArithmetic final : public Arithmetic {
public:
    enum class Relation { Gaussian, Eisenstein };
    QuadraticArithmetic(std::uint64_t n, Relation rel) : n_(n), rel_(rel) {}
    std::size_t order() const override { return n_ * n_; }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    Index one() const override { return Index(1 % n_); }
    std::string format(Index a) const override;
    Index parse(const LiteralView& lit) const override;
    std::vector<Index> coordinates(Index a) const override { return {Index(a % n_), Index(a / n_)}; }
    Index compose(std::span<const Index> c) const override;

private:
    std::uint64_t n_;
    Relation rel_;
};

/// Caches the mixed-radix decomposition of every index for composite rings.
class CoordinateCache {
public:
    CoordinateCache(std::size_t order, std::vector<std::size_t> radices);
    std::size_t arity() const { return radices_.size(); }
    std::size_t stride(std::size_t c) const { return strides_[c]; }
    Index get(Index a, std::size_t c) const {
        return cache_.empty() ? Index((a / strides_[c]) % radices_[c]) : cache_[std::size_t(a) * arity() + c];
    }
    Index encode(std::span<const Index> coords) const;

private:
    std::vector<std::size_t> radices_;
    std::vector<std::size_t> strides_;
    std::vector<Index> cache_;
};

class ProductArithmetic final : public Arithmetic {
public:
    explicit ProductArithmetic(std::vector<RingPtr> factors);
    std::size_t order() const override { return order_; }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    Index one() const override { return one_; }
    std::string format(Index a) const override;
    Index parse(const LiteralView& lit) const override;
    std::vector<Index> coordinates(Index a) const override;
    Index compose(std::span<const Index> c) const override { return coords_.encode(c); }

private:
    static std::size_t product_order(const std::vector<RingPtr>& factors);
    std::vector<RingPtr> factors_;
    std::size_t order_;
    CoordinateCache coords_;
    Index one_ = 0;
};

/// k×k matrices over a base ring: full, upper triangular, or upper triangular
/// with a constant diagonal.
class MatrixArithmetic final : public Arithmetic {
public:
    enum class Shape { Full, Upper, ConstDiagUpper };
    MatrixArithmetic(RingPtr base, std::size_t k, Shape shape);

    std::size_t order() const override { return order_; }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    Index one() const override { return one_; }
    std::string format(Index a) const override;
    Index parse(const LiteralView& lit) const override;
    std::vector<Index> coordinates(Index a) const override;
    Index compose(std::span<const Index> c) const override { return coords_.encode(c); }
    std::vector<Index> matrix_entries(Index a) const override;
    Index from_matrix_entries(std::span<const Index> entries) const override;
    void fill_tables(std::uint16_t* add_table, std::uint16_t* mul_table) const override;

private:
    static std::size_t coordinate_count(std::size_t k, Shape shape);
    void expand(Index a, Index* full) const;

    RingPtr base_;
    std::size_t k_;
    Shape shape_;
    // positions_[c] lists the (row-major) full-matrix cells driven by coordinate c.
    std::vector<std::vector<std::size_t>> positions_;
    std::size_t order_;
    CoordinateCache coords_;
    Index one_ = 0;
};

/// Cosets of an ideal, each represented by its least base index.
class QuotientArithmetic final : public Arithmetic {
public:
    QuotientArithmetic(RingPtr base, std::vector<Index> representatives, std::vector<Index> projection);
    std::size_t order() const override { return reps_.size(); }
    Index add(Index a, Index b) const override { return proj_[base_->add(reps_[a], reps_[b])]; }
    Index neg(Index a) const override { return proj_[base_->neg(reps_[a])]; }
    Index mul(Index a, Index b) const override { return proj_[base_->mul(reps_[a], reps_[b])]; }
    Index one() const override { return proj_[base_->one()]; }
    std::string format(Index a) const override { return base_->format(reps_[a]); }
    Index parse(const LiteralView& lit) const override;

private:
    RingPtr base_;
    std::vector<Index> reps_;
    std::vector<Index> proj_;
};

/// The corner fRf of an idempotent f, with identity f.
class CornerArithmetic final : public Arithmetic {
public:
    CornerArithmetic(RingPtr base, std::vector<Index> members, Index identity);
    std::size_t order() const override { return members_.size(); }
    Index add(Index a, Index b) const override { return locate(base_->add(members_[a], members_[b])); }
    Index neg(Index a) const override { return locate(base_->neg(members_[a])); }
    Index mul(Index a, Index b) const override { return locate(base_->mul(members_[a], members_[b])); }
    Index one() const override { return locate(identity_); }
    std::string format(Index a) const override { return base_->format(members_[a]); }
    Index parse(const LiteralView& lit) const override;

private:
    Index locate(Index base_index) const;
    RingPtr base_;
    std::vector<Index> members_;  // sorted base indices
    std::vector<Index> position_;  // base index -> corner index, order sentinel otherwise
    Index identity_;
};

/// Arithmetic read straight from user-supplied Cayley tables.
class ExplicitArithmetic final : public Arithmetic {
public:
    ExplicitArithmetic(std::size_t order, std::vector<Index> add, std::vector<Index> mul, Index one);
    std::size_t order() const override { return order_; }
    Index add(Index a, Index b) const override { return add_[std::size_t(a) * order_ + b]; }
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override { return mul_[std::size_t(a) * order_ + b]; }
    Index one() const override { return one_; }
    std::string format(Index a) const override { return "e" + std::to_string(a); }
    Index parse(const LiteralView& lit) const override;

private:
    std::size_t order_;
    std::vector<Index> add_;
    std::vector<Index> mul_;
    Index one_;
};

}  // namespace pclean::detail
