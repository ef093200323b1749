#include "arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "pclean/error.hpp"

namespace pclean::detail {

Index Arithmetic::compose(std::span<const Index>) const {
    throw Error(ErrorCode::PreconditionFailed, "ring has no coordinates");
}

std::vector<Index> Arithmetic::matrix_entries(Index) const {
    throw Error(ErrorCode::PreconditionFailed, "ring is not a matrix ring");
}

Index Arithmetic::from_matrix_entries(std::span<const Index>) const {
    throw Error(ErrorCode::PreconditionFailed, "ring is not a matrix ring");
}

// ---------------------------------------------------------------------------

Index ZnArithmetic::parse(const LiteralView& lit) const {
    return Index(parse_linear(lit, n_, {}).first);
}

Index QuadraticArithmetic::add(Index a, Index b) const {
    const std::uint64_t re = (a % n_ + b % n_) % n_;
    const std::uint64_t im = (a / n_ + b / n_) % n_;
    return Index(re + n_ * im);
}

Index QuadraticArithmetic::neg(Index a) const {
    const std::uint64_t re = (n_ - a % n_) % n_;
    const std::uint64_t im = (n_ - a / n_) % n_;
    return Index(re + n_ * im);
}

Index QuadraticArithmetic::mul(Index a, Index b) const {
    const std::uint64_t x = a % n_, y = a / n_, u = b % n_, v = b / n_;
    const std::uint64_t yv = (y * v) % n_;
    std::uint64_t re = (x * u % n_ + n_ - yv) % n_;
    std::uint64_t im = (x * v + y * u) % n_;
    if (rel_ == Relation::Eisenstein) im = (im + n_ - yv) % n_;  // α² = -α - 1
    return Index(re + n_ * im);
}

std::string QuadraticArithmetic::format(Index a) const {
    return format_linear(a % n_, a / n_, rel_ == Relation::Gaussian ? "i" : "\xCE\xB1");
}

Index QuadraticArithmetic::parse(const LiteralView& lit) const {
    static const std::vector<std::string_view> gaussian_units{"i"};
    static const std::vector<std::string_view> eisenstein_units{"\xCE\xB1", "w"};
    const auto [re, im] = parse_linear(lit, n_, rel_ == Relation::Gaussian ? gaussian_units : eisenstein_units);
    return Index(re + n_ * im);
}

Index QuadraticArithmetic::compose(std::span<const Index> c) const {
    if (c.size() != 2) throw Error(ErrorCode::PreconditionFailed, "expected 2 coordinates");
    return Index(c[0] % n_ + n_ * (c[1] % n_));
}

// ---------------------------------------------------------------------------

CoordinateCache::CoordinateCache(std::size_t order, std::vector<std::size_t> radices) : radices_(std::move(radices)) {
    std::size_t stride = 1;
    for (auto r : radices_) {
        strides_.push_back(stride);
        stride *= r;
    }
    constexpr std::size_t kCacheLimit = std::size_t{1} << 24;
    if (order * arity() <= kCacheLimit) {
        cache_.resize(order * arity());
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t c = 0; c < arity(); ++c) cache_[a * arity() + c] = Index((a / strides_[c]) % radices_[c]);
    }
}

Index CoordinateCache::encode(std::span<const Index> coords) const {
    if (coords.size() != arity()) throw Error(ErrorCode::PreconditionFailed, "coordinate count mismatch");
    std::size_t idx = 0;
    for (std::size_t c = 0; c < arity(); ++c) {
        if (coords[c] >= radices_[c]) throw Error(ErrorCode::PreconditionFailed, "coordinate out of range");
        idx += coords[c] * strides_[c];
    }
    return Index(idx);
}

void Arithmetic::fill_tables(std::uint16_t* add_table, std::uint16_t* mul_table) const {
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add_table[a * n + b] = static_cast<std::uint16_t>(add(Index(a), Index(b)));
            mul_table[a * n + b] = static_cast<std::uint16_t>(mul(Index(a), Index(b)));
        }
}

// ---------------------------------------------------------------------------

namespace {
std::vector<std::size_t> factor_orders(const std::vector<RingPtr>& factors) {
    std::vector<std::size_t> out;
    for (const auto& f : factors) out.push_back(f->order());
    return out;
}
}  // namespace

std::size_t ProductArithmetic::product_order(const std::vector<RingPtr>& factors) {
    std::size_t n = 1;
    for (const auto& f : factors) n *= f->order();
    return n;
}

ProductArithmetic::ProductArithmetic(std::vector<RingPtr> factors)
    : factors_(std::move(factors)), order_(product_order(factors_)), coords_(order_, factor_orders(factors_)) {
    std::vector<Index> ones;
    for (const auto& f : factors_) ones.push_back(f->one());
    one_ = coords_.encode(ones);
}

Index ProductArithmetic::add(Index a, Index b) const {
    std::array<Index, 16> c{};
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i]->add(coords_.get(a, i), coords_.get(b, i));
    return coords_.encode(std::span<const Index>(c.data(), factors_.size()));
}

Index ProductArithmetic::neg(Index a) const {
    std::array<Index, 16> c{};
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i]->neg(coords_.get(a, i));
    return coords_.encode(std::span<const Index>(c.data(), factors_.size()));
}

Index ProductArithmetic::mul(Index a, Index b) const {
    std::array<Index, 16> c{};
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i]->mul(coords_.get(a, i), coords_.get(b, i));
    return coords_.encode(std::span<const Index>(c.data(), factors_.size()));
}

std::string ProductArithmetic::format(Index a) const {
    std::string out = "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->format(coords_.get(a, i));
    }
    return out + "]";
}

Index ProductArithmetic::parse(const LiteralView& lit) const {
    const auto parts = lit.unbracket().split_top_level(',');
    if (parts.size() != factors_.size())
        lit.fail(0, "expected " + std::to_string(factors_.size()) + " product components");
    std::vector<Index> c;
    for (std::size_t i = 0; i < parts.size(); ++i) c.push_back(parse_literal(*factors_[i], parts[i]));
    return coords_.encode(c);
}

std::vector<Index> ProductArithmetic::coordinates(Index a) const {
    std::vector<Index> c(factors_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_.get(a, i);
    return c;
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kMaxMatrixSize = 16;

std::vector<std::vector<std::size_t>> matrix_positions(std::size_t k, MatrixArithmetic::Shape shape) {
    std::vector<std::vector<std::size_t>> pos;
    using Shape = MatrixArithmetic::Shape;
    if (shape == Shape::ConstDiagUpper) {
        std::vector<std::size_t> diag;
        for (std::size_t i = 0; i < k; ++i) diag.push_back(i * k + i);
        pos.push_back(diag);
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const bool stored = shape == Shape::Full || (shape == Shape::Upper && j >= i) ||
                                (shape == Shape::ConstDiagUpper && j > i);
            if (stored) pos.push_back({i * k + j});
        }
    }
    return pos;
}
}  // namespace

std::size_t MatrixArithmetic::coordinate_count(std::size_t k, Shape shape) {
    return matrix_positions(k, shape).size();
}

MatrixArithmetic::MatrixArithmetic(RingPtr base, std::size_t k, Shape shape)
    : base_(std::move(base)),
      k_(k),
      shape_(shape),
      positions_(matrix_positions(k, shape)),
      order_([&] {
          std::size_t n = 1;
          for (std::size_t i = 0; i < coordinate_count(k, shape); ++i) n *= base_->order();
          return n;
      }()),
      coords_(order_, std::vector<std::size_t>(positions_.size(), base_->order())) {
    if (k_ > kMaxMatrixSize) throw Error(ErrorCode::MalformedSpec, "matrix size too large");
    std::vector<Index> identity(k_ * k_, base_->zero());
    for (std::size_t i = 0; i < k_; ++i) identity[i * k_ + i] = base_->one();
    one_ = from_matrix_entries(identity);
}

void MatrixArithmetic::expand(Index a, Index* full) const {
    std::fill(full, full + k_ * k_, base_->zero());
    for (std::size_t c = 0; c < positions_.size(); ++c) {
        const Index v = coords_.get(a, c);
        for (auto p : positions_[c]) full[p] = v;
    }
}

Index MatrixArithmetic::add(Index a, Index b) const {
    std::array<Index, kMaxMatrixSize * kMaxMatrixSize> c{};
    for (std::size_t i = 0; i < positions_.size(); ++i) c[i] = base_->add(coords_.get(a, i), coords_.get(b, i));
    return coords_.encode(std::span<const Index>(c.data(), positions_.size()));
}

Index MatrixArithmetic::neg(Index a) const {
    std::array<Index, kMaxMatrixSize * kMaxMatrixSize> c{};
    for (std::size_t i = 0; i < positions_.size(); ++i) c[i] = base_->neg(coords_.get(a, i));
    return coords_.encode(std::span<const Index>(c.data(), positions_.size()));
}

Index MatrixArithmetic::mul(Index a, Index b) const {
    std::array<Index, kMaxMatrixSize * kMaxMatrixSize> x{}, y{};
    expand(a, x.data());
    expand(b, y.data());
    std::array<Index, kMaxMatrixSize * kMaxMatrixSize> c{};
    for (std::size_t ci = 0; ci < positions_.size(); ++ci) {
        const std::size_t p = positions_[ci].front();
        const std::size_t i = p / k_, j = p % k_;
        Index acc = base_->zero();
        for (std::size_t l = 0; l < k_; ++l) acc = base_->add(acc, base_->mul(x[i * k_ + l], y[l * k_ + j]));
        c[ci] = acc;
    }
    return coords_.encode(std::span<const Index>(c.data(), positions_.size()));
}

void MatrixArithmetic::fill_tables(std::uint16_t* add_table, std::uint16_t* mul_table) const {
    const std::size_t n = order_;
    const std::size_t kk = k_ * k_;
    const std::size_t m = positions_.size();
    std::vector<Index> full(n * kk);
    std::vector<Index> coords(n * m);
    for (std::size_t a = 0; a < n; ++a) {
        expand(Index(a), full.data() + a * kk);
        for (std::size_t c = 0; c < m; ++c) coords[a * m + c] = coords_.get(Index(a), c);
    }
    std::vector<std::size_t> row(m), col(m), stride(m);
    for (std::size_t c = 0; c < m; ++c) {
        row[c] = positions_[c].front() / k_;
        col[c] = positions_[c].front() % k_;
        stride[c] = coords_.stride(c);
    }
    const RingTable& r = *base_;
    for (std::size_t a = 0; a < n; ++a) {
        const Index* x = full.data() + a * kk;
        const Index* ca = coords.data() + a * m;
        for (std::size_t b = 0; b < n; ++b) {
            const Index* y = full.data() + b * kk;
            const Index* cb = coords.data() + b * m;
            std::size_t sum = 0;
            std::size_t prod = 0;
            for (std::size_t c = 0; c < m; ++c) {
                sum += r.add(ca[c], cb[c]) * stride[c];
                Index acc = r.zero();
                for (std::size_t l = 0; l < k_; ++l) acc = r.add(acc, r.mul(x[row[c] * k_ + l], y[l * k_ + col[c]]));
                prod += acc * stride[c];
            }
            add_table[a * n + b] = static_cast<std::uint16_t>(sum);
            mul_table[a * n + b] = static_cast<std::uint16_t>(prod);
        }
    }
}

std::string MatrixArithmetic::format(Index a) const {
    std::array<Index, kMaxMatrixSize * kMaxMatrixSize> x{};
    expand(a, x.data());
    std::string out = "[";
    for (std::size_t i = 0; i < k_; ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < k_; ++j) {
            if (j) out += ",";
            out += base_->format(x[i * k_ + j]);
        }
    }
    return out + "]";
}

Index MatrixArithmetic::parse(const LiteralView& lit) const {
    const auto rows = lit.unbracket().split_top_level(';');
    if (rows.size() != k_) lit.fail(0, "expected " + std::to_string(k_) + " matrix rows");
    std::vector<Index> entries;
    for (const auto& row : rows) {
        const auto cells = row.split_top_level(',');
        if (cells.size() != k_) row.fail(0, "expected " + std::to_string(k_) + " entries per row");
        for (const auto& cell : cells) entries.push_back(parse_literal(*base_, cell));
    }
    try {
        return from_matrix_entries(entries);
    } catch (const Error& e) {
        lit.fail(0, e.what());
    }
}

std::vector<Index> MatrixArithmetic::coordinates(Index a) const {
    std::vector<Index> c(positions_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_.get(a, i);
    return c;
}

std::vector<Index> MatrixArithmetic::matrix_entries(Index a) const {
    std::vector<Index> full(k_ * k_);
    expand(a, full.data());
    return full;
}

Index MatrixArithmetic::from_matrix_entries(std::span<const Index> entries) const {
    if (entries.size() != k_ * k_) throw Error(ErrorCode::PreconditionFailed, "wrong number of matrix entries");
    std::vector<Index> c(positions_.size());
    std::vector<bool> covered(k_ * k_, false);
    for (std::size_t ci = 0; ci < positions_.size(); ++ci) {
        const Index v = entries[positions_[ci].front()];
        for (auto p : positions_[ci]) {
            if (entries[p] != v) throw Error(ErrorCode::PreconditionFailed, "diagonal entries must be equal");
            covered[p] = true;
        }
        c[ci] = v;
    }
    for (std::size_t p = 0; p < entries.size(); ++p)
        if (!covered[p] && entries[p] != base_->zero())
            throw Error(ErrorCode::PreconditionFailed, "entries below the diagonal must be zero");
    return coords_.encode(c);
}

// ---------------------------------------------------------------------------

QuotientArithmetic::QuotientArithmetic(RingPtr base, std::vector<Index> representatives, std::vector<Index> projection)
    : base_(std::move(base)), reps_(std::move(representatives)), proj_(std::move(projection)) {}

Index QuotientArithmetic::parse(const LiteralView& lit) const { return proj_[parse_literal(*base_, lit)]; }

// ---------------------------------------------------------------------------

CornerArithmetic::CornerArithmetic(RingPtr base, std::vector<Index> members, Index identity)
    : base_(std::move(base)), members_(std::move(members)), position_(base_->order(), Index(members_.size())),
      identity_(identity) {
    for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = Index(i);
}

Index CornerArithmetic::locate(Index base_index) const {
    const Index p = position_[base_index];
    if (p == members_.size()) throw Error(ErrorCode::PreconditionFailed, "result left the corner ring");
    return p;
}

Index CornerArithmetic::parse(const LiteralView& lit) const {
    const Index x = parse_literal(*base_, lit);
    if (position_[x] == members_.size()) lit.fail(0, "element is not in the corner ring");
    return position_[x];
}

// ---------------------------------------------------------------------------

ExplicitArithmetic::ExplicitArithmetic(std::size_t order, std::vector<Index> add, std::vector<Index> mul, Index one)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), one_(one) {
    if (add_.size() != order * order || mul_.size() != order * order)
        throw Error(ErrorCode::MalformedSpec, "Cayley tables must have order² entries");
    for (auto v : add_)
        if (v >= order) throw Error(ErrorCode::MalformedSpec, "table entry out of range");
    for (auto v : mul_)
        if (v >= order) throw Error(ErrorCode::MalformedSpec, "table entry out of range");
    if (one >= order) throw Error(ErrorCode::MalformedSpec, "identity out of range");
}

Index ExplicitArithmetic::neg(Index a) const {
    for (Index b = 0; b < order_; ++b)
        if (add(a, b) == 0) return b;
    throw Error(ErrorCode::MalformedSpec, "element without additive inverse");
}

Index ExplicitArithmetic::parse(const LiteralView& lit) const {
    std::string_view t = lit.text();
    std::size_t i = 0;
    if (!t.empty() && t[0] == 'e') ++i;
    if (i >= t.size()) lit.fail(0, "expected an element index");
    std::uint64_t v = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) lit.fail(i, "expected a digit");
        v = v * 10 + std::uint64_t(t[i] - '0');
        if (v >= order_) lit.fail(i, "element index out of range");
    }
    return Index(v);
}

}  // namespace pclean::detail
