#include "pclean/ring_spec.hpp"

#include <cctype>
#include <limits>

#include "pclean/error.hpp"

namespace pclean {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    if (a != 0 && b > limit / a) return std::nullopt;
    const std::uint64_t p = a * b;
    if (p > limit) return std::nullopt;
    return p;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        auto next = checked_mul(acc, base, limit);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

// Normalized view of the input: lower-cased ASCII, whitespace dropped, with
// a map back to byte offsets in the original text.
class SpecParser {
public:
    explicit SpecParser(std::string_view text) : original_size_(text.size()) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const auto c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c)) continue;
            s_.push_back(c < 128 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
            offsets_.push_back(i);
        }
    }

    RingSpec parse() {
        if (s_.empty()) fail("empty ring spec");
        RingSpec spec = parse_ring();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        spec.validate();
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        const std::size_t offset = pos_ < offsets_.size() ? offsets_[pos_] : original_size_;
        throw ParseError(offset, message);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t parse_number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    RingSpec parse_ring() {
        std::vector<RingSpec> factors;
        factors.push_back(parse_factor());
        while (peek() == 'x') {
            ++pos_;
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return std::move(factors.front());
        return RingSpec::product(std::move(factors));
    }

    RingSpec parse_factor() {
        RingSpec spec = parse_primary();
        while (peek() == '/') {
            ++pos_;
            expect('(');
            std::vector<std::string> gens;
            std::size_t start = pos_;
            int depth = 0;
            for (;;) {
                if (at_end()) fail("unterminated quotient generator list");
                const char c = s_[pos_];
                if (c == '(' || c == '[') {
                    ++depth;
                } else if ((c == ')' || c == ']') && depth > 0) {
                    --depth;
                } else if (depth == 0 && (c == ',' || c == ')')) {
                    if (pos_ == start) fail("empty quotient generator");
                    gens.emplace_back(s_.substr(start, pos_ - start));
                    ++pos_;
                    if (c == ')') break;
                    start = pos_;
                    continue;
                }
                ++pos_;
            }
            spec = RingSpec::quotient(std::move(spec), std::move(gens));
        }
        return spec;
    }

    RingSpec parse_bracketed_ring() {
        expect('(');
        RingSpec inner = parse_ring();
        expect(')');
        return inner;
    }

    RingSpec parse_primary() {
        switch (peek()) {
        case 'z': {
            ++pos_;
            const std::uint64_t n = parse_number();
            if (peek() == '[') {
                ++pos_;
                RingSpec spec;
                if (peek() == 'i') {
                    ++pos_;
                    spec = RingSpec::gaussian(n);
                } else if (peek() == 'w') {
                    ++pos_;
                    spec = RingSpec::eisenstein(n);
                } else if (s_.compare(pos_, 2, "\xCE\xB1") == 0) {  // UTF-8 alpha
                    pos_ += 2;
                    spec = RingSpec::eisenstein(n);
                } else {
                    fail("expected 'i' or 'w' adjoined to Zn");
                }
                expect(']');
                return spec;
            }
            return RingSpec::zn(n);
        }
        case 'm': {
            ++pos_;
            const auto k = static_cast<std::size_t>(parse_number());
            return RingSpec::matrix(k, parse_bracketed_ring());
        }
        case 't': {
            ++pos_;
            const bool constant_diagonal = peek() == 'c';
            if (constant_diagonal) ++pos_;
            const auto k = static_cast<std::size_t>(parse_number());
            RingSpec base = parse_bracketed_ring();
            return constant_diagonal ? RingSpec::const_diag_triangular(k, std::move(base))
                                     : RingSpec::triangular(k, std::move(base));
        }
        case '(':
            return parse_bracketed_ring();
        default:
            fail("expected a ring (Zn, Zn[i], Zn[w], Mk(..), Tk(..), Tck(..) or '(')");
        }
    }

    std::string s_;
    std::vector<std::size_t> offsets_;
    std::size_t original_size_;
    std::size_t pos_ = 0;
};

}  // namespace

RingSpec RingSpec::zn(std::uint64_t n) {
    RingSpec s;
    s.kind = Kind::Zn;
    s.modulus = n;
    return s;
}

RingSpec RingSpec::gaussian(std::uint64_t n) {
    RingSpec s = zn(n);
    s.kind = Kind::GaussianMod;
    return s;
}

RingSpec RingSpec::eisenstein(std::uint64_t n) {
    RingSpec s = zn(n);
    s.kind = Kind::EisensteinMod;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::Product;
    s.children = std::move(factors);
    return s;
}

namespace {
RingSpec sized(RingSpec::Kind kind, std::size_t k, RingSpec base) {
    RingSpec s;
    s.kind = kind;
    s.size = k;
    s.children.push_back(std::move(base));
    return s;
}
}  // namespace

RingSpec RingSpec::matrix(std::size_t k, RingSpec base) { return sized(Kind::Matrix, k, std::move(base)); }
RingSpec RingSpec::triangular(std::size_t k, RingSpec base) { return sized(Kind::Triangular, k, std::move(base)); }
RingSpec RingSpec::const_diag_triangular(std::size_t k, RingSpec base) {
    return sized(Kind::ConstDiagTriangular, k, std::move(base));
}

RingSpec RingSpec::quotient(RingSpec base, std::vector<std::string> generators) {
    RingSpec s;
    s.kind = Kind::Quotient;
    s.children.push_back(std::move(base));
    s.generators = std::move(generators);
    return s;
}

void RingSpec::validate() const {
    switch (kind) {
    case Kind::Zn:
    case Kind::GaussianMod:
    case Kind::EisensteinMod:
        if (modulus < 2) throw Error(ErrorCode::MalformedSpec, "modulus must be at least 2");
        if (!children.empty()) throw Error(ErrorCode::MalformedSpec, "primitive ring with children");
        return;
    case Kind::Product:
        if (children.empty()) throw Error(ErrorCode::MalformedSpec, "product needs at least one factor");
        break;
    case Kind::Matrix:
    case Kind::Triangular:
    case Kind::ConstDiagTriangular:
        if (size < 1) throw Error(ErrorCode::MalformedSpec, "matrix size must be at least 1");
        if (children.size() != 1) throw Error(ErrorCode::MalformedSpec, "matrix ring needs exactly one base");
        break;
    case Kind::Quotient:
        if (children.size() != 1) throw Error(ErrorCode::MalformedSpec, "quotient needs exactly one base");
        if (generators.empty()) throw Error(ErrorCode::MalformedSpec, "quotient needs at least one generator");
        break;
    }
    for (const auto& child : children) child.validate();
}

std::optional<std::uint64_t> RingSpec::order_bound(std::uint64_t limit) const {
    switch (kind) {
    case Kind::Zn:
        if (modulus > limit) return std::nullopt;
        return modulus;
    case Kind::GaussianMod:
    case Kind::EisensteinMod:
        return checked_mul(modulus, modulus, limit);
    case Kind::Product: {
        std::uint64_t acc = 1;
        for (const auto& child : children) {
            auto o = child.order_bound(limit);
            if (!o) return std::nullopt;
            auto next = checked_mul(acc, *o, limit);
            if (!next) return std::nullopt;
            acc = *next;
        }
        return acc;
    }
    case Kind::Matrix:
    case Kind::Triangular:
    case Kind::ConstDiagTriangular: {
        auto base = children.at(0).order_bound(limit);
        if (!base) return std::nullopt;
        const std::uint64_t k = size;
        std::uint64_t entries = 0;
        if (kind == Kind::Matrix) entries = k * k;
        else if (kind == Kind::Triangular) entries = k * (k + 1) / 2;
        else entries = 1 + k * (k - 1) / 2;
        if (*base == 1) return 1;
        if (entries > 64) return std::nullopt;
        return checked_pow(*base, entries, limit);
    }
    case Kind::Quotient:
        return children.at(0).order_bound(limit);
    }
    return std::nullopt;
}

std::string RingSpec::to_string() const {
    switch (kind) {
    case Kind::Zn:
        return "Z" + std::to_string(modulus);
    case Kind::GaussianMod:
        return "Z" + std::to_string(modulus) + "[i]";
    case Kind::EisensteinMod:
        return "Z" + std::to_string(modulus) + "[w]";
    case Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += "x";
            const bool wrap = children[i].kind == Kind::Product;
            out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
        }
        return out;
    }
    case Kind::Matrix:
        return "M" + std::to_string(size) + "(" + children.at(0).to_string() + ")";
    case Kind::Triangular:
        return "T" + std::to_string(size) + "(" + children.at(0).to_string() + ")";
    case Kind::ConstDiagTriangular:
        return "Tc" + std::to_string(size) + "(" + children.at(0).to_string() + ")";
    case Kind::Quotient: {
        const auto& base = children.at(0);
        std::string out = base.kind == Kind::Product ? "(" + base.to_string() + ")" : base.to_string();
        out += "/(";
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (i) out += ",";
            out += generators[i];
        }
        return out + ")";
    }
    }
    return {};
}

RingSpec parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace pclean
