#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

#include "pclean/error.hpp"
#include "pclean/matrix.hpp"

namespace pclean::m2 {

Matrix2 identity(const RingTable& r) { return {r.one(), r.zero(), r.zero(), r.one()}; }

Matrix2 diag(Index x, Index y, const RingTable& r) { return {x, r.zero(), r.zero(), y}; }

Matrix2 transvection(int i, int j, Index xi, const RingTable& r) {
    Matrix2 m = identity(r);
    if (i == 1 && j == 2) m.a12 = xi;
    else if (i == 2 && j == 1) m.a21 = xi;
    else throw Error(ErrorCode::PreconditionFailed, "transvection position must be (1,2) or (2,1)");
    return m;
}

Matrix2 add(const RingTable& r, const Matrix2& x, const Matrix2& y) {
    return {r.add(x.a11, y.a11), r.add(x.a12, y.a12), r.add(x.a21, y.a21), r.add(x.a22, y.a22)};
}

Matrix2 sub(const RingTable& r, const Matrix2& x, const Matrix2& y) {
    return {r.sub(x.a11, y.a11), r.sub(x.a12, y.a12), r.sub(x.a21, y.a21), r.sub(x.a22, y.a22)};
}

Matrix2 mul(const RingTable& r, const Matrix2& x, const Matrix2& y) {
    return {r.add(r.mul(x.a11, y.a11), r.mul(x.a12, y.a21)), r.add(r.mul(x.a11, y.a12), r.mul(x.a12, y.a22)),
            r.add(r.mul(x.a21, y.a11), r.mul(x.a22, y.a21)), r.add(r.mul(x.a21, y.a12), r.mul(x.a22, y.a22))};
}

Matrix2 square(const RingTable& r, const Matrix2& x) { return mul(r, x, x); }

Index trace(const RingTable& r, const Matrix2& x) { return r.add(x.a11, x.a22); }

Index det(const RingTable& r, const Matrix2& x) { return r.sub(r.mul(x.a11, x.a22), r.mul(x.a12, x.a21)); }

std::optional<Matrix2> inverse(const RingTable& r, const Matrix2& x) {
    const auto d = r.inverse(det(r, x));
    if (!d) return std::nullopt;
    return Matrix2{r.mul(*d, x.a22), r.mul(*d, r.neg(x.a12)), r.mul(*d, r.neg(x.a21)), r.mul(*d, x.a11)};
}

bool is_nilpotent(const RingTable& r, const Matrix2& x) {
    const Matrix2 zero{r.zero(), r.zero(), r.zero(), r.zero()};
    std::set<std::array<Index, 4>> seen;
    for (Matrix2 p = x; p != zero; p = mul(r, p, x))
        if (!seen.insert({p.a11, p.a12, p.a21, p.a22}).second) return false;
    return true;
}

bool strongly_pi_regular(const RingTable& r, const Matrix2& a) {
    std::map<std::array<Index, 4>, std::size_t> seen;
    Matrix2 p = identity(r);
    for (std::size_t k = 0;; ++k) {
        auto [it, fresh] = seen.emplace(std::array<Index, 4>{p.a11, p.a12, p.a21, p.a22}, k);
        if (!fresh) {
            // a^m = a^k: take n = max(m, 1) and b = a^{k−m−1}.
            const std::size_t m = it->second;
            const std::size_t n = std::max<std::size_t>(m, 1);
            Matrix2 b = identity(r);
            for (std::size_t i = 1; i < k - m; ++i) b = mul(r, b, a);
            Matrix2 an = identity(r);
            for (std::size_t i = 0; i < n; ++i) an = mul(r, an, a);
            return an == mul(r, mul(r, an, a), b) && mul(r, a, b) == mul(r, b, a);
        }
        p = mul(r, p, a);
    }
}

std::string format(const RingTable& r, const Matrix2& x) {
    return "[" + r.format(x.a11) + "," + r.format(x.a12) + ";" + r.format(x.a21) + "," + r.format(x.a22) + "]";
}

namespace {

struct Span {
    std::size_t begin;
    std::size_t end;
};

std::vector<Span> split_depth0(std::string_view text, Span s, char sep) {
    std::vector<Span> parts;
    int depth = 0;
    std::size_t start = s.begin;
    for (std::size_t i = s.begin; i < s.end; ++i) {
        const char c = text[i];
        if (c == '[' || c == '(') ++depth;
        else if (c == ']' || c == ')') --depth;
        else if (c == sep && depth == 0) {
            parts.push_back({start, i});
            start = i + 1;
        }
    }
    parts.push_back({start, s.end});
    return parts;
}

}  // namespace

Matrix2 parse(const RingTable& r, std::string_view text) {
    std::size_t b = 0;
    while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    std::size_t e = text.size();
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e || text[b] != '[') throw ParseError(b, "expected '[' to open a 2x2 matrix");
    if (text[e - 1] != ']' || e - b < 2) throw ParseError(e == 0 ? 0 : e - 1, "expected ']' to close the matrix");
    const auto rows = split_depth0(text, {b + 1, e - 1}, ';');
    if (rows.size() != 2) throw ParseError(b, "expected 2 rows separated by ';'");
    Index cells[4];
    std::size_t k = 0;
    for (const auto& row : rows) {
        const auto entries = split_depth0(text, row, ',');
        if (entries.size() != 2) throw ParseError(row.begin, "expected 2 entries per row");
        for (const auto& cell : entries) {
            try {
                cells[k++] = r.parse(text.substr(cell.begin, cell.end - cell.begin));
            } catch (const ParseError& err) {
                throw ParseError(cell.begin + err.offset(), err.detail());
            }
        }
    }
    return {cells[0], cells[1], cells[2], cells[3]};
}

}  // namespace pclean::m2
