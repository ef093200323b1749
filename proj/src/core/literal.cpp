#include "literal.hpp"

#include <cctype>

#include "pclean/error.hpp"

namespace pclean::detail {

LiteralView LiteralView::normalize(std::string_view original, std::string& storage,
                                   std::vector<std::size_t>& offsets) {
    storage.clear();
    offsets.clear();
    for (std::size_t i = 0; i < original.size(); ++i) {
        const auto c = static_cast<unsigned char>(original[i]);
        if (std::isspace(c)) continue;
        storage.push_back(c < 128 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
        offsets.push_back(i);
    }
    LiteralView view;
    view.storage_ = &storage;
    view.offsets_ = &offsets;
    view.original_size_ = original.size();
    view.begin_ = 0;
    view.end_ = storage.size();
    return view;
}

LiteralView LiteralView::slice(std::size_t from, std::size_t length) const {
    LiteralView v = *this;
    v.begin_ = begin_ + from;
    v.end_ = v.begin_ + length;
    return v;
}

std::size_t LiteralView::offset_at(std::size_t i) const {
    const std::size_t k = begin_ + i;
    return k < offsets_->size() ? (*offsets_)[k] : original_size_;
}

void LiteralView::fail(std::size_t i, const std::string& message) const { throw ParseError(offset_at(i), message); }

std::vector<LiteralView> LiteralView::split_top_level(char sep) const {
    std::vector<LiteralView> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        const char c = (*this)[i];
        if (c == '[' || c == '(') ++depth;
        else if (c == ']' || c == ')') --depth;
        else if (c == sep && depth == 0) {
            parts.push_back(slice(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(slice(start, size() - start));
    return parts;
}

LiteralView LiteralView::unbracket() const {
    if (size() < 2 || (*this)[0] != '[') fail(0, "expected '['");
    if ((*this)[size() - 1] != ']') fail(size() - 1, "expected ']'");
    return slice(1, size() - 2);
}

std::pair<std::uint64_t, std::uint64_t> parse_linear(const LiteralView& lit, std::uint64_t modulus,
                                                     const std::vector<std::string_view>& unit_names) {
    if (lit.empty()) lit.fail(0, "empty element literal");
    const std::string_view text = lit.text();
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
        } else if (!first) {
            lit.fail(i, "expected '+' or '-'");
        }
        first = false;
        const std::size_t term_start = i;
        std::uint64_t coeff = 0;
        bool has_digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = (coeff * 10 + static_cast<std::uint64_t>(text[i] - '0')) % modulus;
            has_digits = true;
            ++i;
        }
        bool is_unit = false;
        for (auto name : unit_names) {
            if (text.substr(i, name.size()) == name) {
                is_unit = true;
                i += name.size();
                break;
            }
        }
        if (!has_digits && !is_unit) lit.fail(term_start, "expected an integer or ring generator");
        if (!has_digits) coeff = 1 % modulus;
        if (negative) coeff = (modulus - coeff) % modulus;
        if (is_unit) b = (b + coeff) % modulus;
        else a = (a + coeff) % modulus;
    }
    return {a, b};
}

std::string format_linear(std::uint64_t a, std::uint64_t b, std::string_view unit) {
    if (b == 0) return std::to_string(a);
    std::string term = (b == 1 ? std::string() : std::to_string(b)) + std::string(unit);
    if (a == 0) return term;
    return std::to_string(a) + "+" + term;
}

}  // namespace pclean::detail
