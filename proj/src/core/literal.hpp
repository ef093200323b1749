#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pclean::detail {

/// A slice of a normalized literal (lower-cased, whitespace removed) that can
/// still report byte offsets in the caller's original text.
class LiteralView {
public:
    static LiteralView normalize(std::string_view original, std::string& storage, std::vector<std::size_t>& offsets);

    std::string_view text() const { return {storage_->data() + begin_, end_ - begin_}; }
    std::size_t size() const { return end_ - begin_; }
    bool empty() const { return begin_ == end_; }
    char operator[](std::size_t i) const { return (*storage_)[begin_ + i]; }

    LiteralView slice(std::size_t from, std::size_t length) const;
    std::size_t offset_at(std::size_t i) const;

    [[noreturn]] void fail(std::size_t i, const std::string& message) const;

    /// Splits at `sep` where bracket depth is zero.
    std::vector<LiteralView> split_top_level(char sep) const;

    /// For "[...]" returns the inside; fails otherwise.
    LiteralView unbracket() const;

private:
    const std::string* storage_ = nullptr;
    const std::vector<std::size_t>* offsets_ = nullptr;
    std::size_t original_size_ = 0;
    std::size_t begin_ = 0;
    std::size_t end_ = 0;
};

/// Parses a + b·u where u is one of `unit_names` (or absent when empty),
/// e.g. "3", "-1", "1+i", "2-3w". Coefficients are reduced modulo `modulus`.
std::pair<std::uint64_t, std::uint64_t> parse_linear(const LiteralView& lit, std::uint64_t modulus,
                                                     const std::vector<std::string_view>& unit_names);

/// Compact a + b·unit rendering ("0", "3", "i", "2+3i").
std::string format_linear(std::uint64_t a, std::uint64_t b, std::string_view unit);

}  // namespace pclean::detail
