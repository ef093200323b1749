#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pclean {

enum class ErrorCode {
    OrderLimitExceeded,
    MalformedSpec,
    ParseError,
    MixedRingOperands,
    RadicalNotIdeal,
    NotLiftable,
    NotCommutative,
    NotLocal,
    CriterionMismatch,
    TrivialIdempotent,
    NotInvertible,
    PreconditionFailed,
    HypothesisViolated,
    UnknownTheoremId,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the ring-spec, element and matrix parsers. `offset` is the byte
// offset into the original input where parsing failed.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + message),
          offset_(offset),
          detail_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    /// The message without the offset prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

}  // namespace pclean
