#include "pclean/error.hpp"

namespace pclean {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MixedRingOperands: return "MixedRingOperands";
    case ErrorCode::RadicalNotIdeal: return "RadicalNotIdeal";
    case ErrorCode::NotLiftable: return "NotLiftable";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::CriterionMismatch: return "CriterionMismatch";
    case ErrorCode::TrivialIdempotent: return "TrivialIdempotent";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
    }
    return "Unknown";
}

}  // namespace pclean
