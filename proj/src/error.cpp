#include <rsumset/error.hpp>

namespace rsumset {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ZeroDilation: return "ZeroDilation";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotVanishing: return "NotVanishing";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotSplitting: return "NotSplitting";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::CeilingExceeded: return "CeilingExceeded";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace rsumset
