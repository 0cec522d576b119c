#include "ramlab/errors.hpp"

namespace ramlab {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::PrecisionUnderflow: return "PrecisionUnderflow";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotAPthPower: return "NotAPthPower";
        case ErrorKind::RadicalInconclusive: return "RadicalInconclusive";
        case ErrorKind::MixedInseparableCase: return "MixedInseparableCase";
        case ErrorKind::NotIsolated: return "NotIsolated";
        case ErrorKind::NonSquarefreeInput: return "NonSquarefreeInput";
        case ErrorKind::PrecisionTooSmall: return "PrecisionTooSmall";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::DomainError: return "DomainError";
    }
    return "Error";
}

}  // namespace ramlab
