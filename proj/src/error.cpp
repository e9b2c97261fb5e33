// SPDX-License-Identifier: Apache-2.0
#include "dsort/error.hpp"

namespace dsort {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidBounds: return "InvalidBounds";
    case ErrorKind::RangeTooLarge: return "RangeTooLarge";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::KeyOutOfRange: return "KeyOutOfRange";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidWorkerCount: return "InvalidWorkerCount";
    case ErrorKind::UndefinedExponent: return "UndefinedExponent";
    case ErrorKind::InvalidRatio: return "InvalidRatio";
    case ErrorKind::NonPowerOfTwoWorkers: return "NonPowerOfTwoWorkers";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InfeasibleGeneration: return "InfeasibleGeneration";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace dsort
