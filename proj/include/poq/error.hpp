// Error kinds raised by constructors and checked operations.
#pragma once

#include <stdexcept>
#include <string>

namespace poq {

enum class ErrorKind {
    CyclicInput,
    BadIndex,
    TooLarge,
    NotLattice,
    NotWeakOrder,
    NotCompatible,
    NotAutomorphism,
    NoUniqueMin,
    NotGraded,
    InternalCheckFailure,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::CyclicInput: return "CyclicInput";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotLattice: return "NotLattice";
        case ErrorKind::NotWeakOrder: return "NotWeakOrder";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::NoUniqueMin: return "NoUniqueMin";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::InternalCheckFailure: return "InternalCheckFailure";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace poq
