#pragma once

#include <stdexcept>
#include <string>

namespace gnq {

enum class ErrorKind {
    NonPrime,
    SizeBudgetExceeded,
    WrongLevel,
    OutOfRange,
    BadRange,
    NoSolution,
    BothZero,
    BoundExceeded,
    NotPrimeQ,
    NotDesirable,
    NotClosed,
    UnknownTheorem,
    SchemaMismatch,
    BudgetExceeded,
    MismatchAt,
    MissingDataFile,
    DataError,
    Usage,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::WrongLevel: return "WrongLevel";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotPrimeQ: return "NotPrimeQ";
    case ErrorKind::NotDesirable: return "NotDesirable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MismatchAt: return "MismatchAt";
    case ErrorKind::MissingDataFile: return "MissingDataFile";
    case ErrorKind::DataError: return "DataError";
    case ErrorKind::Usage: return "Usage";
    }
    return "Error";
}

} // namespace gnq
