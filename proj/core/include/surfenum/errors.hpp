#pragma once

#include <stdexcept>
#include <string>

namespace surfenum {

// Base class for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series with different variable lists (or truncations) were combined.
struct IncompatibleVariables : Error { using Error::Error; };
// A variable name was not found in a series.
struct UnknownVariable : Error { using Error::Error; };
// Ill-defined substitution (nonzero constant term into a non-polynomial).
struct SubstitutionError : Error { using Error::Error; };
// Monomial violating the cubic parity 2k+l+m = 3n.
struct ParityError : Error { using Error::Error; };
// Mismatched truncation orders where equality is required.
struct TruncationMismatch : Error { using Error::Error; };
// Implicit system has no unique branch at the given seed.
struct NoUniqueBranch : Error { using Error::Error; };
// Internal inconsistency that must not occur for shipped systems.
struct InternalError : Error { using Error::Error; };
// Requested computation exceeds a configured budget.
struct BudgetExceeded : Error { using Error::Error; };
// Input outside an operation's documented domain.
struct DomainError : Error { using Error::Error; };
// Singularity analysis could not certify a result.
struct CertificationError : Error { using Error::Error; };

}  // namespace surfenum
