#ifndef COMBMET_ERRORS_HPP
#define COMBMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace combmet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or closure would exceed the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// The given family of sets does not cover the ground set.
struct NotACovering : Error {
    explicit NotACovering(const std::string& what) : Error(what) {}
};

struct EmptySetError : Error {
    explicit EmptySetError(const std::string& what) : Error(what) {}
};

/// Raised when a counterexample is requested for a covering that admits none.
struct IsKPartition : Error {
    explicit IsKPartition(const std::string& what) : Error(what) {}
};

struct NoUnequalSets : Error {
    explicit NoUnequalSets(const std::string& what) : Error(what) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

/// A certified isometry failed to split into permutation and block parts.
struct NotDecomposable : Error {
    explicit NotDecomposable(const std::string& what) : Error(what) {}
};

}  // namespace combmet

#endif
