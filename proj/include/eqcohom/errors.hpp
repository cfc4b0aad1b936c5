#pragma once

#include <stdexcept>
#include <string>

namespace eqcohom {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be read as a number, matrix, or document.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// A map was asked to act on a subspace or quotient it does not preserve.
struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(what) {}
};

struct EmptyOperatorList : Error {
    explicit EmptyOperatorList(const std::string& what) : Error(what) {}
};

struct NonCommuting : Error {
    explicit NonCommuting(const std::string& what) : Error(what) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& what) : Error(what) {}
};

struct NonCommutingGenerators : Error {
    explicit NonCommutingGenerators(const std::string& what) : Error(what) {}
};

struct OddPermutation : Error {
    explicit OddPermutation(const std::string& what) : Error(what) {}
};

struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& what) : Error(what) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace eqcohom
