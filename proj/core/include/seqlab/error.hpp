#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqlab {

using Index = std::size_t;

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed spec string, bad parameter, unreadable or empty input file.
class SpecError : public Error {
public:
    using Error::Error;
};

// Operation precondition violated (e.g. truncation too short, bounded modulus).
class DomainError : public Error {
public:
    using Error::Error;
};

// A matrix row or block scheme reaches past the materialized prefix.
class TruncationError : public Error {
public:
    TruncationError(Index row, Index needed, Index available)
        : Error("row " + std::to_string(row) + " needs index " + std::to_string(needed) +
                " but the prefix has only " + std::to_string(available) + " terms"),
          row_(row), needed_(needed) {}

    Index row() const noexcept { return row_; }
    Index needed() const noexcept { return needed_; }

private:
    Index row_;
    Index needed_;
};

// Luxemburg bracket could not be closed: the modular never drops to 1.
class UnboundedNormError : public Error {
public:
    using Error::Error;
};

// A witness generator cannot satisfy its construction constraints.
class GenerationError : public Error {
public:
    using Error::Error;
};

}  // namespace seqlab
