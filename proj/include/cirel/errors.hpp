#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cirel {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Triplet construction where the three component sets are not pairwise disjoint.
class OverlappingSets : public Error {
public:
    using Error::Error;
};

// Triplet construction where one of the first two components is empty.
class EmptySide : public Error {
public:
    using Error::Error;
};

// A brute-force enumeration was requested over a universe bigger than its guard.
class UniverseTooLarge : public Error {
public:
    using Error::Error;
};

// An operation that requires a closed relation was given one that is not closed.
class NotClosed : public Error {
public:
    using Error::Error;
};

// Statement file rejected; carries the 1-based line number of the offence.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace cirel
