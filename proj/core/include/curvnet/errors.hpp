#pragma once

#include <stdexcept>
#include <string>

namespace curvnet {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed files, invalid option combinations, graphs
// violating ingest invariants. CLI exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A numeric formula was evaluated outside its validity region, e.g. a
// metric triple violating the triangle inequality or a spherical triangle
// with half-perimeter >= pi. CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not a user mistake.
// CLI exit code 3.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace curvnet
