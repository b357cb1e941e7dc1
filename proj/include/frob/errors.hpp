#pragma once

#include <stdexcept>
#include <string>

namespace frob {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: non-coprime denominations, d < 2, duplicates, negative
// limits, a backend asked to handle inputs outside its domain.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// A result or intermediate value does not fit in 64 bits. Raised instead
// of wrapping around.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A configured ceiling was hit: DP table cells, enumeration output size,
// or a search horizon exhausted without an answer.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A broken internal invariant (e.g. a division that must be exact was not).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace frob
