#pragma once

#include <stdexcept>
#include <string>

namespace effint {

// Operands from different families, alphabets or truncation weights.
struct MismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input violates a documented precondition (degree, constant term, shape...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured brute-force bound would be exceeded.
struct BoundError : std::length_error {
    using std::length_error::length_error;
};

// An invariant that the construction guarantees has been broken.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace effint
