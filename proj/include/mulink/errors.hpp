#pragma once

#include <stdexcept>
#include <string>

namespace mulink {

// Malformed input text. offset is a byte position into the input when known,
// otherwise -1.
struct ParseError : std::runtime_error {
    long offset;
    explicit ParseError(const std::string& what, long off = -1)
        : std::runtime_error(off >= 0 ? what + " (byte " + std::to_string(off) + ")" : what),
          offset(off) {}
};

// A structural invariant does not hold (bad pairing in a Gauss code, move
// precondition violated, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation could not be carried out (series caps disagree, fixed point
// did not stabilize, ...).
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mulink
