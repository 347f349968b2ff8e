#pragma once

#include <stdexcept>
#include <string>

namespace ducov {

// Precondition violations surface as typed exceptions so callers and tests
// can distinguish them from verdicts, which are plain return values.

struct DimMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNonnegativeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotIrreducibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDiagonallyDominantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadKindError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnverifiedDecompositionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ducov
