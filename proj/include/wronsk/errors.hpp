#pragma once

#include <stdexcept>
#include <string>

namespace wronsk {

// Caller violated a documented precondition: mismatched coefficient rings,
// out-of-range arguments, malformed input text.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A coefficient beyond the certified truncation order was requested.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An arithmetic invariant failed internally.  Always a bug, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace wronsk
