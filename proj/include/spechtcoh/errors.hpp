#pragma once

#include <stdexcept>
#include <string>

namespace spechtcoh {

// A computation would exceed the configured basis-size or memory limits.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is outside the supported scope of the method (e.g. p = 2 for the
// H^1 decision, which is only valid in odd characteristic).
class ScopeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A certificate failed a check it was required to pass.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spechtcoh
