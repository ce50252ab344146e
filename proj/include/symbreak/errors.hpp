#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symbreak {

// Malformed external input (graph6 text, manifest files). Carries the byte
// offset of the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t byte_offset)
        : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Out-of-range or otherwise unusable arguments to a library call.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The determining index does not exist for this graph: it has two isolated
// vertices or a K_2 component, so some nontrivial automorphism fixes every
// edge. The message names the offending component.
class UndefinedDeterminingIndex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The search node budget ran out before an exact answer was established.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result that is guaranteed by construction failed to verify. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symbreak
