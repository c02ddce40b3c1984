#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurstlab {

enum class ErrorKind {
    parse_error,        // malformed CSV row or flag value
    invalid_input,      // non-positive or non-finite price, unordered dates
    invalid_parameter,  // out-of-domain argument
    insufficient_data,  // too few observations for the requested analysis
    degenerate_series,  // zero increments or zero level, no scaling fit possible
    degenerate_tail,    // zero log-spread in the tail, infinite exponent
    generator_failure,  // synthetic generator cannot produce an exact sample
    numeric_failure,    // overflow or non-finite intermediate result
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit status used by the command-line tool for each error kind.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hurstlab
