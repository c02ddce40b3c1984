#include "hurstlab/error.hpp"

namespace hurstlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::parse_error: return "parse_error";
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::invalid_parameter: return "invalid_parameter";
        case ErrorKind::insufficient_data: return "insufficient_data";
        case ErrorKind::degenerate_series: return "degenerate_series";
        case ErrorKind::degenerate_tail: return "degenerate_tail";
        case ErrorKind::generator_failure: return "generator_failure";
        case ErrorKind::numeric_failure: return "numeric_failure";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::parse_error:
        case ErrorKind::invalid_input:
        case ErrorKind::invalid_parameter:
            return 2;
        case ErrorKind::insufficient_data:
            return 3;
        case ErrorKind::degenerate_series:
        case ErrorKind::degenerate_tail:
            return 4;
        case ErrorKind::generator_failure:
        case ErrorKind::numeric_failure:
            return 5;
    }
    return 5;
}

}  // namespace hurstlab
