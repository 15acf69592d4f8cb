#pragma once

#include <stdexcept>
#include <string>

namespace helly {

enum class ErrorCode {
    not_symmetric,
    not_convex_body,
    not_polygonal,
    zero_direction,
    degenerate_hull,
    hypothesis_failed,
    even_cardinality,
    too_few,
    bad_k,
    not_on_boundary,
    precondition_failed,
    theorem_falsified,
    not_unit_vectors,
    halfplane_violated,
    epsilon_too_large,
    sampling_exhausted,
    search_budget_exceeded,
    unknown_case,
    unknown_suite,
    io_error,
    parse_error,
};

const char *to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the suite runner, the CLI) can branch on the kind of failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace helly
