#ifndef OSCIL_ERRORS_HPP
#define OSCIL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscil {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sequence window is too short for the requested operation.
struct insufficient_samples : error {
    using error::error;
};

/// An absolute lattice step fell outside a sequence's sample window.
struct index_out_of_window : error {
    using error::error;
};

/// Difference/Taylor orders out of their valid range.
struct invalid_order : error {
    using error::error;
};

struct precondition_violated : error {
    using error::error;
};

/// A recurrence pivot (a, p, or 1+p) vanished on the stepping horizon.
struct zero_pivot : error {
    using error::error;
};

/// A simulated value exceeded the 1e300 guard.
struct overflow_error : error {
    using error::error;
};

struct out_of_domain : error {
    using error::error;
};

/// Coefficient-expression syntax error; carries the byte offset of the
/// offending character and the token set that would have been accepted.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t offset,
                std::vector<std::string> expected)
        : error(msg), offset(offset), expected(std::move(expected)) {}

    std::size_t offset;
    std::vector<std::string> expected;
};

/// Config-file problem; line is 1-based, 0 when not tied to a line.
struct config_error : error {
    config_error(const std::string& msg, int line = 0) : error(msg), line(line) {}
    int line;
};

struct validation_error : error {
    using error::error;
};

} // namespace oscil

#endif
