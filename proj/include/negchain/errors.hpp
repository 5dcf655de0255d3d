#ifndef NEGCHAIN_ERRORS_HPP
#define NEGCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negchain {

// A precondition on user-supplied input was violated (bad coupling range,
// asymmetric circulant row, partition parameters out of range, ...).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical procedure failed to converge or an eigensolver reported failure.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Config-file text could not be parsed at all (malformed JSON, missing sections).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Output file could not be written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace negchain

#endif
