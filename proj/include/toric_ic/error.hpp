#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class Errc {
    dimension_mismatch,
    invalid_argument,
    parse,
    empty_polyhedron,
    not_pointed,
    not_full_dimensional,
    unsupported_shape,
    not_unimodular,
    non_integral_span,
    non_lattice,
    unbounded,
    not_a_face,
    not_palindromic,
    epsilon_unstable,
    invariant_violation,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Raised by input readers; carries the 1-based line of the offending input.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(Errc::parse, "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace toric
