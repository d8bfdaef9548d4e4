#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p/q", "-p/q" or a plain integer. Throws Error(parse) otherwise.
Rat parse_rat(std::string_view text);
Integer parse_integer(std::string_view text);

/// Renders "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

inline bool is_integral(const Rat& value) {
    return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rat& value);
Integer ceil(const Rat& value);

Integer binomial(int n, int k);

}  // namespace toric
