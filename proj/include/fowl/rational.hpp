#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace fowl {

// Exact rational scalar used throughout. All degrees, breakpoints and
// concrete values are rationals; no floating point enters the semantics.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a plain decimal literal: [+-]? digits [ "." digits ].
// Exponent notation is rejected. Returns nullopt on any malformed input.
std::optional<Rat> parse_decimal(std::string_view text);

// Minimal decimal form without trailing zeros ("0.5", "1", "22000").
// Falls back to "p/q" when the denominator is not of the form 2^a * 5^b.
std::string to_decimal_string(const Rat& r);

}  // namespace fowl
