#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gpss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact rational num/den; accepts any nonzero denominator sign.
Rat make_rat(const Int& num, const Int& den);

// The value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> as_int64(const Int& v);

// The value as int64 when the rational is an integer that fits.
std::optional<std::int64_t> rat_as_int64(const Rat& v);

bool is_integer(const Rat& v);

// "a/b" in lowest terms, plain "a" for integers.
std::string rat_to_string(const Rat& v);

// Parses "a" or "a/b" (optional leading '-'); nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rat(std::string_view text);

// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);

// Largest r >= 0 with r*r <= a; requires a >= 0.
Int floor_sqrt(const Int& a);

}  // namespace gpss
