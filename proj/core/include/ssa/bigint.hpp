#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssa {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive integer; -infinity for zero.
double log2_big(const BigInt& value);

// Big-endian hexadecimal (either case accepted). Throws ParseError on anything else.
BigInt parse_hex(std::string_view hex);

// Lowercase hex, left-padded with zeros to at least `width` digits.
std::string to_hex(const BigInt& value, std::size_t width = 0);

}  // namespace ssa
