#include "ssa/bigint.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "ssa/errors.hpp"

namespace ssa {

double log2_big(const BigInt& value) {
  if (value <= 0) {
    return -std::numeric_limits<double>::infinity();
  }
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 63) {
    return std::log2(static_cast<double>(value.convert_to<unsigned long long>()));
  }
  // Keep the top 63 bits; the dropped tail only affects the result below 2^-60.
  const std::size_t shift = msb - 62;
  const BigInt top = value >> shift;
  return std::log2(static_cast<double>(top.convert_to<unsigned long long>())) +
         static_cast<double>(shift);
}

BigInt parse_hex(std::string_view hex) {
  if (hex.empty()) {
    throw ParseError("empty hexadecimal string");
  }
  BigInt value = 0;
  for (const char c : hex) {
    int digit = 0;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw ParseError(std::string("invalid hexadecimal digit '") + c + "'");
    }
    value = (value << 4) | digit;
  }
  return value;
}

std::string to_hex(const BigInt& value, std::size_t width) {
  std::string digits;
  if (value == 0) {
    digits = "0";
  } else {
    std::ostringstream os;
    os << std::hex << value;
    digits = os.str();
    for (char& c : digits) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (digits.size() < width) {
    digits.insert(0, width - digits.size(), '0');
  }
  return digits;
}

}  // namespace ssa
