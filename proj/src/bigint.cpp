#include "certkit/bigint.hpp"

#include <cctype>
#include <limits>

namespace certkit {

std::size_t bit_length(const BigInt& value) {
  if (value <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(value)) + 1;
}

std::size_t field_width(const BigInt& count) {
  if (count <= 1) return 0;
  return bit_length(count - 1);
}

std::size_t ceil_log2(const BigInt& x) {
  if (x <= 1) return 0;
  return bit_length(x - 1);
}

std::optional<BigInt> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) return std::nullopt;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(value);
}

BigInt pow_big(const BigInt& base, std::size_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace certkit
