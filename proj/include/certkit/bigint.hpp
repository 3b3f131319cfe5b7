#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace certkit {

/// Arbitrary-precision signed integer used for every numeric instance field.
using BigInt = boost::multiprecision::cpp_int;

/// Number of bits needed to write `value` in binary; 0 for 0. Requires value >= 0.
std::size_t bit_length(const BigInt& value);

/// Width of a fixed field able to hold `count` distinct values: ceil(log2(count)).
/// A field with a single admissible value takes no bits.
std::size_t field_width(const BigInt& count);

/// Parses a base-10 string (optional leading '-'). Returns nullopt on malformed input.
std::optional<BigInt> parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Returns the value as uint64 when it fits, else nullopt. Negative values never fit.
std::optional<std::uint64_t> to_u64(const BigInt& value);

/// ceil(log2(x)) for x >= 1 as a double-free integer computation.
std::size_t ceil_log2(const BigInt& x);

BigInt pow_big(const BigInt& base, std::size_t exponent);

}  // namespace certkit
