#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certkit/bigint.hpp"

namespace certkit {

// A finite bitstring consumed as a nondeterministic guess (or certificate).
struct Witness {
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  bool operator==(const Witness&) const = default;

  // MSB-first, ceil(len/4) lowercase hex digits, unused low bits of the last digit zero.
  std::string to_hex() const;
  // nullopt when the text is not hex, has the wrong digit count, or padding bits are set.
  static std::optional<Witness> from_hex(std::string_view hex, std::size_t length);
  // The index-th bitstring of the given length in lexicographic order (index < 2^length).
  static Witness from_index(std::uint64_t index, std::size_t length);
};

// Fixed-width big-endian fields: a value in [lo, lo+count) occupies field_width(count)
// bits and is stored as value - lo.
class WitnessWriter {
 public:
  void put(const BigInt& value, const BigInt& count, const BigInt& lo = 0);
  void put_bits(const Witness& w);
  void pad_to(std::size_t length);
  Witness finish() const { return w_; }

 private:
  Witness w_;
};

class WitnessReader {
 public:
  explicit WitnessReader(const Witness& w) : w_(w) {}
  // nullopt when the field holds an offset >= count (out of range) or bits ran out.
  std::optional<BigInt> take(const BigInt& count, const BigInt& lo = 0);
  Witness take_bits(std::size_t n);
  std::size_t remaining() const { return w_.size() - pos_; }
  bool rest_is_zero() const;

 private:
  const Witness& w_;
  std::size_t pos_ = 0;
};

}  // namespace certkit
