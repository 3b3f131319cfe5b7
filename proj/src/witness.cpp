#include "certkit/witness.hpp"

#include <stdexcept>

namespace certkit {

std::string Witness::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (i + b < bits.size() && bits[i + b]) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

std::optional<Witness> Witness::from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) return std::nullopt;
  Witness w;
  w.bits.reserve(hex.size() * 4);
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else return std::nullopt;
    for (int b = 3; b >= 0; --b) w.bits.push_back((v >> b) & 1);
  }
  for (std::size_t i = length; i < w.bits.size(); ++i)
    if (w.bits[i]) return std::nullopt;
  w.bits.resize(length);
  return w;
}

Witness Witness::from_index(std::uint64_t index, std::size_t length) {
  Witness w;
  w.bits.resize(length);
  for (std::size_t i = 0; i < length && i < 64; ++i) w.bits[length - 1 - i] = (index >> i) & 1U;
  return w;
}

void WitnessWriter::put(const BigInt& value, const BigInt& count, const BigInt& lo) {
  const std::size_t width = field_width(count);
  const BigInt offset = value - lo;
  if (offset < 0 || offset >= count) throw std::out_of_range("witness field value out of range");
  for (std::size_t b = width; b-- > 0;) w_.bits.push_back(boost::multiprecision::bit_test(offset, b));
}

void WitnessWriter::put_bits(const Witness& w) { w_.bits.insert(w_.bits.end(), w.bits.begin(), w.bits.end()); }

void WitnessWriter::pad_to(std::size_t length) {
  if (w_.bits.size() > length) throw std::logic_error("witness longer than declared length");
  w_.bits.resize(length, false);
}

std::optional<BigInt> WitnessReader::take(const BigInt& count, const BigInt& lo) {
  const std::size_t width = field_width(count);
  if (remaining() < width) {
    pos_ = w_.size();
    return std::nullopt;
  }
  BigInt offset = 0;
  for (std::size_t b = 0; b < width; ++b) {
    offset <<= 1;
    if (w_.bits[pos_++]) offset |= 1;
  }
  if (offset >= count) return std::nullopt;
  return lo + offset;
}

Witness WitnessReader::take_bits(std::size_t n) {
  if (n > remaining()) throw std::logic_error("witness shorter than expected");
  Witness out;
  out.bits.assign(w_.bits.begin() + static_cast<std::ptrdiff_t>(pos_),
                  w_.bits.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
  pos_ += n;
  return out;
}

bool WitnessReader::rest_is_zero() const {
  for (std::size_t i = pos_; i < w_.size(); ++i)
    if (w_.bits[i]) return false;
  return true;
}

}  // namespace certkit
