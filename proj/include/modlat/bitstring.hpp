#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modlat/rng.hpp"

namespace modlat {

/// Fixed-length bit sequence packed MSB-first into bytes; the unused low bits
/// of the final byte are always zero.
class BitString {
 public:
  BitString() = default;
  /// All-zero string of `bits` bits.
  explicit BitString(std::size_t bits) : bits_(bits), bytes_((bits + 7) / 8, 0) {}

  /// `bytes` must hold exactly ceil(bits / 8) bytes with zero padding bits.
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits);
  static BitString from_hex(std::string_view hex, std::size_t bits);
  static BitString random(std::size_t bits, SeededRng& rng);

  std::size_t size() const noexcept { return bits_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  bool bit(std::size_t i) const;
  void flip(std::size_t i);
  std::string to_hex() const;

  /// Bitwise XOR; lengths must match.
  friend BitString operator^(const BitString& a, const BitString& b);
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace modlat
