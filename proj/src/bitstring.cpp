#include "modlat/bitstring.hpp"

#include "modlat/errors.hpp"
#include "modlat/sha256.hpp"

namespace modlat {

namespace {

std::uint8_t padding_mask(std::size_t bits) {
  const std::size_t used = bits % 8;
  return used == 0 ? 0 : static_cast<std::uint8_t>(0xFFU >> used);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
  if (bytes.size() != (bits + 7) / 8) throw MessageLengthError("byte count does not match bit length");
  if (!bytes.empty() && (bytes.back() & padding_mask(bits)) != 0) {
    throw MessageLengthError("padding bits of the final byte must be zero");
  }
  BitString out;
  out.bits_ = bits;
  out.bytes_.assign(bytes.begin(), bytes.end());
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bits) {
  if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_value(hex[i]);
    const int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid lowercase hex digit");
    bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  try {
    return from_bytes(bytes, bits);
  } catch (const MessageLengthError& e) {
    throw FormatError(e.what());
  }
}

BitString BitString::random(std::size_t bits, SeededRng& rng) {
  BitString out(bits);
  for (auto& b : out.bytes_) b = static_cast<std::uint8_t>(rng.uniform_below(256));
  if (!out.bytes_.empty()) out.bytes_.back() &= static_cast<std::uint8_t>(~padding_mask(bits));
  return out;
}

bool BitString::bit(std::size_t i) const {
  if (i >= bits_) throw InvalidArgument("bit index out of range");
  return ((bytes_[i / 8] >> (7 - i % 8)) & 1U) != 0;
}

void BitString::flip(std::size_t i) {
  if (i >= bits_) throw InvalidArgument("bit index out of range");
  bytes_[i / 8] ^= static_cast<std::uint8_t>(0x80U >> (i % 8));
}

std::string BitString::to_hex() const { return modlat::to_hex(bytes_); }

BitString operator^(const BitString& a, const BitString& b) {
  if (a.bits_ != b.bits_) throw MessageLengthError("XOR of bit strings with different lengths");
  BitString out = a;
  for (std::size_t i = 0; i < out.bytes_.size(); ++i) out.bytes_[i] ^= b.bytes_[i];
  return out;
}

}  // namespace modlat
