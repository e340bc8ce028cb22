#include "modlat/rng.hpp"

#include <bit>

#include "modlat/errors.hpp"
#include "modlat/sha256.hpp"

namespace modlat {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  const Digest d = Sha256().update_u64_le(master).update_u64_le(index).finish();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < 8; ++i) out |= static_cast<std::uint64_t>(d[i]) << (8 * i);
  return out;
}

std::uint32_t SeededRng::uniform_below(std::uint32_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::uint64_t mask = (std::uint64_t{1} << std::bit_width(bound - 1)) - 1;
  for (;;) {
    const std::uint64_t v = engine_() & mask;
    if (v < bound) return static_cast<std::uint32_t>(v);
  }
}

}  // namespace modlat
