#pragma once

// Instrumented encryption for statistics and oracle cross-checks. It exposes
// the session key and Q_ID . r; the ephemeral r itself still never leaves
// the encryptor. Not for use in key-handling code paths.

#include <cstddef>
#include <string_view>

#include "modlat/ibe.hpp"

namespace modlat::instrumented {

struct EncryptTrace {
  Ciphertext ciphertext;
  Subspace q_id;
  Subspace q_id_meet_r;
  Subspace session_key;  // e_d(Q_ID . r, P_pub)
  std::size_t attempts = 0;
};

EncryptTrace encrypt_traced(const PublicParams& params, std::string_view id, const BitString& message,
                            SeededRng& rng);

}  // namespace modlat::instrumented
