#pragma once

// Identity-based encryption over the subspace lattice L(F_q^n).
//
//   setup    d, P, s with d <= s, d !<= P, P !<= s;  P_pub = P . s
//   extract  Q_ID = H1(ID), S_ID = s . Q_ID
//   encrypt  r >= d with P !<= r, Q_ID !<= r;  C = (r . P, M ^ H2(e_d(Q_ID . r, P_pub)))
//   decrypt  M = V ^ H2(e_d(S_ID, U))
//
// Decryption is correct because e_d(s.Q, r.P) == e_d(Q.r, P.s) whenever both
// r and s lie above d.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "modlat/bitstring.hpp"
#include "modlat/rng.hpp"
#include "modlat/subspace.hpp"

namespace modlat {

enum class PolicyKind {
  geometry5,    // L(F_q^5): d a line, P a plane, s and r hyperplanes, Q_ID a plane
  vector16ths,  // spans of ceil(5n/16), ceil(n/2), ceil(9n/16) random vectors
  general,      // dimension ranges around n/2 for large n
};

std::string_view to_string(PolicyKind kind) noexcept;
/// Throws InvalidArgument on an unknown name.
PolicyKind parse_policy_kind(std::string_view name);

/// Dimension plan for one policy. For geometry5 and general every element is
/// drawn with an exact dimension from its [min, max] range; for vector16ths
/// the numbers are vector counts and elements are raw spans.
struct DimensionPlan {
  bool exact = true;
  std::size_t d = 0;
  std::size_t p_min = 0, p_max = 0;
  std::size_t s_min = 0, s_max = 0;  // total dimension (exact) or extra vectors over d (spans)
  std::size_t q_min = 0, q_max = 0;
  std::size_t r_min = 0, r_max = 0;  // same convention as s
};

struct ParamPolicy {
  PolicyKind kind;
  FieldSpec field;
  std::size_t n;
  std::size_t message_bits;
  std::size_t issuance_bound;

  /// Validates the combination: geometry5 needs n == 5, vector16ths n >= 16,
  /// general n >= 7; message_bits >= 1. The issuance bound defaults to q.
  static ParamPolicy make(PolicyKind kind, std::uint32_t q, std::size_t n, std::size_t message_bits,
                          std::optional<std::size_t> issuance_bound = std::nullopt);

  SubspaceLattice lattice() const { return {field, n}; }
  DimensionPlan plan() const;

  friend bool operator==(const ParamPolicy&, const ParamPolicy&) = default;
};

struct PublicParams {
  static constexpr std::uint32_t kFormatVersion = 1;

  ParamPolicy policy;
  Subspace d;
  Subspace P;
  Subspace P_pub;

  /// Hex SHA-256 over the policy and the canonical forms of d, P and P_pub.
  /// Ciphertexts, keys and master keys carry it to detect mismatched params.
  std::string fingerprint() const;

  friend bool operator==(const PublicParams&, const PublicParams&) = default;
};

/// Master secret. `issued` counts private keys extracted so far; extraction
/// requires exclusive access.
struct MasterKey {
  Subspace s;
  std::size_t issued = 0;

  friend bool operator==(const MasterKey&, const MasterKey&) = default;
};

struct PrivateKey {
  std::string id;
  Subspace S_ID;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct Ciphertext {
  Subspace U;
  BitString V;
  std::string header;  // PublicParams::fingerprint() of the encrypting params

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct SetupResult {
  PublicParams params;
  MasterKey master_key;
};

inline constexpr std::size_t kSetupAttempts = 1000;
inline constexpr std::size_t kH1Attempts = 64;
inline constexpr std::size_t kEncryptAttempts = 64;

/// Samples d, P and s, rejecting until the ordering constraints hold. Throws
/// SetupFailure after `max_attempts` rejected draws.
SetupResult setup(const ParamPolicy& policy, SeededRng& rng, std::size_t max_attempts = kSetupAttempts);

/// Hash an identity to Q_ID. Deterministic and computable from the public
/// parameters alone; rejects candidates below their target dimension, those
/// containing d, P itself, and those for which every session key would be
/// forced to O or d: (d . Q) + (d . P_pub) = d or d . (Q + P_pub) = O.
Subspace h1(const PublicParams& params, std::string_view id);

/// SHA-256 in counter mode over the canonical text of `k`, truncated to
/// `out_bits` bits.
BitString h2(const Subspace& k, std::size_t out_bits);

/// Issues S_ID = s . Q_ID and increments the issuance counter.
PrivateKey extract(const PublicParams& params, MasterKey& master_key, std::string_view id);

Ciphertext encrypt(const PublicParams& params, std::string_view id, const BitString& message, SeededRng& rng);

BitString decrypt(const PublicParams& params, const PrivateKey& key, const Ciphertext& ciphertext);

}  // namespace modlat
