#pragma once

// IND-ID-CPA game: setup, phase 1 queries, challenge, phase 2 queries,
// guess. The challenger also accepts decryption queries so a CCA variant can
// be configured, but with max_decryption_queries = 0 (CPA) any such query
// aborts the game.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "modlat/ibe.hpp"

namespace modlat {

struct ChallengeRequest {
  BitString m0;
  BitString m1;
  std::string id;
};

struct GameConfig;
struct GameResult;

/// Challenger interface handed to the adversary. Every query is checked
/// against the game rules; violations throw ProtocolViolation.
class GameOracle {
 public:
  GameOracle(const PublicParams& params, MasterKey& master_key, std::size_t max_key_queries,
             std::size_t max_decryption_queries, bool reveal_master_key);

  PrivateKey extract(std::string_view id);
  BitString decrypt(std::string_view id, const Ciphertext& ciphertext);

  /// Only set when the game is configured to hand the master key to the
  /// adversary (used to sanity-check the harness).
  const MasterKey* leaked_master_key() const noexcept { return reveal_ ? &master_key_ : nullptr; }

  std::size_t key_queries() const noexcept { return key_queries_; }
  std::size_t decryption_queries() const noexcept { return decryption_queries_; }

 private:
  friend GameResult run_cpa_game(const GameConfig& config, std::uint64_t seed);
  void begin_challenge(std::string id, Ciphertext c);

  const PublicParams& params_;
  MasterKey& master_key_;
  std::size_t max_key_queries_;
  std::size_t max_decryption_queries_;
  bool reveal_;
  std::size_t key_queries_ = 0;
  std::size_t decryption_queries_ = 0;
  std::set<std::string> extracted_;
  std::optional<std::string> challenge_id_;
  std::optional<Ciphertext> challenge_;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual void phase1(const PublicParams& /*params*/, GameOracle& /*oracle*/, SeededRng& /*rng*/) {}
  virtual ChallengeRequest choose_challenge(const PublicParams& params, SeededRng& rng) = 0;
  virtual void phase2(const PublicParams& /*params*/, const Ciphertext& /*challenge*/, GameOracle& /*oracle*/,
                      SeededRng& /*rng*/) {}
  /// Returns the guess b' for the hidden bit.
  virtual bool guess(const PublicParams& params, const Ciphertext& challenge, GameOracle& oracle,
                     SeededRng& rng) = 0;
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

struct GameConfig {
  ParamPolicy policy;
  std::size_t trials = 0;
  AdversaryFactory adversary;
  std::size_t max_key_queries = 0;         // q_ID
  std::size_t max_decryption_queries = 0;  // q_C; 0 is CPA
  bool reveal_master_key = false;
};

struct GameResult {
  std::size_t trials = 0;
  std::size_t wins = 0;
  double win_rate = 0.0;
  double advantage = 0.0;  // |Pr[b' = b] - 1/2|
  // 95% Wilson interval for the win rate, and the implied advantage range.
  double win_low = 0.0;
  double win_high = 0.0;
  double advantage_low = 0.0;
  double advantage_high = 0.0;
};

GameResult run_cpa_game(const GameConfig& config, std::uint64_t seed);

/// Guesses uniformly at random.
class CoinFlipAdversary final : public Adversary {
 public:
  std::string name() const override { return "coin"; }
  ChallengeRequest choose_challenge(const PublicParams& params, SeededRng& rng) override;
  bool guess(const PublicParams&, const Ciphertext&, GameOracle&, SeededRng& rng) override { return rng.bit(); }
};

/// Decrypts the challenge with a key derived from the leaked master key.
/// Requires GameConfig::reveal_master_key.
class OmniscientAdversary final : public Adversary {
 public:
  std::string name() const override { return "omniscient"; }
  ChallengeRequest choose_challenge(const PublicParams& params, SeededRng& rng) override;
  bool guess(const PublicParams& params, const Ciphertext& challenge, GameOracle& oracle, SeededRng& rng) override;

 private:
  ChallengeRequest request_;
};

/// Recovers candidate session keys by exhaustive search over the ephemeral
/// interval and votes between m0 and m1. Falls back to a coin flip on ties.
class BruteForceBdhAdversary final : public Adversary {
 public:
  explicit BruteForceBdhAdversary(std::uint64_t budget) : budget_(budget) {}
  std::string name() const override { return "bdh"; }
  ChallengeRequest choose_challenge(const PublicParams& params, SeededRng& rng) override;
  bool guess(const PublicParams& params, const Ciphertext& challenge, GameOracle& oracle, SeededRng& rng) override;

 private:
  std::uint64_t budget_;
  ChallengeRequest request_;
};

}  // namespace modlat
