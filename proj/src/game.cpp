#include "modlat/game.hpp"

#include <cmath>

#include "modlat/errors.hpp"
#include "modlat/oracles.hpp"

namespace modlat {

GameOracle::GameOracle(const PublicParams& params, MasterKey& master_key, std::size_t max_key_queries,
                       std::size_t max_decryption_queries, bool reveal_master_key)
    : params_(params),
      master_key_(master_key),
      max_key_queries_(max_key_queries),
      max_decryption_queries_(max_decryption_queries),
      reveal_(reveal_master_key) {}

PrivateKey GameOracle::extract(std::string_view id) {
  if (challenge_id_ && *challenge_id_ == id) {
    throw ProtocolViolation("key-extraction query for the challenge identity");
  }
  if (key_queries_ >= max_key_queries_) {
    throw ProtocolViolation("key-extraction query limit of " + std::to_string(max_key_queries_) + " exceeded");
  }
  ++key_queries_;
  extracted_.emplace(id);
  return modlat::extract(params_, master_key_, id);
}

BitString GameOracle::decrypt(std::string_view id, const Ciphertext& ciphertext) {
  if (decryption_queries_ >= max_decryption_queries_) {
    throw ProtocolViolation(max_decryption_queries_ == 0
                                ? "decryption queries are not allowed in the CPA game"
                                : "decryption query limit of " + std::to_string(max_decryption_queries_) +
                                      " exceeded");
  }
  if (challenge_id_ && *challenge_id_ == id && challenge_ && *challenge_ == ciphertext) {
    throw ProtocolViolation("decryption query for the challenge ciphertext");
  }
  ++decryption_queries_;
  // KeyGen on a scratch copy so decryption queries do not consume issuance.
  MasterKey scratch = master_key_;
  scratch.issued = 0;
  return modlat::decrypt(params_, modlat::extract(params_, scratch, id), ciphertext);
}

void GameOracle::begin_challenge(std::string id, Ciphertext c) {
  challenge_id_ = std::move(id);
  challenge_ = std::move(c);
}

GameResult run_cpa_game(const GameConfig& config, std::uint64_t seed) {
  if (!config.adversary) throw InvalidArgument("game needs an adversary factory");
  GameResult result;
  result.trials = config.trials;
  for (std::size_t t = 0; t < config.trials; ++t) {
    SeededRng rng(derive_seed(seed, t));
    SeededRng adversary_rng = rng.child(0);
    auto adversary = config.adversary();

    auto [params, msk] = setup(config.policy, rng);
    GameOracle oracle(params, msk, config.max_key_queries, config.max_decryption_queries, config.reveal_master_key);

    adversary->phase1(params, oracle, adversary_rng);
    ChallengeRequest request = adversary->choose_challenge(params, adversary_rng);
    if (request.m0.size() != config.policy.message_bits || request.m1.size() != config.policy.message_bits) {
      throw ProtocolViolation("challenge messages must both have the policy message length");
    }
    if (oracle.extracted_.contains(request.id)) {
      throw ProtocolViolation("challenge identity already appeared in a key-extraction query");
    }
    const bool b = rng.bit();
    Ciphertext challenge = encrypt(params, request.id, b ? request.m1 : request.m0, rng);
    oracle.begin_challenge(request.id, challenge);

    adversary->phase2(params, challenge, oracle, adversary_rng);
    if (adversary->guess(params, challenge, oracle, adversary_rng) == b) ++result.wins;
  }
  if (result.trials == 0) return result;

  const double n = static_cast<double>(result.trials);
  const double p = static_cast<double>(result.wins) / n;
  constexpr double z = 1.959963984540054;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  result.win_rate = p;
  result.advantage = std::abs(p - 0.5);
  result.win_low = std::max(0.0, centre - half);
  result.win_high = std::min(1.0, centre + half);
  if (result.win_low <= 0.5 && 0.5 <= result.win_high) {
    result.advantage_low = 0.0;
    result.advantage_high = std::max(0.5 - result.win_low, result.win_high - 0.5);
  } else {
    result.advantage_low = std::min(std::abs(result.win_low - 0.5), std::abs(result.win_high - 0.5));
    result.advantage_high = std::max(std::abs(result.win_low - 0.5), std::abs(result.win_high - 0.5));
  }
  return result;
}

namespace {

ChallengeRequest distinct_pair(const PublicParams& params, SeededRng& rng, std::string id) {
  BitString m0 = BitString::random(params.policy.message_bits, rng);
  BitString m1 = m0;
  m1.flip(rng.uniform_below(static_cast<std::uint32_t>(params.policy.message_bits)));
  return {std::move(m0), std::move(m1), std::move(id)};
}

}  // namespace

ChallengeRequest CoinFlipAdversary::choose_challenge(const PublicParams& params, SeededRng& rng) {
  return distinct_pair(params, rng, "challenge@coin");
}

ChallengeRequest OmniscientAdversary::choose_challenge(const PublicParams& params, SeededRng& rng) {
  request_ = distinct_pair(params, rng, "challenge@omniscient");
  return request_;
}

bool OmniscientAdversary::guess(const PublicParams& params, const Ciphertext& challenge, GameOracle& oracle,
                                SeededRng& rng) {
  const MasterKey* msk = oracle.leaked_master_key();
  if (msk == nullptr) return rng.bit();
  // Computed directly rather than through extract(), which refuses the
  // (still decryptable) case Q_ID <= s.
  const PrivateKey key{request_.id, params.policy.lattice().meet(msk->s, h1(params, request_.id))};
  const BitString m = decrypt(params, key, challenge);
  if (m == request_.m1) return true;
  if (m == request_.m0) return false;
  return rng.bit();
}

ChallengeRequest BruteForceBdhAdversary::choose_challenge(const PublicParams& params, SeededRng& rng) {
  request_ = distinct_pair(params, rng, "challenge@bdh");
  return request_;
}

bool BruteForceBdhAdversary::guess(const PublicParams& params, const Ciphertext& challenge, GameOracle& /*oracle*/,
                                   SeededRng& rng) {
  const Subspace q_id = h1(params, request_.id);
  const auto candidates = brute_force_bdh(params, q_id, challenge.U, budget_);
  std::size_t votes0 = 0, votes1 = 0;
  for (const auto& key : candidates.keys) {
    const BitString m = challenge.V ^ h2(key, params.policy.message_bits);
    if (m == request_.m0) ++votes0;
    if (m == request_.m1) ++votes1;
  }
  if (votes0 != votes1) return votes1 > votes0;
  return rng.bit();
}

}  // namespace modlat
