#include <gtest/gtest.h>

#include <cmath>

#include "modlat/errors.hpp"
#include "modlat/game.hpp"

using namespace modlat;

namespace {

ParamPolicy small_policy() { return ParamPolicy::make(PolicyKind::geometry5, 2, 5, 16, 100); }

template <class A, class... Args>
AdversaryFactory factory(Args... args) {
  return [=] { return std::make_unique<A>(args...); };
}

// Scripted misbehaviour for the rule checks.
class Misbehaving final : public Adversary {
 public:
  enum class Rule { extract_challenge_id, challenge_extracted_id, too_many_keys, decrypt_in_cpa, short_message };
  explicit Misbehaving(Rule rule) : rule_(rule) {}
  std::string name() const override { return "misbehaving"; }

  void phase1(const PublicParams&, GameOracle& oracle, SeededRng&) override {
    if (rule_ == Rule::challenge_extracted_id) oracle.extract("target");
    if (rule_ == Rule::too_many_keys) {
      oracle.extract("a");
      oracle.extract("b");
    }
  }
  ChallengeRequest choose_challenge(const PublicParams& params, SeededRng&) override {
    const std::size_t bits = params.policy.message_bits - (rule_ == Rule::short_message ? 1 : 0);
    BitString m1(bits);
    m1.flip(0);
    return {BitString(bits), m1, "target"};
  }
  void phase2(const PublicParams&, const Ciphertext& challenge, GameOracle& oracle, SeededRng&) override {
    if (rule_ == Rule::extract_challenge_id) oracle.extract("target");
    if (rule_ == Rule::decrypt_in_cpa) oracle.decrypt("other", challenge);
  }
  bool guess(const PublicParams&, const Ciphertext&, GameOracle&, SeededRng&) override { return false; }

 private:
  Rule rule_;
};

}  // namespace

TEST(Game, CoinFlipHasNoAdvantage) {
  const GameConfig config{small_policy(), 1000, factory<CoinFlipAdversary>(), 2};
  const GameResult r = run_cpa_game(config, 1);
  EXPECT_EQ(r.trials, 1000u);
  EXPECT_LE(r.advantage, 0.05);
  EXPECT_LE(r.win_low, r.win_rate);
  EXPECT_GE(r.win_high, r.win_rate);
  EXPECT_LE(r.advantage_low, r.advantage);
  EXPECT_GE(r.advantage_high, r.advantage);
}

TEST(Game, CoinFlipWinRateWithinThreeSigma) {
  const GameConfig config{small_policy(), 10000, factory<CoinFlipAdversary>(), 0};
  const GameResult r = run_cpa_game(config, 21);
  EXPECT_NEAR(r.win_rate, 0.5, 3 * std::sqrt(0.25 / 10000));
}

TEST(Game, OmniscientAdversaryAlwaysWins) {
  GameConfig config{small_policy(), 200, factory<OmniscientAdversary>(), 0};
  config.reveal_master_key = true;
  const GameResult r = run_cpa_game(config, 2);
  EXPECT_EQ(r.wins, 200u);
  EXPECT_DOUBLE_EQ(r.advantage, 0.5);
  EXPECT_GT(r.advantage_low, 0.45);
}

TEST(Game, OmniscientWithoutLeakIsACoinFlip) {
  const GameConfig config{small_policy(), 400, factory<OmniscientAdversary>(), 0};
  EXPECT_LE(run_cpa_game(config, 3).advantage, 0.1);
}

TEST(Game, BruteForceBdhWinsOnTinyField) {
  const GameConfig config{small_policy(), 100, factory<BruteForceBdhAdversary>(std::uint64_t{1'000'000}), 0};
  const GameResult r = run_cpa_game(config, 4);
  EXPECT_GT(r.advantage, 0.1);
}

TEST(Game, DeterministicForSeed) {
  const GameConfig config{small_policy(), 100, factory<CoinFlipAdversary>(), 0};
  EXPECT_EQ(run_cpa_game(config, 7).wins, run_cpa_game(config, 7).wins);
}

TEST(Game, RuleViolationsAbortTheGame) {
  using Rule = Misbehaving::Rule;
  for (Rule rule : {Rule::extract_challenge_id, Rule::challenge_extracted_id, Rule::too_many_keys,
                    Rule::decrypt_in_cpa, Rule::short_message}) {
    const GameConfig config{small_policy(), 1, factory<Misbehaving>(rule), 1};
    EXPECT_THROW(run_cpa_game(config, 5), ProtocolViolation) << static_cast<int>(rule);
  }
}

TEST(Game, NeedsAnAdversary) {
  const GameConfig config{small_policy(), 1, {}, 0};
  EXPECT_THROW(run_cpa_game(config, 1), InvalidArgument);
}
