#include "modlat/ibe.hpp"

#include <bit>
#include <string>

#include "modlat/errors.hpp"
#include "modlat/ibe_trace.hpp"
#include "modlat/pairing.hpp"
#include "modlat/sha256.hpp"

namespace modlat {

namespace {

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t pick(std::size_t lo, std::size_t hi, SeededRng& rng) {
  return lo + rng.uniform_below(static_cast<std::uint32_t>(hi - lo + 1));
}

Subspace sample_element(const SubspaceLattice& lat, bool exact, std::size_t lo, std::size_t hi, SeededRng& rng) {
  const std::size_t k = pick(lo, hi, rng);
  return exact ? lat.random_subspace_of_dim(k, rng) : lat.random_subspace(k, rng);
}

// Elements above `base`: an exact total dimension, or `base` plus that many
// fresh random vectors.
Subspace sample_above(const SubspaceLattice& lat, const Subspace& base, bool exact, std::size_t lo, std::size_t hi,
                      SeededRng& rng) {
  const std::size_t k = pick(lo, hi, rng);
  return exact ? lat.random_superspace_of_dim(base, k, rng) : lat.random_superspace(base, k, rng);
}

// Keystream of SHA-256(seed || be32(block)) blocks, consumed as little-endian
// 32-bit words.
class HashStream {
 public:
  explicit HashStream(const Digest& seed) : seed_(seed) {}

  std::uint32_t next_u32() {
    if (pos_ + 4 > block_.size()) {
      block_ = Sha256().update(seed_).update_u32_be(counter_++).finish();
      pos_ = 0;
    }
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(block_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }

  std::uint32_t uniform_below(std::uint32_t bound) {
    if (bound <= 1) return 0;
    const std::uint32_t mask =
        bound - 1 >= (std::uint32_t{1} << 31) ? ~std::uint32_t{0} : (std::uint32_t{1} << std::bit_width(bound - 1)) - 1;
    for (;;) {
      const std::uint32_t v = next_u32() & mask;
      if (v < bound) return v;
    }
  }

 private:
  Digest seed_;
  Digest block_{};
  std::size_t pos_ = 32;
  std::uint32_t counter_ = 0;
};

void require_member(const SubspaceLattice& lat, const Subspace& x, const char* what) {
  if (!lat.contains(x)) throw ParameterMismatch(std::string(what) + " does not belong to the parameter lattice");
}

}  // namespace

std::string_view to_string(PolicyKind kind) noexcept {
  switch (kind) {
    case PolicyKind::geometry5:
      return "geometry5";
    case PolicyKind::vector16ths:
      return "vector16ths";
    case PolicyKind::general:
      return "general";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
  if (name == "geometry5") return PolicyKind::geometry5;
  if (name == "vector16ths") return PolicyKind::vector16ths;
  if (name == "general") return PolicyKind::general;
  throw InvalidArgument("unknown policy '" + std::string(name) + "'");
}

ParamPolicy ParamPolicy::make(PolicyKind kind, std::uint32_t q, std::size_t n, std::size_t message_bits,
                              std::optional<std::size_t> issuance_bound) {
  const FieldSpec field(q);
  switch (kind) {
    case PolicyKind::geometry5:
      if (n != 5) throw InvalidArgument("geometry5 policy requires n = 5");
      break;
    case PolicyKind::vector16ths:
      if (n < 16) throw InvalidArgument("vector16ths policy requires n >= 16");
      break;
    case PolicyKind::general:
      if (n < 7) throw InvalidArgument("general policy requires n >= 7");
      break;
  }
  if (message_bits == 0) throw InvalidArgument("message length must be at least one bit");
  return ParamPolicy{kind, field, n, message_bits, issuance_bound.value_or(q)};
}

DimensionPlan ParamPolicy::plan() const {
  DimensionPlan p;
  switch (kind) {
    case PolicyKind::geometry5:
      p = {true, 2, 3, 3, 4, 4, 3, 3, 4, 4};
      break;
    case PolicyKind::vector16ths: {
      const std::size_t half = ceil_div(n, 2);
      const std::size_t extra = ceil_div(9 * n, 16);
      p = {false, ceil_div(5 * n, 16), half, half, extra, extra, half, half, extra, extra};
      break;
    }
    case PolicyKind::general: {
      const std::size_t h = n / 2;
      p = {true, h, h + 1, n - 3, n - 2, n - 1, h + 1, n - 2, n - 2, n - 1};
      break;
    }
  }
  return p;
}

std::string PublicParams::fingerprint() const {
  Sha256 h;
  h.update("MODLAT1 params v" + std::to_string(kFormatVersion) + "\n");
  h.update("policy=" + std::string(to_string(policy.kind)) + "\n");
  h.update("q=" + std::to_string(policy.field.q()) + "\n");
  h.update("n=" + std::to_string(policy.n) + "\n");
  h.update("msgbits=" + std::to_string(policy.message_bits) + "\n");
  h.update("issuance_bound=" + std::to_string(policy.issuance_bound) + "\n");
  h.update(to_canonical_text(d));
  h.update(to_canonical_text(P));
  h.update(to_canonical_text(P_pub));
  const Digest digest = h.finish();
  return to_hex(digest);
}

SetupResult setup(const ParamPolicy& policy, SeededRng& rng, std::size_t max_attempts) {
  const SubspaceLattice lat = policy.lattice();
  const DimensionPlan plan = policy.plan();
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Subspace d = sample_element(lat, plan.exact, plan.d, plan.d, rng);
    if (d.is_zero() || d.is_full()) continue;
    Subspace P = sample_element(lat, plan.exact, plan.p_min, plan.p_max, rng);
    if (lat.leq(d, P)) continue;
    Subspace s = sample_above(lat, d, plan.exact, plan.s_min, plan.s_max, rng);
    if (lat.leq(P, s)) continue;
    Subspace P_pub = lat.meet(P, s);
    return {PublicParams{policy, std::move(d), std::move(P), std::move(P_pub)}, MasterKey{std::move(s), 0}};
  }
  throw SetupFailure("setup: constraints d <= s, d !<= P, P !<= s not met within " + std::to_string(max_attempts) +
                     " attempts");
}

Subspace h1(const PublicParams& params, std::string_view id) {
  const ParamPolicy& policy = params.policy;
  const SubspaceLattice lat = policy.lattice();
  const DimensionPlan plan = policy.plan();
  const std::string fp = params.fingerprint();
  // Since d <= r, every session key lies in the interval
  // [(d . Q_ID) + (d . P_pub), d . (Q_ID + P_pub)]. If the lower end is d or
  // the upper end is O, no ephemeral element can give a usable key.
  const Subspace d_p = lat.meet(params.d, params.P_pub);
  for (std::uint32_t attempt = 0; attempt < kH1Attempts; ++attempt) {
    const Digest seed = Sha256()
                            .update("MODLAT1 h1\n")
                            .update(fp)
                            .update("\n")
                            .update_u64_le(id.size())
                            .update(id)
                            .update_u32_be(attempt)
                            .finish();
    HashStream stream(seed);
    const std::size_t target =
        plan.q_min + stream.uniform_below(static_cast<std::uint32_t>(plan.q_max - plan.q_min + 1));
    Matrix generators(policy.field, target, policy.n);
    for (std::size_t i = 0; i < target; ++i) {
      for (std::size_t j = 0; j < policy.n; ++j) generators.set(i, j, stream.uniform_below(policy.field.q()));
    }
    Subspace q_id = Subspace::span(generators);
    if (q_id.dim() < target || lat.leq(params.d, q_id) || q_id == params.P) continue;
    if (lat.join(lat.meet(params.d, q_id), d_p) == params.d) continue;
    if (lat.meet(params.d, lat.join(q_id, params.P_pub)).is_zero()) continue;
    return q_id;
  }
  throw H1Failure("h1: no admissible Q_ID within " + std::to_string(kH1Attempts) + " attempts");
}

BitString h2(const Subspace& k, std::size_t out_bits) {
  const std::string text = to_canonical_text(k);
  std::vector<std::uint8_t> bytes;
  const std::size_t need = (out_bits + 7) / 8;
  bytes.reserve(need + 32);
  for (std::uint32_t counter = 0; bytes.size() < need; ++counter) {
    const Digest block = Sha256().update(text).update_u32_be(counter).finish();
    bytes.insert(bytes.end(), block.begin(), block.end());
  }
  bytes.resize(need);
  if (out_bits % 8 != 0) bytes.back() &= static_cast<std::uint8_t>(0xFF00U >> (out_bits % 8));
  return BitString::from_bytes(bytes, out_bits);
}

PrivateKey extract(const PublicParams& params, MasterKey& master_key, std::string_view id) {
  if (master_key.issued >= params.policy.issuance_bound) {
    throw IssuanceExhausted("issuance bound of " + std::to_string(params.policy.issuance_bound) +
                            " private keys reached");
  }
  const SubspaceLattice lat = params.policy.lattice();
  require_member(lat, master_key.s, "master key");
  Subspace q_id = h1(params, id);
  if (lat.leq(q_id, master_key.s)) throw ExtractionError("extract: Q_ID lies inside s (Q_ID <= s)");
  Subspace s_id = lat.meet(master_key.s, q_id);
  if (s_id.is_zero()) throw ExtractionError("extract: S_ID = s . Q_ID is the zero space");
  ++master_key.issued;
  return PrivateKey{std::string(id), std::move(s_id)};
}

namespace instrumented {

EncryptTrace encrypt_traced(const PublicParams& params, std::string_view id, const BitString& message,
                            SeededRng& rng) {
  const ParamPolicy& policy = params.policy;
  if (message.size() != policy.message_bits) {
    throw MessageLengthError("message has " + std::to_string(message.size()) + " bits, policy requires " +
                             std::to_string(policy.message_bits));
  }
  const SubspaceLattice lat = policy.lattice();
  const DimensionPlan plan = policy.plan();
  const PairingContext<SubspaceLattice> ctx(lat, params.d);
  Subspace q_id = h1(params, id);
  for (std::size_t attempt = 1; attempt <= kEncryptAttempts; ++attempt) {
    const Subspace r = sample_above(lat, params.d, plan.exact, plan.r_min, plan.r_max, rng);
    if (lat.leq(params.P, r) || lat.leq(q_id, r)) continue;
    Subspace q_r = lat.meet(q_id, r);
    Subspace key = ctx.pair(q_r, params.P_pub);
    if (key.is_zero() || key == params.d) continue;
    Ciphertext c{lat.meet(r, params.P), message ^ h2(key, policy.message_bits), params.fingerprint()};
    return EncryptTrace{std::move(c), std::move(q_id), std::move(q_r), std::move(key), attempt};
  }
  throw EncryptionFailure("encrypt: no admissible ephemeral element within " + std::to_string(kEncryptAttempts) +
                          " attempts");
}

}  // namespace instrumented

Ciphertext encrypt(const PublicParams& params, std::string_view id, const BitString& message, SeededRng& rng) {
  return instrumented::encrypt_traced(params, id, message, rng).ciphertext;
}

BitString decrypt(const PublicParams& params, const PrivateKey& key, const Ciphertext& ciphertext) {
  if (ciphertext.header != params.fingerprint()) {
    throw ParameterMismatch("ciphertext was produced under different public parameters");
  }
  const SubspaceLattice lat = params.policy.lattice();
  require_member(lat, key.S_ID, "private key");
  require_member(lat, ciphertext.U, "ciphertext U");
  if (ciphertext.V.size() != params.policy.message_bits) {
    throw ParameterMismatch("ciphertext payload length differs from the policy message length");
  }
  const PairingContext<SubspaceLattice> ctx(lat, params.d);
  return ciphertext.V ^ h2(ctx.pair(key.S_ID, ciphertext.U), params.policy.message_bits);
}

}  // namespace modlat
