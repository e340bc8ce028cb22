#include "modlat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "modlat/combinatorics.hpp"
#include "modlat/errors.hpp"
#include "modlat/formats.hpp"
#include "modlat/game.hpp"
#include "modlat/ibe.hpp"
#include "modlat/ibe_trace.hpp"
#include "modlat/oracles.hpp"
#include "modlat/statistics.hpp"

namespace modlat::cli {

namespace {

class ReadError : public Error {
 public:
  using Error::Error;
};

class WriteError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw ReadError("error reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open '" + path + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw WriteError("error writing '" + path + "'");
}

// Output of one analysis run in both renderings. The tsv form is also the
// body of the report file written by --out.
struct Rendered {
  std::string name;
  std::string text;
  std::string tsv;
};

std::string fixed(double value, int precision = 6) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << value;
  return s.str();
}

FieldSpec prime_field(std::uint64_t q) {
  if (q >= (std::uint64_t{1} << 31)) throw InvalidArgument("q must be below 2^31");
  return FieldSpec(static_cast<std::uint32_t>(q));
}

ParamPolicy make_policy(const std::string& name, std::uint64_t q, std::size_t n, std::size_t bits,
                        std::optional<std::size_t> bound = std::nullopt) {
  return ParamPolicy::make(parse_policy_kind(name), prime_field(q).q(), n, bits, bound);
}

struct SetupArgs {
  std::string policy;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t msgbits = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> issuance_bound;
  std::string out_params;
  std::string out_msk;
};

int cmd_setup(const SetupArgs& a, std::ostream& out) {
  const ParamPolicy policy = make_policy(a.policy, a.q, a.n, a.msgbits, a.issuance_bound);
  SeededRng rng(a.seed);
  const auto [params, msk] = setup(policy, rng);
  write_file(a.out_params, emit_params(params));
  write_file(a.out_msk, emit_master_key({params.fingerprint(), msk}));
  out << "dim d = " << params.d.dim() << "\n";
  out << "dim P = " << params.P.dim() << "\n";
  out << "dim P_pub = " << params.P_pub.dim() << "\n";
  return kOk;
}

struct ExtractArgs {
  std::string params, msk, id, out;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out) {
  const PublicParams params = parse_params(read_file(a.params));
  MasterKeyFile msk = parse_master_key(read_file(a.msk));
  const std::string fp = params.fingerprint();
  if (msk.params_fingerprint != fp) throw ParameterMismatch("master key belongs to different params");
  const PrivateKey key = extract(params, msk.key, a.id);
  // The incremented counter is persisted before the key is released.
  write_file(a.msk, emit_master_key(msk));
  write_file(a.out, emit_private_key({fp, key}));
  out << "issued " << msk.key.issued << " of " << params.policy.issuance_bound << "\n";
  return kOk;
}

struct EncryptArgs {
  std::string params, id, in, out;
  std::uint64_t seed = 0;
};

int cmd_encrypt(const EncryptArgs& a) {
  const PublicParams params = parse_params(read_file(a.params));
  const std::string data = read_file(a.in);
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(data.data());
  const BitString message = BitString::from_bytes({bytes, data.size()}, params.policy.message_bits);
  SeededRng rng(a.seed);
  write_file(a.out, emit_ciphertext(encrypt(params, a.id, message, rng)));
  return kOk;
}

struct DecryptArgs {
  std::string params, key, in, out;
};

int cmd_decrypt(const DecryptArgs& a) {
  const PublicParams params = parse_params(read_file(a.params));
  const PrivateKeyFile key = parse_private_key(read_file(a.key));
  const Ciphertext ciphertext = parse_ciphertext(read_file(a.in));
  if (key.params_fingerprint != params.fingerprint()) {
    throw ParameterMismatch("private key belongs to different params");
  }
  const BitString message = decrypt(params, key.key, ciphertext);
  const auto& bytes = message.bytes();
  write_file(a.out, std::string(bytes.begin(), bytes.end()));
  return kOk;
}

struct GaussArgs {
  std::size_t n = 0, k = 0;
  std::uint64_t q = 0;
};

Rendered analyze_gauss(const GaussArgs& a) {
  if (a.q < 2) throw InvalidArgument("q must be at least 2");
  const std::string value = gaussian_coeff(a.n, a.k, a.q).get_str();
  return {"gauss", value + "\n",
          "n\tk\tq\tcount\n" + std::to_string(a.n) + "\t" + std::to_string(a.k) + "\t" + std::to_string(a.q) +
              "\t" + value + "\n"};
}

struct RankArgs {
  std::size_t m = 0, n = 0;
  std::uint64_t q = 0;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
};

Rendered analyze_rank(const RankArgs& a) {
  if (a.q < 2) throw InvalidArgument("q must be at least 2");
  const RankDistribution pmf = rank_pmf(a.m, a.n, a.q);
  std::optional<RankMonteCarloReport> mc;
  if (a.trials > 0) {
    if (!a.seed) throw InvalidArgument("--trials requires --seed");
    prime_field(a.q);
    mc = monte_carlo_rank(a.m, a.n, a.q, a.trials, *a.seed);
  }
  Rendered r{"rank-dist", {}, mc ? "rank\tprobability\tdecimal\tempirical\tz\n" : "rank\tprobability\tdecimal\n"};
  for (std::size_t k = 0; k < pmf.probabilities.size(); ++k) {
    const std::string p = pmf.probabilities[k].get_str();
    const std::string dec = fixed(to_double(pmf.probabilities[k]), 9);
    r.text += std::to_string(k) + " → " + p;
    r.tsv += std::to_string(k) + "\t" + p + "\t" + dec;
    if (mc) {
      r.text += "  empirical=" + fixed(mc->empirical(k)) + " z=" + fixed(mc->z_score(k), 3);
      r.tsv += "\t" + fixed(mc->empirical(k)) + "\t" + fixed(mc->z_score(k), 3);
    }
    r.text += "\n";
    r.tsv += "\n";
  }
  if (mc) {
    r.text += "chi_square = " + fixed(mc->chi_square(), 3) + " (df " + std::to_string(mc->degrees_of_freedom()) +
              ")\n";
  }
  return r;
}

struct DimsArgs {
  std::string policy;
  std::uint64_t q = 0;
  std::size_t n = 0, trials = 0, msgbits = 128;
  std::uint64_t seed = 0;
};

Rendered analyze_dims(const DimsArgs& a) {
  const ParamPolicy policy = make_policy(a.policy, a.q, a.n, a.msgbits);
  const DimensionChainReport report = protocol_dim_stats(policy, a.trials, a.seed);
  const std::pair<const char*, const Histogram*> rows[] = {
      {"p_pub", &report.p_pub},   {"q_meet_r", &report.q_meet_r},       {"joined", &report.joined},
      {"pairing", &report.pairing}, {"private_key", &report.private_key}, {"u", &report.u}};
  Rendered r{"dims", {}, "quantity\tdim\tcount\tfrequency\n"};
  for (const auto& [name, hist] : rows) {
    r.text += name;
    r.text += ":";
    for (const auto& [dim, count] : *hist) {
      r.text += " " + std::to_string(dim) + ":" + std::to_string(count);
      r.tsv += std::string(name) + "\t" + std::to_string(dim) + "\t" + std::to_string(count) + "\t" +
               fixed(DimensionChainReport::frequency(*hist, dim, report.trials)) + "\n";
    }
    r.text += "\n";
  }
  r.text += "predicted: q_meet_r " + std::to_string(report.predicted_meet) + ", joined " +
            std::to_string(report.predicted_join) + ", pairing " + std::to_string(report.predicted_pairing) + "\n";
  return r;
}

struct BdhArgs {
  std::string policy = "geometry5";
  std::uint64_t q = 0;
  std::size_t n = 5, instances = 1, msgbits = 128;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

Rendered analyze_bdh(const BdhArgs& a) {
  const ParamPolicy policy = make_policy(a.policy, a.q, a.n, a.msgbits);
  const std::uint64_t budget = a.budget.value_or(default_enumeration_budget());
  Rendered r{"bdh", {}, "instance\tcandidates\tconsistent_r\tsearched\ttrue_key_found\n"};
  std::size_t total = 0, found = 0;
  for (std::size_t i = 0; i < a.instances; ++i) {
    SeededRng rng(derive_seed(a.seed, i));
    const auto [params, msk] = setup(policy, rng);
    const std::string id = "bdh-" + std::to_string(i);
    const auto trace =
        instrumented::encrypt_traced(params, id, BitString::random(policy.message_bits, rng), rng);
    const BdhCandidates c = brute_force_bdh(params, trace.q_id, trace.ciphertext.U, budget);
    const bool hit = std::find(c.keys.begin(), c.keys.end(), trace.session_key) != c.keys.end();
    total += c.ambiguity();
    found += hit ? 1 : 0;
    r.text += "instance " + std::to_string(i) + ": candidates=" + std::to_string(c.ambiguity()) +
              " consistent_r=" + std::to_string(c.consistent_r) + " searched=" + std::to_string(c.searched) +
              " true_key_found=" + (hit ? "yes" : "no") + "\n";
    r.tsv += std::to_string(i) + "\t" + std::to_string(c.ambiguity()) + "\t" + std::to_string(c.consistent_r) +
             "\t" + std::to_string(c.searched) + "\t" + (hit ? "1" : "0") + "\n";
  }
  if (a.instances > 0) {
    r.text += "mean candidates = " + fixed(static_cast<double>(total) / static_cast<double>(a.instances), 3) +
              ", true key found in " + std::to_string(found) + "/" + std::to_string(a.instances) + "\n";
  }
  return r;
}

struct GameArgs {
  std::string policy = "geometry5";
  std::uint64_t q = 0;
  std::size_t n = 5, trials = 0, msgbits = 128, key_queries = 0;
  std::uint64_t seed = 0;
  std::string adversary = "coin";
  std::optional<std::uint64_t> budget;
};

Rendered analyze_game(const GameArgs& a) {
  GameConfig config{make_policy(a.policy, a.q, a.n, a.msgbits), a.trials, {}, a.key_queries};
  if (a.adversary == "coin") {
    config.adversary = [] { return std::make_unique<CoinFlipAdversary>(); };
  } else if (a.adversary == "omniscient") {
    config.adversary = [] { return std::make_unique<OmniscientAdversary>(); };
    config.reveal_master_key = true;
  } else {
    const std::uint64_t budget = a.budget.value_or(default_enumeration_budget());
    config.adversary = [budget] { return std::make_unique<BruteForceBdhAdversary>(budget); };
  }
  const GameResult g = run_cpa_game(config, a.seed);
  Rendered r{"game", {}, "adversary\ttrials\twins\twin_rate\tadvantage\tadvantage_low\tadvantage_high\n"};
  r.text = "adversary = " + a.adversary + "\ntrials = " + std::to_string(g.trials) + "\nwins = " +
           std::to_string(g.wins) + "\nwin rate = " + fixed(g.win_rate) + " (95% CI " + fixed(g.win_low) + " .. " +
           fixed(g.win_high) + ")\nadvantage = " + fixed(g.advantage) + " (95% CI " + fixed(g.advantage_low) +
           " .. " + fixed(g.advantage_high) + ")\n";
  r.tsv += a.adversary + "\t" + std::to_string(g.trials) + "\t" + std::to_string(g.wins) + "\t" +
           fixed(g.win_rate) + "\t" + fixed(g.advantage) + "\t" + fixed(g.advantage_low) + "\t" +
           fixed(g.advantage_high) + "\n";
  return r;
}

struct OutputArgs {
  std::string format = "text";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  cmd->add_option("--out", o.out, "also write a report file");
}

int emit(const Rendered& r, const OutputArgs& o, std::ostream& out) {
  out << (o.format == "tsv" ? r.tsv : r.text);
  if (!o.out.empty()) write_file(o.out, emit_report({r.name, r.tsv}));
  return kOk;
}

const std::vector<std::string> kPolicies = {"geometry5", "vector16ths", "general"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identity-based encryption over subspace lattices", "modlat"};
  app.require_subcommand(1);

  SetupArgs setup_args;
  auto* setup_cmd = app.add_subcommand("setup", "generate params and a master key");
  setup_cmd->add_option("--policy", setup_args.policy)->required()->check(CLI::IsMember(kPolicies));
  setup_cmd->add_option("--q", setup_args.q, "prime field size")->required();
  setup_cmd->add_option("--n", setup_args.n, "ambient dimension")->required();
  setup_cmd->add_option("--msgbits", setup_args.msgbits, "message length in bits")->required();
  setup_cmd->add_option("--seed", setup_args.seed)->required();
  setup_cmd->add_option("--issuance-bound", setup_args.issuance_bound, "defaults to q");
  setup_cmd->add_option("--out-params", setup_args.out_params)->required();
  setup_cmd->add_option("--out-msk", setup_args.out_msk)->required();

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "issue a private key");
  extract_cmd->add_option("--params", extract_args.params)->required();
  extract_cmd->add_option("--msk", extract_args.msk)->required();
  extract_cmd->add_option("--id", extract_args.id)->required();
  extract_cmd->add_option("--out", extract_args.out)->required();

  EncryptArgs encrypt_args;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a message file to an identity");
  encrypt_cmd->add_option("--params", encrypt_args.params)->required();
  encrypt_cmd->add_option("--id", encrypt_args.id)->required();
  encrypt_cmd->add_option("--in", encrypt_args.in)->required();
  encrypt_cmd->add_option("--seed", encrypt_args.seed)->required();
  encrypt_cmd->add_option("--out", encrypt_args.out)->required();

  DecryptArgs decrypt_args;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
  decrypt_cmd->add_option("--params", decrypt_args.params)->required();
  decrypt_cmd->add_option("--key", decrypt_args.key)->required();
  decrypt_cmd->add_option("--in", decrypt_args.in)->required();
  decrypt_cmd->add_option("--out", decrypt_args.out)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "exact counts and experiments");
  analyze_cmd->require_subcommand(1);

  OutputArgs gauss_out, rank_out, dims_out, bdh_out, game_out;

  GaussArgs gauss_args;
  auto* gauss_cmd = analyze_cmd->add_subcommand("gauss", "number of k-dimensional subspaces of F_q^n");
  gauss_cmd->add_option("--n", gauss_args.n)->required();
  gauss_cmd->add_option("--k", gauss_args.k)->required();
  gauss_cmd->add_option("--q", gauss_args.q)->required();
  add_output_flags(gauss_cmd, gauss_out);

  RankArgs rank_args;
  auto* rank_cmd = analyze_cmd->add_subcommand("rank-dist", "rank law of uniform m x n matrices");
  rank_cmd->add_option("--m", rank_args.m)->required();
  rank_cmd->add_option("--n", rank_args.n)->required();
  rank_cmd->add_option("--q", rank_args.q)->required();
  rank_cmd->add_option("--trials", rank_args.trials, "Monte Carlo trials (needs --seed)");
  rank_cmd->add_option("--seed", rank_args.seed);
  add_output_flags(rank_cmd, rank_out);

  DimsArgs dims_args;
  auto* dims_cmd = analyze_cmd->add_subcommand("dims", "dimension chain of the protocol");
  dims_cmd->add_option("--policy", dims_args.policy)->required()->check(CLI::IsMember(kPolicies));
  dims_cmd->add_option("--n", dims_args.n)->required();
  dims_cmd->add_option("--q", dims_args.q)->required();
  dims_cmd->add_option("--trials", dims_args.trials)->required();
  dims_cmd->add_option("--seed", dims_args.seed)->required();
  dims_cmd->add_option("--msgbits", dims_args.msgbits);
  add_output_flags(dims_cmd, dims_out);

  BdhArgs bdh_args;
  auto* bdh_cmd = analyze_cmd->add_subcommand("bdh", "brute-force session key recovery");
  bdh_cmd->add_option("--policy", bdh_args.policy)->check(CLI::IsMember(kPolicies));
  bdh_cmd->add_option("--q", bdh_args.q)->required();
  bdh_cmd->add_option("--n", bdh_args.n);
  bdh_cmd->add_option("--instances", bdh_args.instances);
  bdh_cmd->add_option("--seed", bdh_args.seed)->required();
  bdh_cmd->add_option("--msgbits", bdh_args.msgbits);
  bdh_cmd->add_option("--budget", bdh_args.budget, "enumeration budget");
  add_output_flags(bdh_cmd, bdh_out);

  GameArgs game_args;
  auto* game_cmd = analyze_cmd->add_subcommand("game", "IND-ID-CPA advantage estimate");
  game_cmd->add_option("--policy", game_args.policy)->check(CLI::IsMember(kPolicies));
  game_cmd->add_option("--q", game_args.q)->required();
  game_cmd->add_option("--n", game_args.n);
  game_cmd->add_option("--trials", game_args.trials)->required();
  game_cmd->add_option("--seed", game_args.seed)->required();
  game_cmd->add_option("--msgbits", game_args.msgbits);
  game_cmd->add_option("--key-queries", game_args.key_queries);
  game_cmd->add_option("--adversary", game_args.adversary)
      ->check(CLI::IsMember({"coin", "omniscient", "bdh"}));
  game_cmd->add_option("--budget", game_args.budget, "enumeration budget for the bdh adversary");
  add_output_flags(game_cmd, game_out);

  std::vector<const char*> argv{"modlat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (setup_cmd->parsed()) return cmd_setup(setup_args, out);
    if (extract_cmd->parsed()) return cmd_extract(extract_args, out);
    if (encrypt_cmd->parsed()) return cmd_encrypt(encrypt_args);
    if (decrypt_cmd->parsed()) return cmd_decrypt(decrypt_args);
    if (gauss_cmd->parsed()) return emit(analyze_gauss(gauss_args), gauss_out, out);
    if (rank_cmd->parsed()) return emit(analyze_rank(rank_args), rank_out, out);
    if (dims_cmd->parsed()) return emit(analyze_dims(dims_args), dims_out, out);
    if (bdh_cmd->parsed()) return emit(analyze_bdh(bdh_args), bdh_out, out);
    if (game_cmd->parsed()) return emit(analyze_game(game_args), game_out, out);
    err << "modlat: no command\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "modlat: " << e.what() << "\ncount: " << e.count() << "\n";
    return kBudgetExceeded;
  } catch (const IssuanceExhausted& e) {
    err << "modlat: " << e.what() << "\n";
    return kIssuanceExhausted;
  } catch (const ParameterMismatch& e) {
    err << "modlat: parameter mismatch: " << e.what() << "\n";
    return kParameterMismatch;
  } catch (const SetupFailure& e) {
    err << "modlat: setup failed: " << e.what() << "\n";
    return kSetupFailed;
  } catch (const H1Failure& e) {
    err << "modlat: " << e.what() << "\n";
    return kOperationFailed;
  } catch (const ExtractionError& e) {
    err << "modlat: " << e.what() << "\n";
    return kOperationFailed;
  } catch (const EncryptionFailure& e) {
    err << "modlat: " << e.what() << "\n";
    return kOperationFailed;
  } catch (const FormatError& e) {
    err << "modlat: malformed file: " << e.what() << "\n";
    return kUsage;
  } catch (const ReadError& e) {
    err << "modlat: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "modlat: " << e.what() << "\n";
    return kUsage;
  } catch (const MessageLengthError& e) {
    err << "modlat: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "modlat: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace modlat::cli
