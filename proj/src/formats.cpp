#include "modlat/formats.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "modlat/errors.hpp"

namespace modlat {

namespace {

constexpr std::string_view kKindNames[] = {"params", "masterkey", "privkey", "ciphertext", "report"};

std::string hex_encode(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0x0f]);
  }
  return out;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("odd-length hex field");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]);
    const int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid lowercase hex field");
    out.push_back(static_cast<char>(hi << 4 | lo));
  }
  return out;
}

std::uint64_t parse_decimal(std::string_view s, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || (s.size() > 1 && s[0] == '0')) {
    throw FormatError("malformed number in field '" + std::string(what) + "'");
  }
  return value;
}

// Sequential line reader over a whole file. Every line must end in '\n'.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::string_view line() {
    if (pos_ >= text_.size()) throw FormatError("unexpected end of file");
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) throw FormatError("final line is not newline-terminated");
    std::string_view out = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return out;
  }

  std::string_view field(std::string_view key) {
    const std::string_view l = line();
    if (l.size() <= key.size() || !l.starts_with(key) || l[key.size()] != '=') {
      throw FormatError("expected field '" + std::string(key) + "'");
    }
    return l.substr(key.size() + 1);
  }

  std::uint64_t number(std::string_view key) { return parse_decimal(field(key), key); }

  Subspace subspace(std::string_view name) {
    if (field("subspace") != name) throw FormatError("expected subspace '" + std::string(name) + "'");
    const std::string_view header = line();
    const auto k_pos = header.rfind(" k=");
    if (k_pos == std::string_view::npos) throw FormatError("malformed subspace header");
    const std::uint64_t k = parse_decimal(header.substr(k_pos + 3), "k");
    std::string block(header);
    block.push_back('\n');
    for (std::uint64_t i = 0; i < k; ++i) {
      block += line();
      block.push_back('\n');
    }
    return parse_canonical_text(block);
  }

  bool done() const noexcept { return pos_ == text_.size(); }

  void finish() {
    if (line() != "end") throw FormatError("expected 'end'");
    if (pos_ != text_.size()) throw FormatError("trailing data after 'end'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Reader open(std::string_view text, FileKind expected) {
  const FileKind kind = peek_kind(text);
  if (kind != expected) {
    throw FormatError("expected a " + std::string(to_string(expected)) + " file, found " +
                      std::string(to_string(kind)));
  }
  Reader r(text);
  r.line();
  r.line();
  return r;
}

std::string begin(FileKind kind) {
  return std::string(kMagic) + "\nkind=" + std::string(to_string(kind)) + "\n";
}

void put_subspace(std::string& out, std::string_view name, const Subspace& s) {
  out += "subspace=";
  out += name;
  out += "\n";
  out += to_canonical_text(s);
}

void check_fingerprint(std::string_view fp) {
  if (fp.size() != 64) throw FormatError("params fingerprint must be 64 hex digits");
  hex_decode(fp);
}

}  // namespace

std::string_view to_string(FileKind kind) noexcept { return kKindNames[static_cast<int>(kind)]; }

FileKind peek_kind(std::string_view text) {
  const auto nl = text.find('\n');
  const std::string_view magic = text.substr(0, nl);
  if (magic != kMagic) {
    if (magic.starts_with("MODLAT")) throw FormatError("unsupported format version '" + std::string(magic) + "'");
    throw FormatError("not a MODLAT file");
  }
  if (nl == std::string_view::npos) throw FormatError("missing kind line");
  const auto nl2 = text.find('\n', nl + 1);
  const std::string_view kind_line = text.substr(nl + 1, nl2 == std::string_view::npos ? nl2 : nl2 - nl - 1);
  if (!kind_line.starts_with("kind=")) throw FormatError("missing kind line");
  const std::string_view kind = kind_line.substr(5);
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kind == kKindNames[i]) return static_cast<FileKind>(i);
  }
  throw FormatError("unknown file kind '" + std::string(kind) + "'");
}

std::string emit_params(const PublicParams& params) {
  const ParamPolicy& p = params.policy;
  std::string out = begin(FileKind::params);
  out += "policy=" + std::string(to_string(p.kind)) + "\n";
  out += "q=" + std::to_string(p.field.q()) + "\n";
  out += "n=" + std::to_string(p.n) + "\n";
  out += "msgbits=" + std::to_string(p.message_bits) + "\n";
  out += "issuance_bound=" + std::to_string(p.issuance_bound) + "\n";
  put_subspace(out, "d", params.d);
  put_subspace(out, "P", params.P);
  put_subspace(out, "P_pub", params.P_pub);
  out += "end\n";
  return out;
}

PublicParams parse_params(std::string_view text) {
  Reader r = open(text, FileKind::params);
  const std::string policy_name(r.field("policy"));
  const std::uint64_t q = r.number("q");
  const std::uint64_t n = r.number("n");
  const std::uint64_t bits = r.number("msgbits");
  const std::uint64_t bound = r.number("issuance_bound");
  if (q >= (std::uint64_t{1} << 31)) throw FormatError("modulus out of range");
  ParamPolicy policy = [&] {
    try {
      return ParamPolicy::make(parse_policy_kind(policy_name), static_cast<std::uint32_t>(q), n, bits, bound);
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("invalid policy: ") + e.what());
    }
  }();
  PublicParams params{policy, r.subspace("d"), r.subspace("P"), r.subspace("P_pub")};
  r.finish();

  const SubspaceLattice lat = policy.lattice();
  for (const Subspace* s : {&params.d, &params.P, &params.P_pub}) {
    if (!lat.contains(*s)) throw FormatError("subspace does not belong to the policy lattice");
  }
  if (lat.leq(params.d, params.P)) throw FormatError("params violate d !<= P");
  if (!lat.leq(params.P_pub, params.P)) throw FormatError("params violate P_pub <= P");
  return params;
}

std::string emit_master_key(const MasterKeyFile& file) {
  std::string out = begin(FileKind::masterkey);
  out += "params=" + file.params_fingerprint + "\n";
  out += "issued=" + std::to_string(file.key.issued) + "\n";
  put_subspace(out, "s", file.key.s);
  out += "end\n";
  return out;
}

MasterKeyFile parse_master_key(std::string_view text) {
  Reader r = open(text, FileKind::masterkey);
  std::string fp(r.field("params"));
  check_fingerprint(fp);
  const std::uint64_t issued = r.number("issued");
  Subspace s = r.subspace("s");
  r.finish();
  return {std::move(fp), {std::move(s), issued}};
}

std::string emit_private_key(const PrivateKeyFile& file) {
  std::string out = begin(FileKind::privkey);
  out += "params=" + file.params_fingerprint + "\n";
  out += "id=" + hex_encode(file.key.id) + "\n";
  put_subspace(out, "S_ID", file.key.S_ID);
  out += "end\n";
  return out;
}

PrivateKeyFile parse_private_key(std::string_view text) {
  Reader r = open(text, FileKind::privkey);
  std::string fp(r.field("params"));
  check_fingerprint(fp);
  std::string id = hex_decode(r.field("id"));
  Subspace s_id = r.subspace("S_ID");
  r.finish();
  return {std::move(fp), {std::move(id), std::move(s_id)}};
}

std::string emit_ciphertext(const Ciphertext& ciphertext) {
  std::string out = begin(FileKind::ciphertext);
  out += "params=" + ciphertext.header + "\n";
  put_subspace(out, "U", ciphertext.U);
  out += "bits=" + std::to_string(ciphertext.V.size()) + "\n";
  out += "V=" + ciphertext.V.to_hex() + "\n";
  out += "end\n";
  return out;
}

Ciphertext parse_ciphertext(std::string_view text) {
  Reader r = open(text, FileKind::ciphertext);
  std::string header(r.field("params"));
  check_fingerprint(header);
  Subspace u = r.subspace("U");
  const std::uint64_t bits = r.number("bits");
  BitString v = BitString::from_hex(r.field("V"), bits);
  r.finish();
  return {std::move(u), std::move(v), std::move(header)};
}

std::string emit_report(const Report& report) {
  if (report.name.empty() || report.name.find('\n') != std::string::npos) {
    throw InvalidArgument("report name must be a non-empty single line");
  }
  if (!report.body.empty() && report.body.back() != '\n') {
    throw InvalidArgument("report body must end with a newline");
  }
  if (report.body.rfind("end\n", 0) == 0 || report.body.find("\nend\n") != std::string::npos) {
    throw InvalidArgument("report body must not contain an 'end' line");
  }
  std::string out = begin(FileKind::report);
  out += "name=" + report.name + "\n";
  out += report.body;
  out += "end\n";
  return out;
}

Report parse_report(std::string_view text) {
  Reader r = open(text, FileKind::report);
  Report report;
  report.name = r.field("name");
  if (report.name.empty()) throw FormatError("empty report name");
  for (;;) {
    const std::string_view l = r.line();
    if (l == "end") break;
    report.body += l;
    report.body.push_back('\n');
  }
  if (!r.done()) throw FormatError("trailing data after 'end'");
  return report;
}

}  // namespace modlat
