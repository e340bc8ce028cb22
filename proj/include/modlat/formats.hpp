#pragma once

// Text file formats. Every file starts with the magic line `MODLAT1` and a
// `kind=<kind>` line, and ends with `end`. Subspaces are embedded as
// `subspace=<name>` followed by their canonical text. Writers are
// deterministic, and parsers accept only what the writers produce.
//
//   params      policy, q, n, msgbits, issuance_bound, subspaces d, P, P_pub
//   masterkey   params fingerprint, issued counter, subspace s
//   privkey     params fingerprint, hex identity, subspace S_ID
//   ciphertext  params fingerprint, subspace U, bits=<len>, V=<hex>
//   report      name=<analysis>, then tab-separated rows

#include <string>
#include <string_view>

#include "modlat/ibe.hpp"

namespace modlat {

inline constexpr std::string_view kMagic = "MODLAT1";

enum class FileKind { params, masterkey, privkey, ciphertext, report };

std::string_view to_string(FileKind kind) noexcept;
/// Validates the magic line and returns the kind; throws FormatError on an
/// unknown version or kind.
FileKind peek_kind(std::string_view text);

struct MasterKeyFile {
  std::string params_fingerprint;
  MasterKey key;
  friend bool operator==(const MasterKeyFile&, const MasterKeyFile&) = default;
};

struct PrivateKeyFile {
  std::string params_fingerprint;
  PrivateKey key;
  friend bool operator==(const PrivateKeyFile&, const PrivateKeyFile&) = default;
};

struct Report {
  std::string name;
  std::string body;  // newline-terminated rows
  friend bool operator==(const Report&, const Report&) = default;
};

std::string emit_params(const PublicParams& params);
PublicParams parse_params(std::string_view text);

std::string emit_master_key(const MasterKeyFile& file);
MasterKeyFile parse_master_key(std::string_view text);

std::string emit_private_key(const PrivateKeyFile& file);
PrivateKeyFile parse_private_key(std::string_view text);

std::string emit_ciphertext(const Ciphertext& ciphertext);
Ciphertext parse_ciphertext(std::string_view text);

std::string emit_report(const Report& report);
Report parse_report(std::string_view text);

}  // namespace modlat
