#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcover/cover.hpp"

namespace mcover {

enum class ClaimType { kCover, kMinCover, kNoCoverOfSize, kSpanning, kBoundCheck };

const char* claim_name(ClaimType c);

// Certificate file contents. Text format:
//
//   mcover-certificate 1
//   instance-digest sha256:<hex>
//   instance-file <path relative to the certificate>   (optional)
//   claim cover|min-cover|no-cover-of-size|spanning|bound-check
//   ...claim payload...
//
// Payloads:
//   cover, min-cover:  size <s>; s lines `component <color> <serial> : <vertices>`;
//                      verdict covers|does-not-cover
//   no-cover-of-size:  size <m>; verdict none|exists; witness component lines
//                      when a cover exists
//   spanning:          verdict spanning|not-spanning; witness <vertex> <color>
//   bound-check:       bound <r> <ell> <k> <value>; relation eq|le|ge; for eq
//                      and le, the component lines of a cover of size value
struct CertificateFile {
  std::string instance_digest;
  std::string instance_file;
  ClaimType claim = ClaimType::kCover;
  int size = 0;
  struct Entry {
    ComponentRef ref;
    std::vector<Vertex> vertices;
  };
  std::vector<Entry> components;
  std::string verdict;
  std::optional<std::pair<Vertex, Color>> witness;  // spanning
  int bound_r = 0, bound_ell = 0, bound_k = 0, bound_value = 0;
  std::string relation;  // bound-check
};

// Entry list for a cover, with vertex sets copied from the decomposition.
std::vector<CertificateFile::Entry> certificate_entries(const ComponentDecomposition& d,
                                                        const Cover& cover);

std::string write_certificate(const CertificateFile& cert);
// InputError on malformed text.
CertificateFile parse_certificate(std::string_view text);

struct VerifyResult {
  bool valid;
  std::string reason;
};

// Re-checks a certificate against the instance text alone. The exhaustive
// steps use their own subset enumeration, not the solver.
VerifyResult verify_certificate(std::string_view instance_text, std::string_view certificate_text,
                                std::uint64_t subset_budget = 200'000'000);

}  // namespace mcover
