#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcover/dual.hpp"

namespace mcover {

// Text instance format, one record per line:
//
//   mcover-instance 1
//   r <r>
//   ell <ell>
//   k <colors>
//   classes <|V_1|> ... <|V_r|>
//   host complete|semicomplete
//   flags [spanning-verified] [dual]
//   construct basic <r> <t>
//   construct general <r> <ell> <k> complete|semicomplete
//   construct nonspanning-sharp <r> <k> <s1,s2,...>
//   deleted <v1> ... <vr>
//   edge <v1> ... <vr> color <c>
//
// A body is either one construct line or explicit deleted/edge lines listing
// every host edge once in lexicographic order. Dual files carry the `dual`
// flag; their header describes F (r = uniformity, k = edge classes, classes =
// components per color) and edge lines list dual vertex ids with the edge
// class as color.
struct InstanceFile {
  std::optional<EdgeColoring> coloring;
  std::optional<DualInstance> dual;
  bool spanning_verified = false;
};

std::string write_instance(const EdgeColoring& coloring, bool spanning_verified,
                           bool force_explicit = false);
std::string write_dual_instance(const DualInstance& dual);

// Strict parser; InputError with the offending line number.
InstanceFile parse_instance(std::string_view text);

// "sha256:<hex>" over the canonical re-serialization of the parsed file.
std::string instance_digest(const InstanceFile& file);
std::string instance_digest(std::string_view text);

std::string sha256_hex(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mcover
