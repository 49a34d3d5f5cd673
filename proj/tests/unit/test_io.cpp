#include <doctest.h>

#include "helpers.hpp"
#include "mcover/certificate.hpp"
#include "mcover/constructions.hpp"
#include "mcover/error.hpp"
#include "mcover/instance_io.hpp"
#include "mcover/search.hpp"

using namespace mcover;

namespace {

const char* kBasic31 =
    "mcover-instance 1\nr 3\nell 1\nk 4\nclasses 4 4 4\nhost complete\nflags spanning-verified\n"
    "construct basic 3 1\n";

void same_coloring(const EdgeColoring& a, const EdgeColoring& b) {
  CHECK(a.structure() == b.structure());
  CHECK(a.num_colors() == b.num_colors());
  CHECK(a.host().edge_count() == b.host().edge_count());
  a.for_each_edge([&](std::span<const Vertex> e, Color c) { CHECK(b.color_of(e) == c); });
}

std::string explicit_small() {
  return "mcover-instance 1\nr 3\nell 1\nk 2\nclasses 1 1 2\nhost complete\nflags\n"
         "edge 0 1 2 color 1\nedge 0 1 3 color 2\n";
}

CertificateFile min_cover_cert(const std::string& inst_text) {
  const auto inst = parse_instance(inst_text);
  const auto d = decompose(*inst.coloring);
  const auto exact = min_cover_exact(d);
  CertificateFile cert;
  cert.instance_digest = instance_digest(inst_text);
  cert.claim = ClaimType::kMinCover;
  cert.size = exact.size;
  cert.components = certificate_entries(d, exact.cover);
  cert.verdict = "covers";
  return cert;
}

}  // namespace

TEST_CASE("sha256 known answer") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("construction instance text and digest") {
  const std::string text = write_instance(build_basic(3, 1), true);
  CHECK(text == kBasic31);
  // Reference digest from an independent SHA-256 of the same bytes.
  CHECK(instance_digest(text) == "sha256:97cc5498e682218afe93caa2d23de48b52b0a35f6e531cd77fc78066d4625fb0");
}

TEST_CASE("round trips") {
  for (const auto& c : {build_basic(3, 1), build_general(3, 2, 4), build_general(3, 2, 6, HostKind::kSemicomplete),
                        build_nonspanning_sharp(3, 3, {3, 2, 2}),
                        random_spanning_coloring(PartiteStructure(3, 2, {3, 2, 2}), 4, 5)}) {
    for (bool force : {false, true}) {
      const std::string text = write_instance(c, false, force);
      const auto parsed = parse_instance(text);
      REQUIRE(parsed.coloring);
      same_coloring(c, *parsed.coloring);
      CHECK(write_instance(*parsed.coloring, false, force) == text);
    }
  }
  const auto parsed = parse_instance(explicit_small());
  CHECK(write_instance(*parsed.coloring, false) == explicit_small());
}

TEST_CASE("deleted edges round trip") {
  const PartiteStructure s(4, 2, {2, 2, 2, 2});
  DeletedEdgeSet del;
  del.insert(s, Edge(std::vector<Vertex>{0, 1, 2, 3}));
  auto host = std::make_shared<const Hypergraph>(s, HostKind::kComplete, del);
  auto table = std::make_shared<const EdgeTable>(*host);
  const EdgeColoring c(host, 2, table, std::vector<Color>(table->size(), 1));
  const std::string text = write_instance(c, false);
  CHECK(text.find("deleted 0 1 2 3\n") != std::string::npos);
  const auto parsed = parse_instance(text);
  CHECK(parsed.coloring->host().edge_count() == c.host().edge_count());
  CHECK(write_instance(*parsed.coloring, false) == text);
}

TEST_CASE("dual round trip") {
  const auto c = build_basic(3, 1);
  const auto dual = build_dual(c, decompose(c));
  const std::string text = write_dual_instance(dual);
  const auto parsed = parse_instance(text);
  REQUIRE(parsed.dual);
  CHECK(parsed.dual->edges == dual.edges);
  CHECK(parsed.dual->edge_class == dual.edge_class);
  CHECK(write_dual_instance(*parsed.dual) == text);
}

TEST_CASE("strict parsing") {
  const std::string good = explicit_small();
  auto broken = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    const auto pos = t.find(from);
    REQUIRE(pos != std::string::npos);
    t.replace(pos, from.size(), to);
    return t;
  };
  CHECK_THROWS_AS(parse_instance(broken("mcover-instance 1", "mcover-instance 2")), InputError);
  CHECK_THROWS_AS(parse_instance(broken("edge 0 1 3 color 2\n", "")), InputError);
  CHECK_THROWS_AS(parse_instance(broken("color 2", "color 3")), InputError);
  CHECK_THROWS_AS(parse_instance(broken("edge 0 1 3", "edge 0 1 2")), InputError);
  CHECK_THROWS_AS(parse_instance(broken("flags\n", "flags shiny\n")), InputError);
  CHECK_THROWS_AS(parse_instance(broken("classes 1 1 2", "classes 1 1")), InputError);
  CHECK_THROWS_AS(parse_instance(good + "extra\n"), InputError);
  try {
    parse_instance(broken("color 2", "color x"));
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 9") != std::string::npos);
  }
}

TEST_CASE("certificate round trip and verification") {
  const std::string inst = write_instance(build_basic(3, 2), true);
  const CertificateFile cert = min_cover_cert(inst);
  const std::string text = write_certificate(cert);
  CHECK(write_certificate(parse_certificate(text)) == text);
  CHECK(verify_certificate(inst, text).valid);
}

TEST_CASE("tampered certificates are rejected") {
  const std::string inst = write_instance(build_basic(3, 1), true);
  CertificateFile cert = min_cover_cert(inst);

  CertificateFile dropped = cert;
  dropped.components[1].vertices.pop_back();
  CHECK_FALSE(verify_certificate(inst, write_certificate(dropped)).valid);

  CertificateFile digest = cert;
  digest.instance_digest.back() = digest.instance_digest.back() == '0' ? '1' : '0';
  CHECK_FALSE(verify_certificate(inst, write_certificate(digest)).valid);

  CertificateFile shrunk = cert;
  shrunk.components.pop_back();
  shrunk.size = 1;
  CHECK_FALSE(verify_certificate(inst, write_certificate(shrunk)).valid);

  CHECK_FALSE(verify_certificate(inst, "mcover-certificate 1\nclaim cover\n").valid);
}

TEST_CASE("non-minimal cover is not a minimum cover") {
  const std::string inst = write_instance(build_basic(3, 1), true);
  const auto d = decompose(*parse_instance(inst).coloring);
  CertificateFile cert;
  cert.instance_digest = instance_digest(inst);
  cert.claim = ClaimType::kMinCover;
  const Cover three{{{1, 1}, {1, 2}, {2, 1}}};
  cert.size = 3;
  cert.components = certificate_entries(d, three);
  cert.verdict = "covers";
  CHECK_FALSE(verify_certificate(inst, write_certificate(cert)).valid);
  cert.claim = ClaimType::kCover;
  CHECK(verify_certificate(inst, write_certificate(cert)).valid);
}

TEST_CASE("other claim types") {
  const std::string inst = write_instance(build_basic(3, 2), true);
  CertificateFile none;
  none.instance_digest = instance_digest(inst);
  none.claim = ClaimType::kNoCoverOfSize;
  none.size = 2;
  none.verdict = "none";
  CHECK(verify_certificate(inst, write_certificate(none)).valid);
  none.size = 3;
  CHECK_FALSE(verify_certificate(inst, write_certificate(none)).valid);

  CertificateFile span;
  span.instance_digest = none.instance_digest;
  span.claim = ClaimType::kSpanning;
  span.verdict = "spanning";
  CHECK(verify_certificate(inst, write_certificate(span)).valid);

  const std::string sharp = write_instance(build_nonspanning_sharp(3, 2, {2, 2, 2}), false);
  span.instance_digest = instance_digest(sharp);
  CHECK_FALSE(verify_certificate(sharp, write_certificate(span)).valid);
  span.verdict = "not-spanning";
  span.witness = std::make_pair(Vertex{0}, Color{2});
  CHECK(verify_certificate(sharp, write_certificate(span)).valid);
  span.witness = std::make_pair(Vertex{0}, Color{1});
  CHECK_FALSE(verify_certificate(sharp, write_certificate(span)).valid);

  const std::string gen = write_instance(build_general(3, 2, 6), true);
  const auto d = decompose(*parse_instance(gen).coloring);
  CertificateFile bound;
  bound.instance_digest = instance_digest(gen);
  bound.claim = ClaimType::kBoundCheck;
  bound.bound_r = 3;
  bound.bound_ell = 2;
  bound.bound_k = 6;
  bound.bound_value = 3;
  bound.relation = "eq";
  bound.components = certificate_entries(d, min_cover_exact(d).cover);
  CHECK(verify_certificate(gen, write_certificate(bound)).valid);
  bound.bound_value = 2;
  CHECK_FALSE(verify_certificate(gen, write_certificate(bound)).valid);
}
