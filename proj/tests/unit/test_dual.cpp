#include <doctest.h>

#include "helpers.hpp"
#include "mcover/constructions.hpp"
#include "mcover/dual.hpp"
#include "mcover/error.hpp"
#include "mcover/search.hpp"

using namespace mcover;

namespace {

// Smallest set of dual vertices meeting every dual edge, by increasing size.
int brute_tau(const DualInstance& dual) {
  std::vector<oracle::VSet> hitting(dual.vertices.size());
  for (std::size_t e = 0; e < dual.edges.size(); ++e) {
    for (auto x : dual.edges[e]) hitting[x].insert(static_cast<Vertex>(e));
  }
  return oracle::min_cover(hitting, dual.edges.size(), 10);
}

}  // namespace

TEST_CASE("dual of a single color") {
  const auto c = helpers::color_by(PartiteStructure(3, 1, {2, 2, 2}), 1, [](auto) { return 1; });
  const auto dual = build_dual(c, decompose(c));
  CHECK(dual.vertices.size() == 1);
  CHECK(dual.edges.size() == 6);
  for (const auto& e : dual.edges) CHECK(e == std::vector<std::uint32_t>{0});
  CHECK(tau(dual).size == 1);
}

TEST_CASE("dual edges are the vertex vectors") {
  const auto c = build_basic(3, 1);
  const auto d = decompose(c);
  const auto dual = build_dual(c, d);
  CHECK(dual.vertices.size() == d.component_count());
  REQUIRE(dual.edges.size() == c.structure().vertex_count());
  for (Vertex v = 0; v < dual.edges.size(); ++v) {
    const auto vec = d.vertex_vector(v);
    std::vector<ComponentRef> expect;
    for (Color col = 1; col <= d.num_colors(); ++col) expect.push_back({col, vec[col - 1]});
    std::vector<ComponentRef> got;
    for (auto x : dual.edges[v]) got.push_back(dual.vertices[x]);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(dual.edge_class[v] == c.structure().class_of(v));
  }
  CHECK(tau(dual).size == 2);
  CHECK(verify_r_wise_intersection(dual).holds);
}

TEST_CASE("transversal numbers of the constructions") {
  const auto c = build_basic(3, 2);
  const auto dual = build_dual(c, decompose(c));
  CHECK(tau(dual).size == 3);
  CHECK(verify_r_wise_intersection(dual).holds);
  const auto g = build_general(3, 2, 5);
  CHECK(verify_r_wise_intersection(build_dual(g, decompose(g))).holds);
}

TEST_CASE("truncated dual edge breaks intersection") {
  const auto c = build_basic(3, 1);
  auto dual = build_dual(c, decompose(c));
  // Keep only the color-1 vertex of one dual edge and point it at a
  // component no edge of another class uses.
  const auto before = verify_r_wise_intersection(dual);
  REQUIRE(before.holds);
  dual.edges[0] = {static_cast<std::uint32_t>(dual.vertices.size())};
  dual.vertices.push_back({1, 99});
  const auto after = verify_r_wise_intersection(dual);
  CHECK_FALSE(after.holds);
  REQUIRE(after.witness);
  CHECK(after.witness->size() == 3);
  CHECK(std::find(after.witness->begin(), after.witness->end(), 0u) != after.witness->end());
}

TEST_CASE("tau matches brute force and the primal cover") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PartiteStructure s(3, 1 + static_cast<int>(seed % 2), {2, 3, 2});
    const auto c = random_spanning_coloring(s, 2 + static_cast<int>(seed % 4), seed);
    const auto d = decompose(c);
    const auto dual = build_dual(c, d);
    const int t = tau(dual).size;
    CHECK(t == brute_tau(dual));
    CHECK(t == oracle::min_cover(c, 10));
    if (s.ell() == 1) CHECK(verify_r_wise_intersection(dual).holds);
  }
}

TEST_CASE("non-spanning input") {
  const auto c = build_nonspanning_sharp(3, 3, {3, 2, 2});
  const auto d = decompose(c);
  CHECK_THROWS_AS(build_dual(c, d), InputError);
  const auto partial = build_dual(c, d, DualOptions{true});
  CHECK(tau(partial).size == 3);
}
