#include <doctest.h>

#include "helpers.hpp"
#include "mcover/constructions.hpp"
#include "mcover/error.hpp"
#include "mcover/extractor.hpp"
#include "mcover/search.hpp"

using namespace mcover;

namespace {

// Cover check against graph-search components; serials follow the same
// smallest-vertex order.
bool oracle_covers(const EdgeColoring& coloring, const Cover& cover) {
  const auto comps = oracle::components(coloring);
  std::set<Vertex> hit;
  for (const auto& ref : cover.components) {
    const auto& set = comps.at(ref.color - 1).at(ref.serial - 1);
    hit.insert(set.begin(), set.end());
  }
  return hit.size() == coloring.structure().vertex_count();
}

}  // namespace

TEST_CASE("few colors give a single component") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_spanning_coloring(PartiteStructure(3, 2, {3, 3, 3}), 3, seed);
    const auto cc = extract_cover_constructive(c);
    CHECK(cc.cover.size() == 1);
    CHECK(oracle_covers(c, cc.cover));
  }
}

TEST_CASE("general construction") {
  for (HostKind kind : {HostKind::kComplete, HostKind::kSemicomplete}) {
    const auto c = build_general(3, 2, 6, kind);
    const auto cc = extract_cover_constructive(c);
    CHECK(cc.bound == 3);
    CHECK(cc.cover.size() <= 3);
    CHECK(oracle_covers(c, cc.cover));
    CHECK_FALSE(describe(cc.trace).empty());
  }
}

TEST_CASE("random five-colorings of (3,3,3) with ell 2") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = random_spanning_coloring(PartiteStructure(3, 2, {3, 3, 3}), 5, derive_seed(7, seed));
    const auto cc = extract_cover_constructive(c);
    CHECK(cc.cover.size() <= 2);
    CHECK(oracle_covers(c, cc.cover));
  }
}

TEST_CASE("random colorings over several shapes stay within the bound") {
  struct Shape {
    int r, ell, k;
    std::vector<std::size_t> sizes;
    HostKind host;
  };
  const std::vector<Shape> shapes{{3, 2, 6, {3, 3, 3}, HostKind::kComplete},
                                  {3, 3, 6, {2, 2, 3}, HostKind::kComplete},
                                  {4, 2, 6, {2, 2, 2, 2}, HostKind::kComplete},
                                  {3, 2, 5, {3, 3, 3}, HostKind::kSemicomplete},
                                  {4, 3, 7, {3, 2, 2, 2}, HostKind::kComplete}};
  for (const auto& sh : shapes) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto c = random_spanning_coloring(PartiteStructure(sh.r, sh.ell, sh.sizes), sh.k, seed, 200'000, sh.host);
      int used = 0;
      for (bool u : c.used_colors()) used += u;
      const auto cc = extract_cover_constructive(c);
      CHECK(static_cast<int>(cc.cover.size()) <= proved_upper_bound(sh.r, sh.ell, used));
      CHECK(oracle_covers(c, cc.cover));
      CHECK(static_cast<int>(cc.cover.size()) >= oracle::min_cover(c, cc.bound));
    }
  }
}

TEST_CASE("extractor preconditions") {
  CHECK_THROWS_AS(extract_cover_constructive(build_basic(3, 1)), InputError);
  const auto sharp_like = helpers::color_by(PartiteStructure(3, 2, {2, 2, 2}), 2,
                                            [](std::span<const Vertex> e) { return e[0] == 0 ? 1 : 2; });
  REQUIRE_FALSE(is_spanning(sharp_like, decompose(sharp_like)).spanning);
  CHECK_THROWS_AS(extract_cover_constructive(sharp_like), InputError);
}
