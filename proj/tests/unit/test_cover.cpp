#include <doctest.h>

#include "helpers.hpp"
#include "mcover/constructions.hpp"
#include "mcover/cover.hpp"
#include "mcover/error.hpp"
#include "mcover/search.hpp"

using namespace mcover;

namespace {
const PartiteStructure kS222(3, 1, {2, 2, 2});

ComponentDecomposition two_halves() {
  std::vector<std::vector<Component>> by_color(2);
  VertexSet a(4), b(4);
  a.set(0);
  a.set(1);
  b.set(2);
  b.set(3);
  by_color[0].push_back({1, 1, a});
  by_color[1].push_back({2, 1, b});
  return ComponentDecomposition(4, by_color);
}
}  // namespace

TEST_CASE("exact cover on small instances") {
  const auto mono = helpers::color_by(kS222, 1, [](auto) { return 1; });
  CHECK(min_cover_exact(decompose(mono)).size == 1);
  CHECK(min_cover_exact(decompose(build_basic(3, 1))).size == 2);
  CHECK(min_cover_exact(decompose(build_basic(3, 2))).size == 3);
  CHECK(min_cover_exact(decompose(build_nonspanning_sharp(3, 2, {2, 2, 2}))).size == 2);
  CHECK(min_cover_exact(decompose(build_nonspanning_sharp(3, 4, {4, 2, 2}))).size == 4);
  CHECK(min_cover_exact(decompose(build_nonspanning_sharp(3, 1, {1, 1, 1}))).size == 1);
}

TEST_CASE("exact cover agrees with subset enumeration") {
  const std::vector<std::vector<std::size_t>> grid{{2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {2, 2, 2, 2}};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto& sizes = grid[seed % grid.size()];
    const int r = static_cast<int>(sizes.size());
    const int ell = 1 + static_cast<int>(seed / 4 % 2);
    const PartiteStructure s(r, ell, sizes);
    const int k = 2 + static_cast<int>(seed % 5);
    const auto coloring = helpers::random_coloring(s, k, seed);
    const auto d = decompose(coloring);
    const auto exact = min_cover_exact(d);
    CHECK(exact.size == oracle::min_cover(coloring, 8));
    CHECK(static_cast<int>(exact.cover.size()) == exact.size);
    CHECK(covers(d, exact.cover));
    const auto greedy = min_cover_greedy(d);
    CHECK(greedy.size >= exact.size);
    CHECK(covers(d, greedy.cover));
    if (exact.size > 1) CHECK(no_cover_of_size(d, exact.size - 1).none_cover);
    CHECK_FALSE(no_cover_of_size(d, exact.size).none_cover);
  }
}

TEST_CASE("greedy cover") {
  const auto d = two_halves();
  CHECK(min_cover_greedy(d).size == 2);
  const auto mono = helpers::color_by(kS222, 1, [](auto) { return 1; });
  CHECK(min_cover_greedy(decompose(mono)).size == 1);
  const auto g = min_cover_greedy(decompose(build_basic(3, 2)));
  CHECK(g.size >= 3);
  CHECK(covers(decompose(build_basic(3, 2)), g.cover));
}

TEST_CASE("uncoverable vertex") {
  std::vector<std::vector<Component>> by_color(1);
  VertexSet a(3);
  a.set(0);
  a.set(1);
  by_color[0].push_back({1, 1, a});
  const ComponentDecomposition d(3, by_color);
  CHECK_THROWS_AS(min_cover_greedy(d), InputError);
  CHECK_THROWS_AS(min_cover_exact(d), InputError);
}

TEST_CASE("no cover of a given size") {
  CHECK(no_cover_of_size(decompose(build_basic(3, 1)), 1).none_cover);
  CHECK(no_cover_of_size(decompose(build_basic(3, 2)), 2).none_cover);
  const auto mono = helpers::color_by(kS222, 1, [](auto) { return 1; });
  const auto r = no_cover_of_size(decompose(mono), 1);
  CHECK_FALSE(r.none_cover);
  REQUIRE(r.witness);
  CHECK(r.witness->size() == 1);
}

TEST_CASE("larger construction baseline") {
  // K(3,3): at least t + 1 = 4 components are needed.
  const auto d = decompose(build_basic(3, 3));
  CHECK(no_cover_of_size(d, 3).none_cover);
}

TEST_CASE("resource limits") {
  const auto d = decompose(build_basic(3, 2));
  CHECK_THROWS_AS(min_cover_exact(d, SolverOptions{10, 1000}), ResourceError);
  CHECK_THROWS_AS(no_cover_of_size(d, 3, SolverOptions{64, 100}), ResourceError);
}

TEST_CASE("bound formula") {
  CHECK(bound_formula(3, 2, 4) == 2);
  CHECK(bound_formula(3, 1, 5) == 3);
  CHECK(bound_formula(4, 4, 4) == 1);
  CHECK(bound_formula(3, 2, 6) == 3);
  CHECK(bound_formula(3, 3, 5) == 2);
  CHECK_THROWS_AS(bound_formula(4, 1, 3), InputError);
  CHECK(proved_upper_bound(3, 1, 3) == 1);
  CHECK(proved_upper_bound(3, 1, 6) == 5);
  CHECK(proved_upper_bound(3, 1, 5) == 3);
  CHECK(proved_upper_bound(3, 2, 6) == 3);
}

TEST_CASE("cover union") {
  const auto d = two_halves();
  Cover one{{ComponentRef{1, 1}}};
  CHECK(cover_union(d, one).count() == 2);
  CHECK_FALSE(covers(d, one));
  one.components.push_back({2, 1});
  CHECK(covers(d, one));
}
