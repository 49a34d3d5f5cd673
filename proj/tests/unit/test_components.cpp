#include <doctest.h>

#include "helpers.hpp"
#include "mcover/constructions.hpp"
#include "mcover/error.hpp"
#include "mcover/search.hpp"

using namespace mcover;
using helpers::color_by;

namespace {
const PartiteStructure kS222(3, 1, {2, 2, 2});

std::vector<std::vector<Vertex>> as_lists(const std::vector<Edge>& es) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& e : es) out.push_back(e.vertices);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("single color gives one component") {
  const auto coloring = color_by(kS222, 1, [](auto) { return 1; });
  const auto d = decompose(coloring);
  REQUIRE(d.components_of(1).size() == 1);
  CHECK(d.components_of(1)[0].vertices.count() == 6);
  CHECK(is_spanning(coloring, d).spanning);
}

TEST_CASE("sharp two-coloring components") {
  const auto coloring = build_nonspanning_sharp(3, 2, {2, 2, 2});
  const auto d = decompose(coloring);
  CHECK(d.component_count() == 2);
  const auto comps = helpers::library_components(d);
  CHECK(comps[0][0] == oracle::VSet{0, 2, 3, 4, 5});
  CHECK(comps[1][0] == oracle::VSet{1, 2, 3, 4, 5});
  const auto sc = is_spanning(coloring, d);
  CHECK_FALSE(sc.spanning);
  REQUIRE(sc.witness);
  CHECK(sc.witness->first == 0);
  CHECK(sc.witness->second == 2);
  // Every edge is essential.
  CHECK(essential_edges(coloring, d, 1).size() == 4);
  CHECK(essential_edges(coloring, d, 2).size() == 4);
}

TEST_CASE("two disjoint edges of one color") {
  const auto coloring = color_by(kS222, 2, [](std::span<const Vertex> e) {
    const std::vector<Vertex> v(e.begin(), e.end());
    return (v == std::vector<Vertex>{0, 2, 4} || v == std::vector<Vertex>{1, 3, 5}) ? 2 : 1;
  });
  const auto d = decompose(coloring);
  REQUIRE(d.components_of(2).size() == 2);
  CHECK(d.components_of(2)[0].vertices.count() == 3);
  CHECK(d.components_of(2)[1].vertices.count() == 3);
  CHECK(d.serial(0, 2) == 1);
  CHECK(d.serial(1, 2) == 2);
}

TEST_CASE("hamming examples") {
  const std::vector<Serial> a{1, 1, 1, 1}, b{1, 1, 2, 2}, c{1, 1, 1}, e{2, 2, 2};
  CHECK(hamming(a, a) == 0);
  CHECK(hamming(a, b) == 2);
  CHECK(hamming(c, e) == 3);
  CHECK_THROWS_AS(hamming(a, c), InputError);
}

TEST_CASE("basic construction is spanning and agrees on edges") {
  const auto coloring = build_basic(3, 1);
  const auto d = decompose(coloring);
  CHECK(is_spanning(coloring, d).spanning);
  CHECK(check_edge_agreement(coloring, d));
}

TEST_CASE("decomposition matches graph search on random colorings") {
  const std::vector<std::vector<std::size_t>> grid{{2, 2, 2}, {3, 2, 1}, {3, 3, 3}};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (int ell = 1; ell <= 3; ++ell) {
      const PartiteStructure s(3, ell, grid[seed % grid.size()]);
      const int k = 1 + static_cast<int>(seed % 4);
      const auto coloring = helpers::random_coloring(s, k, seed);
      const auto d = decompose(coloring);
      CHECK(helpers::library_components(d) == oracle::components(coloring));
      CHECK(check_edge_agreement(coloring, d));
      for (Color c = 1; c <= k; ++c) {
        CHECK(as_lists(essential_edges(coloring, d, c)) == helpers::oracle_essential(coloring, c));
      }
    }
  }
}

TEST_CASE("edge agreement catches a perturbed serial") {
  const auto coloring = build_basic(3, 1);
  const auto d = decompose(coloring);
  std::vector<std::vector<Component>> by_color;
  for (Color c = 1; c <= d.num_colors(); ++c) {
    by_color.emplace_back(d.components_of(c).begin(), d.components_of(c).end());
  }
  // Move one vertex of the small color-1 component into the other one.
  auto& comps = by_color[0];
  REQUIRE(comps.size() == 2);
  const auto v = comps[0].vertices.find_first();
  comps[0].vertices.reset(v);
  comps[1].vertices.set(v);
  const ComponentDecomposition bad(d.vertex_count(), by_color);
  CHECK_FALSE(check_edge_agreement(coloring, bad));
}

TEST_CASE("decomposition input validation") {
  std::vector<std::vector<Component>> overlapping(1);
  VertexSet a(4), b(4);
  a.set(0);
  a.set(1);
  b.set(1);
  b.set(2);
  overlapping[0].push_back({1, 1, a});
  overlapping[0].push_back({1, 2, b});
  CHECK_THROWS_AS(ComponentDecomposition(4, overlapping), InputError);
}

TEST_CASE("every edge is essential with one color") {
  const auto coloring = color_by(kS222, 1, [](auto) { return 1; });
  CHECK(essential_edges(coloring, decompose(coloring), 1).size() == 8);
}

TEST_CASE("a redundant color is eliminated") {
  const auto coloring = color_by(kS222, 2, [](std::span<const Vertex> e) {
    return std::vector<Vertex>(e.begin(), e.end()) == std::vector<Vertex>{0, 2, 4} ? 2 : 1;
  });
  const auto d = decompose(coloring);
  CHECK(essential_edges(coloring, d, 2).empty());
  const auto out = eliminate_color(coloring, d, 2);
  CHECK(out.num_colors() == 1);
  out.for_each_edge([](std::span<const Vertex>, Color c) { CHECK(c == 1); });
  CHECK_THROWS_AS(eliminate_color(coloring, d, 1), ContractError);
}

TEST_CASE("eliminating an unused color renumbers") {
  const auto coloring = color_by(kS222, 3, [](std::span<const Vertex> e) { return e[0] == 0 ? 1 : 3; });
  const auto out = eliminate_color(coloring, decompose(coloring), 2);
  CHECK(out.num_colors() == 2);
  coloring.for_each_edge([&](std::span<const Vertex> e, Color c) { CHECK(out.color_of(e) == (c == 1 ? 1 : 2)); });
}

TEST_CASE("eliminating a manufactured redundant color keeps the other components") {
  int tried = 0;
  for (std::uint64_t seed = 0; seed < 400 && tried < 10; ++seed) {
    const PartiteStructure s(3, 1, {3, 3, 3});
    const auto base = random_spanning_coloring(s, 3, seed);
    // Copy a few color-1 edges into a fresh color 4.
    std::mt19937_64 rng(seed);
    auto coloring = color_by(s, 4, [&](std::span<const Vertex> e) {
      const Color c = base.color_of(e);
      return (c == 1 && rng() % 4 == 0) ? 4 : c;
    });
    const auto d = decompose(coloring);
    if (!essential_edges(coloring, d, 4).empty() || d.components_of(4).empty()) continue;
    if (!is_spanning(coloring, d).spanning) continue;
    ++tried;
    const auto after_comps = oracle::components(coloring);
    const auto out = eliminate_color(coloring, d, 4);
    REQUIRE(out.num_colors() == 3);
    const auto out_comps = oracle::components(out);
    // Colors 2 and 3 may only grow by recolored edges that their own
    // components already contained, so their component sets stay put.
    CHECK(out_comps[1] == after_comps[1]);
    CHECK(out_comps[2] == after_comps[2]);
    coloring.for_each_edge([&](std::span<const Vertex> e, Color c) {
      const Color nc = out.color_of(e);
      if (c != 4) {
        CHECK(nc == c);
      } else {
        bool inside = false;
        for (const auto& comp : after_comps[nc - 1]) {
          inside = inside || std::all_of(e.begin(), e.end(), [&](Vertex v) { return comp.count(v) > 0; });
        }
        CHECK(inside);
      }
    });
    CHECK(is_spanning(out, decompose(out)).spanning);
  }
  CHECK(tried > 0);
}
