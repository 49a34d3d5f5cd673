#pragma once

#include <functional>
#include <memory>
#include <random>

#include "mcover/coloring.hpp"
#include "mcover/components.hpp"
#include "oracles.hpp"

namespace helpers {

using namespace mcover;

// Table coloring of a host by an arbitrary rule on sorted edges.
inline EdgeColoring color_by(const PartiteStructure& s, int k,
                             const std::function<Color(std::span<const Vertex>)>& rule,
                             HostKind kind = HostKind::kComplete) {
  auto host = std::make_shared<const Hypergraph>(s, kind);
  auto table = std::make_shared<const EdgeTable>(*host);
  std::vector<Color> colors(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) colors[i] = rule(table->edge(i));
  return EdgeColoring(host, k, table, std::move(colors));
}

// Uniformly random colors, spanning or not.
inline EdgeColoring random_coloring(const PartiteStructure& s, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, k);
  return color_by(s, k, [&](std::span<const Vertex>) { return pick(rng); });
}

inline std::vector<std::vector<oracle::VSet>> library_components(const ComponentDecomposition& d) {
  std::vector<std::vector<oracle::VSet>> out(d.num_colors());
  for (Color c = 1; c <= d.num_colors(); ++c) {
    for (const auto& comp : d.components_of(c)) {
      oracle::VSet set;
      for (auto v = comp.vertices.find_first(); v != VertexSet::npos; v = comp.vertices.find_next(v)) {
        set.insert(static_cast<Vertex>(v));
      }
      out[c - 1].push_back(std::move(set));
    }
  }
  return out;
}

// Essential edges of color c straight from the definition.
inline std::vector<std::vector<Vertex>> oracle_essential(const EdgeColoring& coloring, Color c) {
  const auto comps = oracle::components(coloring);
  std::vector<std::vector<Vertex>> out;
  coloring.for_each_edge([&](std::span<const Vertex> e, Color ec) {
    if (ec != c) return;
    for (Color other = 1; other <= coloring.num_colors(); ++other) {
      if (other == c) continue;
      for (const auto& comp : comps[other - 1]) {
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return comp.count(v) > 0; })) return;
      }
    }
    out.emplace_back(e.begin(), e.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace helpers
