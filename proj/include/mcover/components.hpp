#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mcover/coloring.hpp"

namespace mcover {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Per-color component serial. Serials are 1..m_c; kIsolated means the vertex
// meets no edge of that color.
using Serial = int;
inline constexpr Serial kIsolated = 0;

struct ComponentRef {
  Color color;
  Serial serial;
  auto operator<=>(const ComponentRef&) const = default;
};

struct Component {
  Color color;
  Serial serial;
  VertexSet vertices;

  ComponentRef ref() const { return {color, serial}; }
};

// A vertex's component serial in each color, colors 1..k at indices 0..k-1.
using VertexVector = std::vector<Serial>;

class ComponentDecomposition {
 public:
  // `by_color[c-1]` lists the color-c components; component i must carry
  // serial i+1. Components of one color must be nonempty and disjoint.
  ComponentDecomposition(std::size_t vertex_count, std::vector<std::vector<Component>> by_color);

  std::size_t vertex_count() const noexcept { return n_; }
  int num_colors() const noexcept { return static_cast<int>(by_color_.size()); }

  std::span<const Component> components_of(Color c) const { return by_color_.at(c - 1); }
  const Component& component(ComponentRef ref) const;
  // Every component ordered by (color, serial).
  std::vector<ComponentRef> refs() const;
  std::size_t component_count() const noexcept { return total_; }

  Serial serial(Vertex v, Color c) const { return vectors_[v * by_color_.size() + (c - 1)]; }
  VertexVector vertex_vector(Vertex v) const;

 private:
  std::size_t n_;
  std::vector<std::vector<Component>> by_color_;
  std::vector<Serial> vectors_;
  std::size_t total_ = 0;
};

// Monochromatic components of every color, with serials ascending by the
// smallest vertex id of each component.
ComponentDecomposition decompose(const EdgeColoring& coloring);

struct SpanningCheck {
  bool spanning;
  // First (vertex, color) pair, vertex-major, where the vertex meets no edge
  // of a used color.
  std::optional<std::pair<Vertex, Color>> witness;
};

SpanningCheck is_spanning(const EdgeColoring& coloring, const ComponentDecomposition& d);

VertexVector vertex_vector(const ComponentDecomposition& d, Vertex v);

// Number of coordinates where the vectors differ. InputError on length mismatch.
int hamming(std::span<const Serial> u, std::span<const Serial> w);

// True iff every edge of color c has all endpoints in one color-c component.
bool check_edge_agreement(const EdgeColoring& coloring, const ComponentDecomposition& d);

// True iff the vertices all lie in one component of color c.
bool in_one_component(const ComponentDecomposition& d, std::span<const Vertex> vs, Color c);

// Color-c edges not contained in any monochromatic component of another color.
std::vector<Edge> essential_edges(const EdgeColoring& coloring, const ComponentDecomposition& d,
                                  Color c);

// Recolors every color-c edge to the smallest other color whose component
// contains it, then renumbers colors above c down by one. Requires that color
// c has no essential edge (ContractError otherwise) and k >= 2.
EdgeColoring eliminate_color(const EdgeColoring& coloring, const ComponentDecomposition& d,
                             Color c);

}  // namespace mcover
