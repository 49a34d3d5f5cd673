#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcover/cover.hpp"

namespace mcover {

// Dual of a colored instance: one dual vertex per monochromatic component
// (grouped into k classes by color), one dual edge per original vertex made
// of the components containing it. Dual edges are grouped into r classes by
// the original vertex's class.
struct DualInstance {
  int k = 0;  // uniformity: colors
  int r = 0;  // number of edge classes
  std::vector<ComponentRef> vertices;          // dual vertex id -> component
  std::vector<std::vector<std::uint32_t>> edges;  // dual edge -> sorted dual vertex ids
  std::vector<int> edge_class;                 // 0-based original class

  std::size_t class_size(Color c) const;       // dual vertices of color c
};

struct DualOptions {
  // Accept non-spanning colorings; dual edges then skip isolated colors and
  // may be shorter than k.
  bool allow_nonspanning = false;
};

// InputError for a non-spanning coloring unless allowed.
DualInstance build_dual(const EdgeColoring& coloring, const ComponentDecomposition& d,
                        const DualOptions& opts = {});

struct IntersectionCheck {
  bool holds;
  // One dual edge per class with no common dual vertex; entries are the
  // original vertices (= dual edge ids).
  std::optional<std::vector<std::uint32_t>> witness;
};

// True iff any r dual edges from distinct classes share a dual vertex.
IntersectionCheck verify_r_wise_intersection(const DualInstance& dual);

struct Transversal {
  int size;
  std::vector<std::uint32_t> vertices;  // dual vertex ids
  std::uint64_t nodes = 0;
};

// Minimum set of dual vertices meeting every dual edge, by iterative
// deepening over the first unmet edge. ResourceError above the vertex limit
// or node budget.
Transversal tau(const DualInstance& dual, std::size_t vertex_limit = 64,
                std::uint64_t node_budget = 500'000'000);

}  // namespace mcover
