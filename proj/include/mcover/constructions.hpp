#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcover/components.hpp"

namespace mcover {

// Label-based extremal coloring shared by K(r,t) and its (r,ell)-partite
// generalization. V_1 is labelled by the q-subsets of [k'] in lexicographic
// order; V_j (j >= 2) is split into blocks A_j^1..A_j^{k'} of C(k'-1, q-1)
// vertices each, every vertex of A_j^i labelled {i}.
class LabelledConstruction final : public ColorRule {
 public:
  LabelledConstruction(int r, int ell, int q, int colors);

  int r() const noexcept { return r_; }
  int ell() const noexcept { return ell_; }
  int q() const noexcept { return q_; }
  int colors() const noexcept { return colors_; }
  const std::vector<std::size_t>& class_sizes() const noexcept { return sizes_; }

  // Bit i-1 set for every i in the vertex's label.
  std::uint64_t label(Vertex v) const { return label_.at(v); }
  // The C(k'-1, q-1) special edges of color i, each sorted.
  std::vector<Edge> special_edges(Color i) const;

  Color color(std::span<const Vertex> edge) const override;

 private:
  int r_;
  int ell_;
  int q_;
  int colors_;
  std::size_t block_;  // C(k'-1, q-1)
  std::vector<std::size_t> sizes_;
  std::vector<std::uint64_t> label_;
  // For V_1 vertices: rank inside W_i, indexed [v * colors_ + i - 1], or -1.
  std::vector<std::int64_t> rank_in_w_;
  // For V_1 vertices of W_i in order: w_members_[i-1][p].
  std::vector<std::vector<Vertex>> w_members_;
};

struct BasicParams {
  int r;
  int t;
  int k;                                  // r + t
  std::vector<std::size_t> class_sizes;  // C(k,t), then k*C(k-1,t-1) each
};
BasicParams basic_params(int r, int t);

struct GeneralParams {
  int r;
  int ell;
  int k;
  int q;        // floor((k - r + ell - 1) / ell)
  int k_prime;  // q*ell + r - ell + 1
  std::vector<std::size_t> class_sizes;
};
GeneralParams general_params(int r, int ell, int k);

// V_1 = [k]; every edge takes the color of its V_1 vertex.
EdgeColoring build_nonspanning_sharp(int r, int k, std::vector<std::size_t> class_sizes);

// K(r,t): spanning (r+t)-coloring of the complete r-partite hypergraph.
EdgeColoring build_basic(int r, int t);

// Spanning k'-coloring of the complete or semicomplete (r,ell)-partite host.
EdgeColoring build_general(int r, int ell, int k, HostKind host = HostKind::kComplete);

EdgeColoring build(const ConstructionDescriptor& d);

struct SpecialEdgeAudit {
  bool passed = true;
  std::vector<int> small_components;  // per color, index c-1
  std::vector<int> large_components;
  std::optional<Edge> offending;
  std::string message;
};

// Checks that every special edge of color i forms a whole color-i component
// of exactly r vertices. `coloring` must come from build_basic/build_general.
SpecialEdgeAudit special_edge_audit(const EdgeColoring& coloring, const ComponentDecomposition& d);
SpecialEdgeAudit special_edge_audit(const EdgeColoring& coloring);

std::uint64_t binomial(int n, int k);

}  // namespace mcover
