#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "mcover/error.hpp"

namespace mcover {

using Vertex = std::uint32_t;

// Vertex classes V_1..V_r with the per-class cap ell. Vertex ids are dense
// and grouped by class: class 0 owns ids [0, |V_1|), class 1 the next block,
// and so on. Class indices are 0-based in code and 1-based in user output.
class PartiteStructure {
 public:
  PartiteStructure(int r, int ell, std::vector<std::size_t> class_sizes);

  int r() const noexcept { return r_; }
  int ell() const noexcept { return ell_; }
  std::size_t vertex_count() const noexcept { return class_of_.size(); }
  std::span<const std::size_t> class_sizes() const noexcept { return sizes_; }
  std::size_t class_size(int cls) const { return sizes_.at(cls); }
  Vertex class_begin(int cls) const { return begin_.at(cls); }
  Vertex class_end(int cls) const { return begin_.at(cls) + sizes_.at(cls); }
  int class_of(Vertex v) const { return class_of_.at(v); }

  // Per-class intersection sizes of a vertex list (no validation).
  std::vector<int> class_counts(std::span<const Vertex> vs) const;

  friend bool operator==(const PartiteStructure& a, const PartiteStructure& b) {
    return a.r_ == b.r_ && a.ell_ == b.ell_ && a.sizes_ == b.sizes_;
  }

 private:
  int r_;
  int ell_;
  std::vector<std::size_t> sizes_;
  std::vector<Vertex> begin_;
  std::vector<int> class_of_;
};

// Canonical edge: sorted vertex ids.
struct Edge {
  std::vector<Vertex> vertices;

  Edge() = default;
  explicit Edge(std::vector<Vertex> vs);
  explicit Edge(std::span<const Vertex> vs);

  std::size_t size() const noexcept { return vertices.size(); }
  std::span<const Vertex> span() const noexcept { return vertices; }
  auto operator<=>(const Edge&) const = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
  std::size_t operator()(std::span<const Vertex> vs) const noexcept;
};

enum class EdgeKind { kFriendly, kUnfriendly };

// True iff `vs` has r distinct entries and every class meets it in at most
// ell vertices. Throws InputError for ids outside the vertex range or a
// wrong entry count.
bool is_valid_edge(const PartiteStructure& s, std::span<const Vertex> vs);

// Friendly iff at most one class meets the edge in exactly ell vertices.
EdgeKind classify_edge(const PartiteStructure& s, std::span<const Vertex> edge);

// Edges removed from the complete host. Only unfriendly edges may be added.
class DeletedEdgeSet {
 public:
  DeletedEdgeSet() = default;

  void insert(const PartiteStructure& s, Edge e);
  bool contains(std::span<const Vertex> edge) const;
  bool empty() const noexcept { return edges_.empty(); }
  std::size_t size() const noexcept { return edges_.size(); }
  // Sorted copy, for serialization.
  std::vector<Edge> sorted() const;

 private:
  std::unordered_set<Edge, EdgeHash> edges_;
};

enum class HostKind { kComplete, kSemicomplete };

// A rich (r,ell)-partite host: the complete or semicomplete hypergraph on a
// partite structure, minus a set of deleted unfriendly edges.
class Hypergraph {
 public:
  explicit Hypergraph(PartiteStructure s, HostKind kind = HostKind::kComplete,
                      DeletedEdgeSet deleted = {});

  const PartiteStructure& structure() const noexcept { return structure_; }
  HostKind kind() const noexcept { return kind_; }
  const DeletedEdgeSet& deleted() const noexcept { return deleted_; }

  // Membership for an arbitrary sorted vertex list.
  bool contains(std::span<const Vertex> sorted_vs) const;

  // Streams every edge exactly once in lexicographic order.
  void for_each_edge(const std::function<void(std::span<const Vertex>)>& fn) const;

  // Closed-form count, minus deletions.
  std::uint64_t edge_count() const;

  Hypergraph with_deleted(std::span<const Edge> extra) const;

 private:
  PartiteStructure structure_;
  HostKind kind_;
  DeletedEdgeSet deleted_;
};

// Streams every valid edge of the complete (r,ell)-partite hypergraph that is
// not in `deleted`, in strictly increasing lexicographic order.
void for_each_edge(const PartiteStructure& s, const DeletedEdgeSet& deleted,
                   const std::function<void(std::span<const Vertex>)>& fn);

// Collects the stream above; convenient for small structures.
std::vector<Edge> edges(const PartiteStructure& s, const DeletedEdgeSet& deleted = {});

// Number of edges of the complete (r,ell)-partite hypergraph, by a
// per-class convolution. Throws ResourceError on 64-bit overflow.
std::uint64_t count_edges(const PartiteStructure& s);
std::uint64_t count_edges(const PartiteStructure& s, HostKind kind);

}  // namespace mcover
