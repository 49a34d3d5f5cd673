#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mcover/partite.hpp"

namespace mcover {

// Colors are 1..k. 0 marks "no color" (not an edge of the host).
using Color = int;

// Parameter tuples that regenerate a rule-backed coloring.
struct BasicDescriptor {
  int r;
  int t;
  bool operator==(const BasicDescriptor&) const = default;
};
struct GeneralDescriptor {
  int r;
  int ell;
  int k;
  HostKind host;
  bool operator==(const GeneralDescriptor&) const = default;
};
struct NonspanningSharpDescriptor {
  int r;
  int k;
  std::vector<std::size_t> class_sizes;
  bool operator==(const NonspanningSharpDescriptor&) const = default;
};
using ConstructionDescriptor =
    std::variant<BasicDescriptor, GeneralDescriptor, NonspanningSharpDescriptor>;

class ColorRule {
 public:
  virtual ~ColorRule() = default;
  // `edge` is a sorted edge of the host.
  virtual Color color(std::span<const Vertex> edge) const = 0;
};

// The edges of a host in enumeration order, with a reverse index.
class EdgeTable {
 public:
  explicit EdgeTable(const Hypergraph& host);

  std::size_t size() const noexcept { return flat_.size() / r_; }
  int r() const noexcept { return r_; }
  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  std::optional<std::size_t> index_of(std::span<const Vertex> sorted_edge) const;
  // Edge indices incident to each vertex.
  std::vector<std::vector<std::uint32_t>> incidence(std::size_t vertex_count) const;

 private:
  int r_;
  std::vector<Vertex> flat_;
  std::unordered_map<Edge, std::uint32_t, EdgeHash> index_;
};

// An assignment of colors in [k] to every edge of a host, either computed on
// demand by a rule or stored in a table aligned with an EdgeTable.
class EdgeColoring {
 public:
  EdgeColoring(std::shared_ptr<const Hypergraph> host, int k,
               std::shared_ptr<const ColorRule> rule,
               std::optional<ConstructionDescriptor> descriptor = std::nullopt);
  EdgeColoring(std::shared_ptr<const Hypergraph> host, int k,
               std::shared_ptr<const EdgeTable> table, std::vector<Color> colors);

  // Table-backed coloring from an explicit edge list; every host edge must
  // appear exactly once.
  static EdgeColoring from_edges(std::shared_ptr<const Hypergraph> host, int k,
                                 std::span<const std::pair<Edge, Color>> colored);

  const Hypergraph& host() const noexcept { return *host_; }
  std::shared_ptr<const Hypergraph> host_ptr() const noexcept { return host_; }
  const PartiteStructure& structure() const noexcept { return host_->structure(); }
  int num_colors() const noexcept { return k_; }

  bool is_rule_backed() const noexcept { return rule_ != nullptr; }
  const std::optional<ConstructionDescriptor>& descriptor() const noexcept { return descriptor_; }
  std::shared_ptr<const ColorRule> rule() const noexcept { return rule_; }

  // Table access; empty/null for rule-backed colorings.
  std::shared_ptr<const EdgeTable> table() const noexcept { return table_; }
  std::span<const Color> table_colors() const noexcept { return colors_; }
  void set_table_color(std::size_t index, Color c);

  // Color of a sorted vertex list, 0 when it is not an edge of the host.
  Color color_of(std::span<const Vertex> sorted_edge) const;

  void for_each_edge(const std::function<void(std::span<const Vertex>, Color)>& fn) const;

  // used[c] for c in 1..k (index 0 unused).
  std::vector<bool> used_colors() const;

  EdgeColoring materialize() const;

 private:
  std::shared_ptr<const Hypergraph> host_;
  int k_;
  std::shared_ptr<const ColorRule> rule_;
  std::optional<ConstructionDescriptor> descriptor_;
  std::shared_ptr<const EdgeTable> table_;
  std::vector<Color> colors_;
};

}  // namespace mcover
