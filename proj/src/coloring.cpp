#include "mcover/coloring.hpp"

#include <string>

namespace mcover {

EdgeTable::EdgeTable(const Hypergraph& host) : r_(host.structure().r()) {
  host.for_each_edge([&](std::span<const Vertex> e) { flat_.insert(flat_.end(), e.begin(), e.end()); });
  index_.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    index_.emplace(Edge(edge(i)), static_cast<std::uint32_t>(i));
  }
}

std::optional<std::size_t> EdgeTable::index_of(std::span<const Vertex> sorted_edge) const {
  auto it = index_.find(Edge{std::vector<Vertex>(sorted_edge.begin(), sorted_edge.end())});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::uint32_t>> EdgeTable::incidence(std::size_t vertex_count) const {
  std::vector<std::vector<std::uint32_t>> inc(vertex_count);
  for (std::size_t i = 0; i < size(); ++i) {
    for (Vertex v : edge(i)) inc[v].push_back(static_cast<std::uint32_t>(i));
  }
  return inc;
}

EdgeColoring::EdgeColoring(std::shared_ptr<const Hypergraph> host, int k,
                           std::shared_ptr<const ColorRule> rule,
                           std::optional<ConstructionDescriptor> descriptor)
    : host_(std::move(host)), k_(k), rule_(std::move(rule)), descriptor_(std::move(descriptor)) {
  if (k_ < 1) throw InputError("number of colors must be positive");
  if (!rule_) throw InputError("null coloring rule");
}

EdgeColoring::EdgeColoring(std::shared_ptr<const Hypergraph> host, int k,
                           std::shared_ptr<const EdgeTable> table, std::vector<Color> colors)
    : host_(std::move(host)), k_(k), table_(std::move(table)), colors_(std::move(colors)) {
  if (k_ < 1) throw InputError("number of colors must be positive");
  if (!table_) throw InputError("null edge table");
  if (colors_.size() != table_->size()) {
    throw InputError("color table has " + std::to_string(colors_.size()) + " entries for " +
                     std::to_string(table_->size()) + " edges");
  }
  for (Color c : colors_) {
    if (c < 1 || c > k_) throw InputError("edge color out of range: " + std::to_string(c));
  }
}

EdgeColoring EdgeColoring::from_edges(std::shared_ptr<const Hypergraph> host, int k,
                                      std::span<const std::pair<Edge, Color>> colored) {
  auto table = std::make_shared<const EdgeTable>(*host);
  std::vector<Color> colors(table->size(), 0);
  for (const auto& [e, c] : colored) {
    auto idx = table->index_of(e.vertices);
    if (!idx) throw InputError("listed edge is not an edge of the host");
    if (colors[*idx] != 0) throw InputError("edge listed twice");
    if (c < 1 || c > k) throw InputError("edge color out of range: " + std::to_string(c));
    colors[*idx] = c;
  }
  for (Color c : colors) {
    if (c == 0) throw InputError("explicit coloring leaves a host edge uncolored");
  }
  return EdgeColoring(std::move(host), k, std::move(table), std::move(colors));
}

void EdgeColoring::set_table_color(std::size_t index, Color c) {
  if (!table_) throw ContractError("set_table_color on a rule-backed coloring");
  if (c < 1 || c > k_) throw InputError("edge color out of range: " + std::to_string(c));
  colors_.at(index) = c;
}

Color EdgeColoring::color_of(std::span<const Vertex> sorted_edge) const {
  if (rule_) {
    if (!host_->contains(sorted_edge)) return 0;
    return rule_->color(sorted_edge);
  }
  auto idx = table_->index_of(sorted_edge);
  return idx ? colors_[*idx] : 0;
}

void EdgeColoring::for_each_edge(
    const std::function<void(std::span<const Vertex>, Color)>& fn) const {
  if (rule_) {
    host_->for_each_edge([&](std::span<const Vertex> e) {
      const Color c = rule_->color(e);
      if (c < 1 || c > k_) throw InputError("coloring rule produced color " + std::to_string(c));
      fn(e, c);
    });
    return;
  }
  for (std::size_t i = 0; i < table_->size(); ++i) fn(table_->edge(i), colors_[i]);
}

std::vector<bool> EdgeColoring::used_colors() const {
  std::vector<bool> used(k_ + 1, false);
  for_each_edge([&](std::span<const Vertex>, Color c) { used[c] = true; });
  return used;
}

EdgeColoring EdgeColoring::materialize() const {
  if (!rule_) return *this;
  auto table = std::make_shared<const EdgeTable>(*host_);
  std::vector<Color> colors(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) colors[i] = rule_->color(table->edge(i));
  return EdgeColoring(host_, k_, std::move(table), std::move(colors));
}

}  // namespace mcover
