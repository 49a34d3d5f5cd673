#include "mcover/components.hpp"

#include <numeric>
#include <string>

namespace mcover {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ComponentDecomposition::ComponentDecomposition(std::size_t vertex_count,
                                               std::vector<std::vector<Component>> by_color)
    : n_(vertex_count), by_color_(std::move(by_color)) {
  const std::size_t k = by_color_.size();
  if (k == 0) throw InputError("decomposition needs at least one color");
  vectors_.assign(n_ * k, kIsolated);
  for (std::size_t ci = 0; ci < k; ++ci) {
    const auto& comps = by_color_[ci];
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Component& comp = comps[i];
      if (comp.color != static_cast<Color>(ci + 1) || comp.serial != static_cast<Serial>(i + 1)) {
        throw InputError("component labels out of order");
      }
      if (comp.vertices.size() != n_ || comp.vertices.none()) {
        throw InputError("component vertex set is empty or of the wrong width");
      }
      for (auto v = comp.vertices.find_first(); v != VertexSet::npos; v = comp.vertices.find_next(v)) {
        Serial& slot = vectors_[v * k + ci];
        if (slot != kIsolated) throw InputError("components of one color overlap");
        slot = comp.serial;
      }
      ++total_;
    }
  }
}

const Component& ComponentDecomposition::component(ComponentRef ref) const {
  if (ref.color < 1 || ref.color > num_colors()) {
    throw InputError("component color out of range: " + std::to_string(ref.color));
  }
  const auto& comps = by_color_[ref.color - 1];
  if (ref.serial < 1 || ref.serial > static_cast<Serial>(comps.size())) {
    throw InputError("no component " + std::to_string(ref.serial) + " of color " +
                     std::to_string(ref.color));
  }
  return comps[ref.serial - 1];
}

std::vector<ComponentRef> ComponentDecomposition::refs() const {
  std::vector<ComponentRef> out;
  out.reserve(total_);
  for (const auto& comps : by_color_) {
    for (const auto& c : comps) out.push_back(c.ref());
  }
  return out;
}

VertexVector ComponentDecomposition::vertex_vector(Vertex v) const {
  if (v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
  const std::size_t k = by_color_.size();
  return VertexVector(vectors_.begin() + v * k, vectors_.begin() + (v + 1) * k);
}

ComponentDecomposition decompose(const EdgeColoring& coloring) {
  const std::size_t n = coloring.structure().vertex_count();
  const int k = coloring.num_colors();
  std::vector<UnionFind> forests(k, UnionFind(n));
  std::vector<std::vector<bool>> touched(k, std::vector<bool>(n, false));
  coloring.for_each_edge([&](std::span<const Vertex> e, Color c) {
    UnionFind& uf = forests[c - 1];
    auto& seen = touched[c - 1];
    for (Vertex v : e) {
      seen[v] = true;
      uf.unite(e[0], v);
    }
  });

  std::vector<std::vector<Component>> by_color(k);
  std::vector<Serial> serial_of_root(n);
  for (int ci = 0; ci < k; ++ci) {
    std::fill(serial_of_root.begin(), serial_of_root.end(), kIsolated);
    auto& comps = by_color[ci];
    for (Vertex v = 0; v < n; ++v) {
      if (!touched[ci][v]) continue;
      const Vertex root = forests[ci].find(v);
      Serial& s = serial_of_root[root];
      if (s == kIsolated) {
        comps.push_back(Component{ci + 1, static_cast<Serial>(comps.size() + 1), VertexSet(n)});
        s = comps.back().serial;
      }
      comps[s - 1].vertices.set(v);
    }
  }
  return ComponentDecomposition(n, std::move(by_color));
}

SpanningCheck is_spanning(const EdgeColoring& coloring, const ComponentDecomposition& d) {
  if (d.vertex_count() != coloring.structure().vertex_count() ||
      d.num_colors() != coloring.num_colors()) {
    throw InputError("decomposition does not match coloring");
  }
  std::vector<Color> used;
  for (Color c = 1; c <= d.num_colors(); ++c) {
    if (!d.components_of(c).empty()) used.push_back(c);
  }
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    for (Color c : used) {
      if (d.serial(v, c) == kIsolated) return {false, std::make_pair(v, c)};
    }
  }
  return {true, std::nullopt};
}

VertexVector vertex_vector(const ComponentDecomposition& d, Vertex v) {
  return d.vertex_vector(v);
}

int hamming(std::span<const Serial> u, std::span<const Serial> w) {
  if (u.size() != w.size()) throw InputError("vertex vectors differ in length");
  int diff = 0;
  for (std::size_t i = 0; i < u.size(); ++i) diff += (u[i] != w[i]);
  return diff;
}

bool in_one_component(const ComponentDecomposition& d, std::span<const Vertex> vs, Color c) {
  const Serial s = d.serial(vs[0], c);
  if (s == kIsolated) return false;
  for (Vertex v : vs.subspan(1)) {
    if (d.serial(v, c) != s) return false;
  }
  return true;
}

bool check_edge_agreement(const EdgeColoring& coloring, const ComponentDecomposition& d) {
  bool ok = true;
  coloring.for_each_edge([&](std::span<const Vertex> e, Color c) {
    if (ok && !in_one_component(d, e, c)) ok = false;
  });
  return ok;
}

namespace {

bool contained_elsewhere(const ComponentDecomposition& d, std::span<const Vertex> e, Color c) {
  for (Color other = 1; other <= d.num_colors(); ++other) {
    if (other != c && in_one_component(d, e, other)) return true;
  }
  return false;
}

}  // namespace

std::vector<Edge> essential_edges(const EdgeColoring& coloring, const ComponentDecomposition& d,
                                  Color c) {
  if (c < 1 || c > coloring.num_colors()) {
    throw InputError("color out of range: " + std::to_string(c));
  }
  std::vector<Edge> out;
  coloring.for_each_edge([&](std::span<const Vertex> e, Color ec) {
    if (ec == c && !contained_elsewhere(d, e, c)) out.emplace_back(e);
  });
  return out;
}

EdgeColoring eliminate_color(const EdgeColoring& coloring, const ComponentDecomposition& d,
                             Color c) {
  const int k = coloring.num_colors();
  if (c < 1 || c > k) throw InputError("color out of range: " + std::to_string(c));
  if (k < 2) throw ContractError("cannot eliminate the only color");
  EdgeColoring table = coloring.materialize();
  const auto& edges = *table.table();
  std::vector<Color> colors(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Color ec = table.table_colors()[i];
    const auto e = edges.edge(i);
    if (ec == c) {
      Color target = 0;
      for (Color other = 1; other <= k && target == 0; ++other) {
        if (other != c && in_one_component(d, e, other)) target = other;
      }
      if (target == 0) {
        throw ContractError("color " + std::to_string(c) + " has an essential edge");
      }
      ec = target;
    }
    colors[i] = ec > c ? ec - 1 : ec;
  }
  return EdgeColoring(coloring.host_ptr(), k - 1, table.table(), std::move(colors));
}

}  // namespace mcover
