#include "mcover/dual.hpp"

#include <algorithm>
#include <map>

namespace mcover {

std::size_t DualInstance::class_size(Color c) const {
  return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(),
                                                [c](const ComponentRef& ref) { return ref.color == c; }));
}

DualInstance build_dual(const EdgeColoring& coloring, const ComponentDecomposition& d,
                        const DualOptions& opts) {
  const auto sp = is_spanning(coloring, d);
  if (!sp.spanning && !opts.allow_nonspanning) {
    throw InputError("dual needs a spanning coloring; vertex " + std::to_string(sp.witness->first) +
                     " misses color " + std::to_string(sp.witness->second));
  }
  DualInstance dual;
  dual.k = d.num_colors();
  dual.r = coloring.structure().r();
  // Dual vertex numbering follows (color, serial).
  std::map<ComponentRef, std::uint32_t> id;
  for (const ComponentRef& ref : d.refs()) {
    id.emplace(ref, static_cast<std::uint32_t>(dual.vertices.size()));
    dual.vertices.push_back(ref);
  }
  const std::size_t n = d.vertex_count();
  dual.edges.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::uint32_t> edge;
    for (Color c = 1; c <= dual.k; ++c) {
      const Serial s = d.serial(v, c);
      if (s != kIsolated) edge.push_back(id.at({c, s}));
    }
    dual.edges.push_back(std::move(edge));
    dual.edge_class.push_back(coloring.structure().class_of(v));
  }
  return dual;
}

namespace {

struct Deduped {
  std::vector<VertexSet> sets;
  std::vector<std::uint32_t> representative;  // original dual edge id
};

Deduped dedupe(const DualInstance& dual, const std::vector<std::uint32_t>& edge_ids) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  for (std::uint32_t e : edge_ids) seen.emplace(dual.edges[e], e);
  Deduped out;
  for (const auto& [members, rep] : seen) {
    VertexSet s(dual.vertices.size());
    for (std::uint32_t x : members) s.set(x);
    out.sets.push_back(std::move(s));
    out.representative.push_back(rep);
  }
  return out;
}

}  // namespace

IntersectionCheck verify_r_wise_intersection(const DualInstance& dual) {
  std::vector<Deduped> classes;
  for (int cls = 0; cls < dual.r; ++cls) {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t e = 0; e < dual.edges.size(); ++e) {
      if (dual.edge_class[e] == cls) ids.push_back(e);
    }
    classes.push_back(dedupe(dual, ids));
    if (classes.back().sets.empty()) return {true, std::nullopt};
  }
  std::vector<std::size_t> pick(dual.r, 0);
  std::optional<std::vector<std::uint32_t>> witness;
  // Depth-first over one edge per class, carrying the running intersection.
  auto descend = [&](auto&& self, int depth, const VertexSet& common) -> bool {
    if (common.none()) {
      std::vector<std::uint32_t> w;
      for (int c = 0; c < dual.r; ++c) {
        w.push_back(classes[c].representative[c < depth ? pick[c] : 0]);
      }
      witness = std::move(w);
      return false;
    }
    if (depth == dual.r) return true;
    for (std::size_t i = 0; i < classes[depth].sets.size(); ++i) {
      pick[depth] = i;
      if (!self(self, depth + 1, common & classes[depth].sets[i])) return false;
    }
    return true;
  };
  VertexSet all(dual.vertices.size());
  all.set();
  const bool holds = descend(descend, 0, all);
  return {holds, holds ? std::nullopt : witness};
}

Transversal tau(const DualInstance& dual, std::size_t vertex_limit, std::uint64_t node_budget) {
  if (dual.vertices.size() > vertex_limit) {
    throw ResourceError(std::to_string(dual.vertices.size()) +
                        " dual vertices exceed the limit of " + std::to_string(vertex_limit));
  }
  std::vector<std::uint32_t> all_ids(dual.edges.size());
  for (std::uint32_t i = 0; i < all_ids.size(); ++i) all_ids[i] = i;
  const Deduped edges = dedupe(dual, all_ids);
  const std::size_t m = edges.sets.size();
  for (const VertexSet& e : edges.sets) {
    if (e.none()) throw InputError("a dual edge is empty, so no transversal exists");
  }
  // hits[x]: the deduplicated edges containing dual vertex x.
  std::vector<VertexSet> hits(dual.vertices.size(), VertexSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    const VertexSet& e = edges.sets[i];
    for (auto x = e.find_first(); x != VertexSet::npos; x = e.find_next(x)) hits[x].set(i);
  }

  Transversal out{0, {}, 0};
  std::vector<std::uint32_t> chosen;
  auto search = [&](auto&& self, const VertexSet& met, std::size_t budget) -> bool {
    if (++out.nodes > node_budget) throw ResourceError("transversal search exceeded its node budget");
    if (met.all()) return true;
    if (budget == 0) return false;
    const auto first = (~met).find_first();
    const VertexSet& e = edges.sets[first];
    for (auto x = e.find_first(); x != VertexSet::npos; x = e.find_next(x)) {
      chosen.push_back(static_cast<std::uint32_t>(x));
      if (self(self, met | hits[x], budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= dual.vertices.size(); ++size) {
    chosen.clear();
    if (search(search, VertexSet(m), size)) {
      out.size = static_cast<int>(size);
      out.vertices = chosen;
      std::sort(out.vertices.begin(), out.vertices.end());
      return out;
    }
  }
  throw InputError("dual has no transversal");
}

}  // namespace mcover
