#include "mcover/partite.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mcover {

PartiteStructure::PartiteStructure(int r, int ell, std::vector<std::size_t> class_sizes)
    : r_(r), ell_(ell), sizes_(std::move(class_sizes)) {
  if (r_ < 3) throw InputError("r must be at least 3, got " + std::to_string(r_));
  if (ell_ < 1 || ell_ > r_) {
    throw InputError("ell must lie in [1, r], got " + std::to_string(ell_));
  }
  if (static_cast<int>(sizes_.size()) != r_) {
    throw InputError("expected " + std::to_string(r_) + " class sizes, got " +
                     std::to_string(sizes_.size()));
  }
  std::size_t n = 0;
  for (std::size_t sz : sizes_) {
    if (sz == 0) throw InputError("vertex classes must be nonempty");
    n += sz;
  }
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("too many vertices");
  begin_.reserve(r_);
  class_of_.reserve(n);
  Vertex next = 0;
  for (int c = 0; c < r_; ++c) {
    begin_.push_back(next);
    class_of_.insert(class_of_.end(), sizes_[c], c);
    next += static_cast<Vertex>(sizes_[c]);
  }
}

std::vector<int> PartiteStructure::class_counts(std::span<const Vertex> vs) const {
  std::vector<int> counts(r_, 0);
  for (Vertex v : vs) ++counts[class_of(v)];
  return counts;
}

Edge::Edge(std::vector<Vertex> vs) : vertices(std::move(vs)) {
  std::sort(vertices.begin(), vertices.end());
}

Edge::Edge(std::span<const Vertex> vs) : Edge(std::vector<Vertex>(vs.begin(), vs.end())) {}

std::size_t EdgeHash::operator()(std::span<const Vertex> vs) const noexcept {
  // FNV-1a over the ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (Vertex v : vs) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  return (*this)(std::span<const Vertex>(e.vertices));
}

bool is_valid_edge(const PartiteStructure& s, std::span<const Vertex> vs) {
  if (static_cast<int>(vs.size()) != s.r()) {
    throw InputError("edge must list exactly " + std::to_string(s.r()) + " vertices");
  }
  for (Vertex v : vs) {
    if (v >= s.vertex_count()) throw InputError("vertex id out of range: " + std::to_string(v));
  }
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int c : s.class_counts(vs)) {
    if (c > s.ell()) return false;
  }
  return true;
}

EdgeKind classify_edge(const PartiteStructure& s, std::span<const Vertex> edge) {
  if (!is_valid_edge(s, edge)) throw InputError("classify_edge: not a valid edge");
  int at_cap = 0;
  for (int c : s.class_counts(edge)) at_cap += (c == s.ell());
  return at_cap <= 1 ? EdgeKind::kFriendly : EdgeKind::kUnfriendly;
}

void DeletedEdgeSet::insert(const PartiteStructure& s, Edge e) {
  if (!is_valid_edge(s, e.vertices)) throw InputError("deleted edge is not a valid edge");
  if (classify_edge(s, e.vertices) == EdgeKind::kFriendly) {
    throw InputError("friendly edges cannot be deleted from a rich host");
  }
  edges_.insert(std::move(e));
}

bool DeletedEdgeSet::contains(std::span<const Vertex> edge) const {
  if (edges_.empty()) return false;
  return edges_.count(Edge(edge)) > 0;
}

std::vector<Edge> DeletedEdgeSet::sorted() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first lexicographic enumeration. `max_at_cap` bounds the number of
// classes met in exactly ell vertices (r for complete, 1 for semicomplete).
class EdgeEnumerator {
 public:
  EdgeEnumerator(const PartiteStructure& s, const DeletedEdgeSet& deleted, int max_at_cap,
                 const std::function<void(std::span<const Vertex>)>& fn)
      : s_(s), deleted_(deleted), max_at_cap_(max_at_cap), fn_(fn),
        current_(s.r()), counts_(s.r(), 0) {
    // suffix_cap_[v]: most vertices an edge can take from ids >= v.
    const std::size_t n = s.vertex_count();
    suffix_cap_.assign(n + 1, 0);
    for (std::size_t v = n; v-- > 0;) {
      const int cls = s.class_of(static_cast<Vertex>(v));
      const std::size_t in_class_from_v = s.class_end(cls) - v;
      const std::size_t cap = std::min<std::size_t>(in_class_from_v, s.ell());
      // Only count class cls once: at its first vertex >= v.
      const std::size_t later = s.class_end(cls) < n ? suffix_cap_[s.class_end(cls)] : 0;
      suffix_cap_[v] = later + cap;
    }
  }

  void run() { descend(0, 0); }

 private:
  void descend(int depth, Vertex start) {
    const int r = s_.r();
    if (depth == r) {
      if (!deleted_.contains(current_)) fn_(current_);
      return;
    }
    const Vertex n = static_cast<Vertex>(s_.vertex_count());
    const std::size_t need = static_cast<std::size_t>(r - depth);
    Vertex v = start;
    while (v < n) {
      if (suffix_cap_[v] < need) return;
      const int cls = s_.class_of(v);
      if (counts_[cls] == s_.ell()) {
        v = s_.class_end(cls);
        continue;
      }
      const bool reaches_cap = counts_[cls] + 1 == s_.ell();
      if (reaches_cap && at_cap_ == max_at_cap_) {
        v = s_.class_end(cls);
        continue;
      }
      current_[depth] = v;
      ++counts_[cls];
      at_cap_ += reaches_cap;
      descend(depth + 1, v + 1);
      at_cap_ -= reaches_cap;
      --counts_[cls];
      ++v;
    }
  }

  const PartiteStructure& s_;
  const DeletedEdgeSet& deleted_;
  int max_at_cap_;
  const std::function<void(std::span<const Vertex>)>& fn_;
  std::vector<Vertex> current_;
  std::vector<int> counts_;
  int at_cap_ = 0;
  std::vector<std::size_t> suffix_cap_;
};

int max_at_cap_for(const PartiteStructure& s, HostKind kind) {
  return kind == HostKind::kComplete ? s.r() : 1;
}

using u128 = unsigned __int128;

std::uint64_t checked(u128 x) {
  if (x > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("edge count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(x);
}

u128 binom(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  u128 out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

void for_each_edge(const PartiteStructure& s, const DeletedEdgeSet& deleted,
                   const std::function<void(std::span<const Vertex>)>& fn) {
  EdgeEnumerator(s, deleted, s.r(), fn).run();
}

std::vector<Edge> edges(const PartiteStructure& s, const DeletedEdgeSet& deleted) {
  std::vector<Edge> out;
  for_each_edge(s, deleted, [&](std::span<const Vertex> e) {
    out.push_back(Edge{std::vector<Vertex>(e.begin(), e.end())});
  });
  return out;
}

std::uint64_t count_edges(const PartiteStructure& s) {
  return count_edges(s, HostKind::kComplete);
}

std::uint64_t count_edges(const PartiteStructure& s, HostKind kind) {
  const int r = s.r();
  const int ell = s.ell();
  const int max_at_cap = max_at_cap_for(s, kind);
  // ways[j][a]: j vertices chosen so far, a classes at exactly ell.
  std::vector<std::vector<u128>> ways(r + 1, std::vector<u128>(r + 1, 0));
  ways[0][0] = 1;
  for (std::size_t size : s.class_sizes()) {
    std::vector<std::vector<u128>> next(r + 1, std::vector<u128>(r + 1, 0));
    for (int j = 0; j <= r; ++j) {
      for (int a = 0; a <= max_at_cap; ++a) {
        if (ways[j][a] == 0) continue;
        for (int c = 0; c <= ell && j + c <= r; ++c) {
          const int a2 = a + (c == ell);
          if (a2 > max_at_cap) continue;
          next[j + c][a2] += ways[j][a] * binom(size, c);
          checked(next[j + c][a2]);
        }
      }
    }
    ways = std::move(next);
  }
  u128 total = 0;
  for (int a = 0; a <= max_at_cap; ++a) total += ways[r][a];
  return checked(total);
}

Hypergraph::Hypergraph(PartiteStructure s, HostKind kind, DeletedEdgeSet deleted)
    : structure_(std::move(s)), kind_(kind), deleted_(std::move(deleted)) {}

bool Hypergraph::contains(std::span<const Vertex> sorted_vs) const {
  const auto& s = structure_;
  if (static_cast<int>(sorted_vs.size()) != s.r()) return false;
  for (std::size_t i = 0; i < sorted_vs.size(); ++i) {
    if (sorted_vs[i] >= s.vertex_count()) return false;
    if (i > 0 && sorted_vs[i] <= sorted_vs[i - 1]) return false;
  }
  int at_cap = 0;
  for (int c : s.class_counts(sorted_vs)) {
    if (c > s.ell()) return false;
    at_cap += (c == s.ell());
  }
  if (at_cap > max_at_cap_for(s, kind_)) return false;
  return !deleted_.contains(sorted_vs);
}

void Hypergraph::for_each_edge(const std::function<void(std::span<const Vertex>)>& fn) const {
  EdgeEnumerator(structure_, deleted_, max_at_cap_for(structure_, kind_), fn).run();
}

std::uint64_t Hypergraph::edge_count() const {
  std::uint64_t total = count_edges(structure_, kind_);
  if (kind_ == HostKind::kComplete) return total - deleted_.size();
  // Deleted edges are unfriendly, so none of them is in a semicomplete host.
  return total;
}

Hypergraph Hypergraph::with_deleted(std::span<const Edge> extra) const {
  DeletedEdgeSet d = deleted_;
  for (const Edge& e : extra) d.insert(structure_, e);
  return Hypergraph(structure_, kind_, std::move(d));
}

}  // namespace mcover
