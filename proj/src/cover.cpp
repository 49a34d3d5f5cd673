#include "mcover/cover.hpp"

#include <algorithm>
#include <limits>

namespace mcover {

VertexSet cover_union(const ComponentDecomposition& d, const Cover& cover) {
  VertexSet u(d.vertex_count());
  for (const ComponentRef& ref : cover.components) u |= d.component(ref).vertices;
  return u;
}

bool covers(const ComponentDecomposition& d, const Cover& cover) {
  return cover_union(d, cover).all();
}

namespace {

struct Indexed {
  std::vector<ComponentRef> refs;
  std::vector<const VertexSet*> sets;
};

Indexed index_components(const ComponentDecomposition& d) {
  Indexed out;
  out.refs = d.refs();
  for (const auto& ref : out.refs) out.sets.push_back(&d.component(ref).vertices);
  return out;
}

[[noreturn]] void throw_uncoverable(const VertexSet& covered) {
  throw InputError("vertex " + std::to_string((~covered).find_first()) +
                   " lies in no monochromatic component");
}

class BranchAndBound {
 public:
  BranchAndBound(const ComponentDecomposition& d, const Indexed& idx, Cover incumbent)
      : n_(d.vertex_count()), idx_(idx), best_(std::move(incumbent)) {
    containing_.resize(n_);
    for (std::size_t i = 0; i < idx_.sets.size(); ++i) {
      const VertexSet& s = *idx_.sets[i];
      for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        containing_[v].push_back(i);
      }
    }
  }

  void run() {
    std::vector<std::size_t> chosen;
    search(VertexSet(n_), chosen);
  }

  const Cover& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(const VertexSet& covered, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (covered.all()) {
      if (chosen.size() < best_.size()) {
        best_.components.clear();
        for (std::size_t i : chosen) best_.components.push_back(idx_.refs[i]);
      }
      return;
    }
    const std::size_t depth = chosen.size();
    if (depth + 1 >= best_.size()) return;

    const VertexSet uncovered = ~covered;
    std::size_t max_gain = 0;
    for (const VertexSet* s : idx_.sets) max_gain = std::max(max_gain, (*s & uncovered).count());
    const std::size_t remaining = uncovered.count();
    const std::size_t lower = (remaining + max_gain - 1) / max_gain;
    if (depth + lower >= best_.size()) return;

    const auto v = uncovered.find_first();
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (gain, index)
    for (std::size_t i : containing_[v]) order.emplace_back((*idx_.sets[i] & uncovered).count(), i);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, i] : order) {
      chosen.push_back(i);
      search(covered | *idx_.sets[i], chosen);
      chosen.pop_back();
      if (depth + 1 >= best_.size()) return;
    }
  }

  std::size_t n_;
  const Indexed& idx_;
  Cover best_;
  std::vector<std::vector<std::size_t>> containing_;
  std::uint64_t nodes_ = 0;
};

std::uint64_t binomial_capped(std::size_t n, std::size_t m, std::uint64_t cap) {
  if (m > n) return 0;
  m = std::min(m, n - m);
  unsigned __int128 out = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    out = out * (n - m + i) / i;
    if (out > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(out);
}

}  // namespace

GreedyCover min_cover_greedy(const ComponentDecomposition& d) {
  const Indexed idx = index_components(d);
  VertexSet covered(d.vertex_count());
  Cover cover;
  while (!covered.all()) {
    std::size_t best_gain = 0;
    std::size_t best = 0;
    const VertexSet uncovered = ~covered;
    for (std::size_t i = 0; i < idx.sets.size(); ++i) {
      const std::size_t gain = (*idx.sets[i] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) throw_uncoverable(covered);
    covered |= *idx.sets[best];
    cover.components.push_back(idx.refs[best]);
  }
  return {static_cast<int>(cover.size()), std::move(cover)};
}

ExactCover min_cover_exact(const ComponentDecomposition& d, const SolverOptions& opts) {
  if (d.component_count() > opts.component_limit) {
    throw ResourceError(std::to_string(d.component_count()) + " components exceed the limit of " +
                        std::to_string(opts.component_limit) + "; use greedy mode");
  }
  const Indexed idx = index_components(d);
  GreedyCover greedy = min_cover_greedy(d);
  BranchAndBound bnb(d, idx, greedy.cover);
  bnb.run();
  ExactCover out;
  out.cover = bnb.best();
  std::sort(out.cover.components.begin(), out.cover.components.end());
  out.size = static_cast<int>(out.cover.size());
  out.nodes = bnb.nodes();
  out.certificate.cover = out.cover;
  out.certificate.covers = covers(d, out.cover);
  out.certificate.no_cover_up_to = out.size - 1;
  return out;
}

NoCoverResult no_cover_of_size(const ComponentDecomposition& d, int m, const SolverOptions& opts) {
  if (m < 0) throw InputError("subset size must be nonnegative");
  const Indexed idx = index_components(d);
  const std::size_t total = idx.sets.size();
  NoCoverResult out{true, std::nullopt, 0};
  if (m == 0) return out;
  if (static_cast<std::size_t>(m) >= total) {
    Cover all{idx.refs};
    out.subsets_checked = 1;
    if (covers(d, all)) {
      out.none_cover = false;
      out.witness = std::move(all);
    }
    return out;
  }
  const std::uint64_t count = binomial_capped(total, m, opts.subset_budget);
  if (count > opts.subset_budget) {
    throw ResourceError("C(" + std::to_string(total) + ", " + std::to_string(m) +
                        ") subsets exceed the budget");
  }
  // prefix[j] holds the union of the first j chosen components.
  std::vector<VertexSet> prefix(m + 1, VertexSet(d.vertex_count()));
  std::vector<std::size_t> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  for (int j = 0; j < m; ++j) prefix[j + 1] = prefix[j] | *idx.sets[pick[j]];
  while (true) {
    ++out.subsets_checked;
    if (prefix[m].all()) {
      out.none_cover = false;
      Cover w;
      for (std::size_t i : pick) w.components.push_back(idx.refs[i]);
      out.witness = std::move(w);
      return out;
    }
    int pos = m - 1;
    while (pos >= 0 && pick[pos] == total - m + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    for (int j = pos; j < m; ++j) prefix[j + 1] = prefix[j] | *idx.sets[pick[j]];
  }
  return out;
}

int bound_formula(int r, int ell, int k) {
  if (ell < 1 || ell > r) throw InputError("ell must lie in [1, r]");
  if (k < 1 + r - ell) throw InputError("k must be at least 1 + r - ell");
  return 1 + (k - r + ell - 1) / ell;
}

int proved_upper_bound(int r, int ell, int k) {
  if (k <= r || k < 1 + r - ell) return 1;
  if (ell == 1 && k >= 2 * r) return k - r + 2;
  return bound_formula(r, ell, k);
}

}  // namespace mcover
