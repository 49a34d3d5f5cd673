#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond its data types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mcover/coloring.hpp"
#include "mcover/components.hpp"

namespace oracle {

using mcover::Color;
using mcover::Vertex;
using VSet = std::set<Vertex>;

// Every r-subset of the vertex set, in lexicographic order, kept when each
// class meets it in at most ell vertices (semicomplete: and at most one class
// at exactly ell).
inline std::vector<std::vector<Vertex>> edges(const mcover::PartiteStructure& s,
                                              mcover::HostKind kind = mcover::HostKind::kComplete) {
  const int n = static_cast<int>(s.vertex_count());
  const int r = s.r();
  std::vector<std::vector<Vertex>> out;
  if (r > n) return out;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> per(r, 0);
    for (int i : idx) per[s.class_of(i)]++;
    const bool capped = std::all_of(per.begin(), per.end(), [&](int c) { return c <= s.ell(); });
    const int at_cap = static_cast<int>(std::count(per.begin(), per.end(), s.ell()));
    if (capped && (kind == mcover::HostKind::kComplete || at_cap <= 1)) {
      out.emplace_back(idx.begin(), idx.end());
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Monochromatic components by graph search over an explicit edge list.
// Result[c-1] lists the color-c components ordered by smallest vertex.
inline std::vector<std::vector<VSet>> components(const mcover::EdgeColoring& coloring) {
  const std::size_t n = coloring.structure().vertex_count();
  const int k = coloring.num_colors();
  std::vector<std::vector<std::vector<Vertex>>> adj(k, std::vector<std::vector<Vertex>>(n));
  coloring.for_each_edge([&](std::span<const Vertex> e, Color c) {
    for (Vertex a : e) {
      for (Vertex b : e) {
        if (a != b) adj[c - 1][a].push_back(b);
      }
    }
  });
  std::vector<std::vector<VSet>> out(k);
  for (int c = 0; c < k; ++c) {
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v] || adj[c][v].empty()) continue;
      VSet comp;
      std::vector<Vertex> stack{v};
      seen[v] = true;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        comp.insert(x);
        for (Vertex y : adj[c][x]) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      out[c].push_back(std::move(comp));
    }
  }
  return out;
}

inline std::vector<VSet> flatten(const std::vector<std::vector<VSet>>& by_color) {
  std::vector<VSet> all;
  for (const auto& cs : by_color) all.insert(all.end(), cs.begin(), cs.end());
  return all;
}

// Smallest number of sets whose union is {0..n-1}, trying sizes 1, 2, ...
// up to `max_size`; returns -1 when none fits.
inline int min_cover(const std::vector<VSet>& sets, std::size_t n, int max_size) {
  const int m = static_cast<int>(sets.size());
  for (int size = 1; size <= std::min(max_size, m); ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<bool> hit(n, false);
      for (int i : idx) {
        for (Vertex v : sets[i]) hit[v] = true;
      }
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return size;
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return -1;
}

inline int min_cover(const mcover::EdgeColoring& coloring, int max_size) {
  return min_cover(flatten(components(coloring)), coloring.structure().vertex_count(), max_size);
}

// Direct reading of the labelled construction: V_1 carries the q-subsets of
// [k'] in lexicographic order, each later class is split into k' blocks of
// C(k'-1, q-1) vertices with block i labelled {i}. Returns the color of a
// sorted edge.
class LabelOracle {
 public:
  LabelOracle(int r, int ell, int q) : r_(r), ell_(ell), q_(q), kp_(q * ell + r - ell + 1) {
    std::vector<int> pick(kp_, 0);
    std::fill(pick.begin(), pick.begin() + q, 1);
    do {
      std::set<int> label;
      for (int i = 0; i < kp_; ++i) {
        if (pick[i]) label.insert(i + 1);
      }
      v1_.push_back(label);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    block_ = 1;
    for (int i = 1; i <= q - 1; ++i) block_ = block_ * (kp_ - 1 - q + 1 + i) / i;
  }

  int colors() const { return kp_; }
  std::size_t v1_size() const { return v1_.size(); }
  std::size_t block() const { return block_; }

  std::set<int> label(Vertex v) const {
    if (v < v1_.size()) return v1_[v];
    const std::size_t offset = (v - v1_.size()) % (kp_ * block_);
    return {static_cast<int>(offset / block_) + 1};
  }

  Color color(const std::vector<Vertex>& e) const {
    // Special: one vertex per class, V_1 vertex is the p-th label holding i,
    // and every other vertex is the p-th of its block A_j^i.
    const std::size_t per_class = kp_ * block_;
    std::vector<int> cls(e.size());
    for (std::size_t x = 0; x < e.size(); ++x) {
      cls[x] = e[x] < v1_.size() ? 0 : 1 + static_cast<int>((e[x] - v1_.size()) / per_class);
    }
    bool one_each = true;
    for (int c = 0; c < r_; ++c) one_each = one_each && std::count(cls.begin(), cls.end(), c) == 1;
    if (one_each) {
      const Vertex v1 = e[0];
      for (int i : v1_[v1]) {
        std::size_t p = 0;
        for (Vertex u = 0; u < v1; ++u) p += v1_[u].count(i);
        bool special = true;
        for (std::size_t x = 1; x < e.size(); ++x) {
          const std::size_t offset = (e[x] - v1_.size()) % per_class;
          special = special && offset == (i - 1) * block_ + p;
        }
        if (special) return i;
      }
    }
    std::set<int> used;
    for (Vertex v : e) {
      const auto l = label(v);
      used.insert(l.begin(), l.end());
    }
    for (int c = 1;; ++c) {
      if (!used.count(c)) return c;
    }
  }

 private:
  int r_, ell_, q_, kp_;
  std::size_t block_;
  std::vector<std::set<int>> v1_;
};

}  // namespace oracle
