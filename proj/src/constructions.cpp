#include "mcover/constructions.hpp"

#include <bit>
#include <limits>
#include <memory>

namespace mcover {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  unsigned __int128 out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (out > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("binomial overflow");
  }
  return static_cast<std::uint64_t>(out);
}

namespace {

// q-subsets of [n] as bitmasks, in lexicographic order of sorted tuples.
std::vector<std::uint64_t> subsets_lex(int n, int q) {
  std::vector<std::uint64_t> out;
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    int pos = q - 1;
    while (pos >= 0 && idx[pos] == n - q + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

constexpr std::size_t kMaxVertices = 5'000'000;

}  // namespace

LabelledConstruction::LabelledConstruction(int r, int ell, int q, int colors)
    : r_(r), ell_(ell), q_(q), colors_(colors) {
  if (colors_ < 2 || colors_ > 63) throw InputError("construction color count out of range");
  if (q_ < 1 || q_ >= colors_) throw InputError("construction label size out of range");
  block_ = binomial(colors_ - 1, q_ - 1);
  const std::size_t v1 = binomial(colors_, q_);
  const std::size_t vj = static_cast<std::size_t>(colors_) * block_;
  if (v1 + (r_ - 1) * vj > kMaxVertices) throw ResourceError("construction is too large");
  sizes_.assign(r_, vj);
  sizes_[0] = v1;

  const auto subsets = subsets_lex(colors_, q_);
  w_members_.assign(colors_, {});
  rank_in_w_.assign(v1 * colors_, -1);
  label_.reserve(v1 + (r_ - 1) * vj);
  for (std::size_t v = 0; v < v1; ++v) {
    label_.push_back(subsets[v]);
    for (int i = 0; i < colors_; ++i) {
      if (subsets[v] >> i & 1) {
        rank_in_w_[v * colors_ + i] = static_cast<std::int64_t>(w_members_[i].size());
        w_members_[i].push_back(static_cast<Vertex>(v));
      }
    }
  }
  for (int j = 1; j < r_; ++j) {
    for (std::size_t off = 0; off < vj; ++off) {
      label_.push_back(std::uint64_t{1} << (off / block_));
    }
  }
}

std::vector<Edge> LabelledConstruction::special_edges(Color i) const {
  if (i < 1 || i > colors_) throw InputError("color out of range");
  std::vector<Edge> out;
  const auto& w = w_members_[i - 1];
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::vector<Vertex> e{w[p]};
    std::size_t base = sizes_[0];
    for (int j = 1; j < r_; ++j) {
      e.push_back(static_cast<Vertex>(base + (i - 1) * block_ + p));
      base += sizes_[j];
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

Color LabelledConstruction::color(std::span<const Vertex> edge) const {
  // Special edges take one vertex from each class, so edge[j] lies in class j.
  const std::size_t v1 = sizes_[0];
  const std::size_t vj = sizes_[1];
  bool transversal = edge[0] < v1;
  for (int j = 1; transversal && j < r_; ++j) {
    const std::size_t lo = v1 + (j - 1) * vj;
    transversal = edge[j] >= lo && edge[j] < lo + vj;
  }
  if (transversal) {
    const std::size_t off = edge[1] - v1;
    const std::size_t block = off / block_;
    const std::size_t pos = off % block_;
    bool same = true;
    for (int j = 2; same && j < r_; ++j) {
      same = edge[j] - (v1 + (j - 1) * vj) == off;
    }
    if (same && rank_in_w_[edge[0] * colors_ + block] == static_cast<std::int64_t>(pos)) {
      return static_cast<Color>(block + 1);
    }
  }
  std::uint64_t forbidden = 0;
  for (Vertex v : edge) forbidden |= label_[v];
  const int c = std::countr_one(forbidden) + 1;
  if (c > colors_) {
    throw AnomalyError("construction rule found no free color", "edge forbids every color");
  }
  return c;
}

BasicParams basic_params(int r, int t) {
  if (r < 3) throw InputError("r must be at least 3");
  if (t < 1) throw InputError("t must be at least 1");
  const int k = r + t;
  std::vector<std::size_t> sizes(r, static_cast<std::size_t>(k) * binomial(k - 1, t - 1));
  sizes[0] = binomial(k, t);
  return {r, t, k, std::move(sizes)};
}

GeneralParams general_params(int r, int ell, int k) {
  if (r < 3) throw InputError("r must be at least 3");
  if (ell < 1 || ell > r) throw InputError("ell must lie in [1, r]");
  if (k < r + 1) throw InputError("k must be at least r + 1");
  const int q = (k - r + ell - 1) / ell;
  const int kp = q * ell + r - ell + 1;
  if (kp > k) throw InputError("derived color count exceeds k");
  std::vector<std::size_t> sizes(r, static_cast<std::size_t>(kp) * binomial(kp - 1, q - 1));
  sizes[0] = binomial(kp, q);
  return {r, ell, k, q, kp, std::move(sizes)};
}

EdgeColoring build_nonspanning_sharp(int r, int k, std::vector<std::size_t> class_sizes) {
  if (class_sizes.empty() || class_sizes[0] != static_cast<std::size_t>(k)) {
    throw InputError("nonspanning-sharp needs |V_1| = k");
  }
  struct FirstClassRule final : ColorRule {
    Color color(std::span<const Vertex> edge) const override {
      return static_cast<Color>(edge[0]) + 1;
    }
  };
  NonspanningSharpDescriptor desc{r, k, class_sizes};
  auto host = std::make_shared<const Hypergraph>(PartiteStructure(r, 1, std::move(class_sizes)));
  return EdgeColoring(std::move(host), k, std::make_shared<FirstClassRule>(), desc);
}

EdgeColoring build_basic(int r, int t) {
  const BasicParams p = basic_params(r, t);
  auto rule = std::make_shared<LabelledConstruction>(r, 1, t, p.k);
  auto host = std::make_shared<const Hypergraph>(PartiteStructure(r, 1, p.class_sizes));
  return EdgeColoring(std::move(host), p.k, std::move(rule), BasicDescriptor{r, t});
}

EdgeColoring build_general(int r, int ell, int k, HostKind host_kind) {
  const GeneralParams p = general_params(r, ell, k);
  if (host_kind == HostKind::kSemicomplete && ell == 1) {
    throw InputError("the semicomplete host is empty for ell = 1");
  }
  auto rule = std::make_shared<LabelledConstruction>(r, ell, p.q, p.k_prime);
  auto host =
      std::make_shared<const Hypergraph>(PartiteStructure(r, ell, p.class_sizes), host_kind);
  return EdgeColoring(std::move(host), p.k_prime, std::move(rule),
                      GeneralDescriptor{r, ell, k, host_kind});
}

EdgeColoring build(const ConstructionDescriptor& d) {
  return std::visit(
      [](const auto& x) -> EdgeColoring {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BasicDescriptor>) {
          return build_basic(x.r, x.t);
        } else if constexpr (std::is_same_v<T, GeneralDescriptor>) {
          return build_general(x.r, x.ell, x.k, x.host);
        } else {
          return build_nonspanning_sharp(x.r, x.k, x.class_sizes);
        }
      },
      d);
}

SpecialEdgeAudit special_edge_audit(const EdgeColoring& coloring) {
  return special_edge_audit(coloring, decompose(coloring));
}

SpecialEdgeAudit special_edge_audit(const EdgeColoring& coloring, const ComponentDecomposition& d) {
  auto rule = std::dynamic_pointer_cast<const LabelledConstruction>(coloring.rule());
  if (!rule) throw InputError("special_edge_audit needs a labelled construction");
  SpecialEdgeAudit report;
  const int k = coloring.num_colors();
  const std::size_t r = static_cast<std::size_t>(coloring.structure().r());
  report.small_components.assign(k, 0);
  report.large_components.assign(k, 0);
  for (Color i = 1; i <= k; ++i) {
    std::vector<bool> is_small(d.components_of(i).size(), false);
    for (const Edge& e : rule->special_edges(i)) {
      const auto fail = [&](std::string why) {
        if (report.passed) {
          report.passed = false;
          report.offending = e;
          report.message = std::move(why);
        }
      };
      if (coloring.color_of(e.vertices) != i) {
        fail("special edge not colored " + std::to_string(i));
        continue;
      }
      const Serial s = d.serial(e.vertices[0], i);
      const Component& comp = d.component({i, s});
      if (comp.vertices.count() != r) {
        fail("special edge of color " + std::to_string(i) + " lies in a component of " +
             std::to_string(comp.vertices.count()) + " vertices");
        continue;
      }
      for (Vertex v : e.vertices) {
        if (!comp.vertices.test(v)) fail("special edge split across components");
      }
      is_small[s - 1] = true;
    }
    for (bool small : is_small) (small ? report.small_components : report.large_components)[i - 1]++;
  }
  return report;
}

}  // namespace mcover
