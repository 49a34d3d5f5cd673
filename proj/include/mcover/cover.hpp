#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcover/components.hpp"

namespace mcover {

struct Cover {
  std::vector<ComponentRef> components;

  std::size_t size() const noexcept { return components.size(); }
};

// Union of the referenced components, recomputed from the decomposition.
VertexSet cover_union(const ComponentDecomposition& d, const Cover& cover);
bool covers(const ComponentDecomposition& d, const Cover& cover);

struct CoverCertificate {
  std::string instance_digest;  // filled in by the file layer
  Cover cover;
  bool covers = false;
  // Set for optimality claims: no cover with at most this many components.
  std::optional<int> no_cover_up_to;
};

struct SolverOptions {
  std::size_t component_limit = 64;
  // Upper bound on subsets examined by exhaustive checks.
  std::uint64_t subset_budget = 200'000'000;
};

struct ExactCover {
  int size;
  Cover cover;
  CoverCertificate certificate;
  std::uint64_t nodes = 0;
};

// Optimal cover by branch and bound over component bitsets, seeded with the
// greedy bound. ResourceError above the component limit.
ExactCover min_cover_exact(const ComponentDecomposition& d, const SolverOptions& opts = {});

struct GreedyCover {
  int size;
  Cover cover;
};

// Repeatedly takes the component covering most uncovered vertices, ties by
// (color, serial). InputError with a witness when some vertex lies in no
// component.
GreedyCover min_cover_greedy(const ComponentDecomposition& d);

struct NoCoverResult {
  bool none_cover;
  std::optional<Cover> witness;  // a covering m-subset when none_cover is false
  std::uint64_t subsets_checked = 0;
};

// Exhaustive check over every m-subset of components (every component when
// m exceeds the count). ResourceError when C(total, m) exceeds the budget.
NoCoverResult no_cover_of_size(const ComponentDecomposition& d, int m,
                               const SolverOptions& opts = {});

// 1 + floor((k - r + ell - 1) / ell); requires k >= 1 + r - ell.
int bound_formula(int r, int ell, int k);

// The largest cover size any spanning coloring may force, as far as proved:
// bound_formula, except t + 2 for ell = 1 and k >= 2r. Returns 1 for k <= r.
int proved_upper_bound(int r, int ell, int k);

}  // namespace mcover
