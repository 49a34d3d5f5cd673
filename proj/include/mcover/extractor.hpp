#pragma once

#include <string>
#include <vector>

#include "mcover/cover.hpp"

namespace mcover {

struct TraceStep {
  enum class Kind { kEliminate, kDeleteUnfriendly, kSelect };
  Kind kind;
  int colors_before;            // colors in play at this level
  Color color;                  // original color label acted on
  std::size_t deleted_edges = 0;
  // kSelect only:
  Edge edge;                    // the friendly essential edge
  std::vector<int> class_order; // class permutation, first entry plays V_1
  std::vector<std::vector<Color>> col_sets;  // Col(e - u_j) per position j, original labels
  std::string selection;        // "c1", "c2" or "c3"
  int position = -1;            // chosen j

  std::string describe() const;
};

struct ConstructiveCover {
  Cover cover;  // refs into the decomposition of the input coloring
  std::vector<TraceStep> trace;
  int bound;    // the size the procedure guarantees for this (r, ell, k)
};

std::string describe(const std::vector<TraceStep>& trace);

// Builds a cover of a spanning coloring of a rich (r,ell)-partite host with
// ell >= 2, following the inductive essential-edge argument: drop colors
// without essential edges, delete all-unfriendly essential edges, then read
// the cover off the colors around a friendly essential edge. The result is
// re-verified against the input's own decomposition.
//
// InputError for ell = 1 or a non-spanning input; AnomalyError (with the
// trace) when any step of the argument fails at runtime.
ConstructiveCover extract_cover_constructive(const EdgeColoring& coloring);

}  // namespace mcover
