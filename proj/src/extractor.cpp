#include "mcover/extractor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcover {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::string join(const std::vector<Color>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

// Drops `doomed` edges from a table-backed coloring's host.
EdgeColoring without_edges(const EdgeColoring& coloring, const std::vector<Edge>& doomed) {
  auto host = std::make_shared<const Hypergraph>(coloring.host().with_deleted(doomed));
  auto table = std::make_shared<const EdgeTable>(*host);
  std::vector<Color> colors(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) colors[i] = coloring.color_of(table->edge(i));
  return EdgeColoring(std::move(host), coloring.num_colors(), std::move(table), std::move(colors));
}

struct ColSet {
  std::vector<Color> colors;   // current labels, ascending
  std::vector<Serial> serials; // component of each color containing R
};

ColSet colors_around(const EdgeColoring& coloring, const ComponentDecomposition& d,
                     std::span<const Vertex> rest) {
  const std::size_t n = coloring.structure().vertex_count();
  std::set<Color> seen;
  std::vector<Vertex> candidate(rest.size() + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(rest.begin(), rest.end(), v) != rest.end()) continue;
    auto pos = std::lower_bound(rest.begin(), rest.end(), v) - rest.begin();
    std::copy(rest.begin(), rest.begin() + pos, candidate.begin());
    candidate[pos] = v;
    std::copy(rest.begin() + pos, rest.end(), candidate.begin() + pos + 1);
    const Color c = coloring.color_of(candidate);
    if (c != 0) seen.insert(c);
  }
  ColSet out;
  for (Color c : seen) {
    out.colors.push_back(c);
    out.serials.push_back(d.serial(rest[0], c));
  }
  return out;
}

}  // namespace

std::string TraceStep::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kEliminate:
      os << "eliminate color " << color << " (" << colors_before << " colors in play)";
      break;
    case Kind::kDeleteUnfriendly:
      os << "delete " << deleted_edges << " unfriendly essential edges of color " << color
         << ", then eliminate it (" << colors_before << " colors in play)";
      break;
    case Kind::kSelect: {
      os << "select edge";
      for (Vertex v : edge.vertices) os << ' ' << v;
      os << " of color " << color << "; class order";
      for (int c : class_order) os << ' ' << c + 1;
      os << "; Col sets";
      for (const auto& s : col_sets) os << ' ' << join(s);
      os << "; case " << selection << " at position " << position;
      break;
    }
  }
  return os.str();
}

std::string describe(const std::vector<TraceStep>& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) os << i + 1 << ". " << trace[i].describe() << '\n';
  return os.str();
}

ConstructiveCover extract_cover_constructive(const EdgeColoring& input) {
  const PartiteStructure& s = input.structure();
  const int r = s.r();
  const int ell = s.ell();
  if (ell < 2) throw InputError("constructive extraction needs ell >= 2");
  const ComponentDecomposition original = decompose(input);
  if (!is_spanning(input, original).spanning) {
    throw InputError("constructive extraction needs a spanning coloring");
  }

  ConstructiveCover out;
  int used = 0;
  for (Color c = 1; c <= input.num_colors(); ++c) used += !original.components_of(c).empty();
  out.bound = proved_upper_bound(r, ell, used);

  auto anomaly = [&](const std::string& what) -> AnomalyError {
    return AnomalyError(what, describe(out.trace));
  };

  // Unused colors carry no edges and are dropped up front.
  EdgeColoring current = input.materialize();
  std::vector<Color> label;  // current color -> original color
  for (Color c = 1; c <= input.num_colors(); ++c) label.push_back(c);
  {
    ComponentDecomposition d = original;
    for (Color c = current.num_colors(); c >= 1 && current.num_colors() > 1; --c) {
      if (!d.components_of(c).empty()) continue;
      current = eliminate_color(current, d, c);
      label.erase(label.begin() + (c - 1));
      d = decompose(current);
    }
  }

  const int max_levels = current.num_colors() + 1;
  for (int level = 0; level < max_levels; ++level) {
    const ComponentDecomposition d = decompose(current);
    const int k = current.num_colors();

    std::vector<std::vector<Edge>> essential(k + 1);
    for (Color c = 1; c <= k; ++c) essential[c] = essential_edges(current, d, c);

    auto eliminated = [&](Color c) {
      current = eliminate_color(current, d, c);
      label.erase(label.begin() + (c - 1));
    };

    Color no_essential = 0;
    for (Color c = 1; c <= k && !no_essential; ++c) {
      if (essential[c].empty()) no_essential = c;
    }
    if (no_essential) {
      out.trace.push_back({TraceStep::Kind::kEliminate, k, label[no_essential - 1]});
      eliminated(no_essential);
      continue;
    }

    Color unfriendly_only = 0;
    for (Color c = 1; c <= k && !unfriendly_only; ++c) {
      const bool all_unfriendly = std::all_of(essential[c].begin(), essential[c].end(), [&](const Edge& e) {
        return classify_edge(s, e.vertices) == EdgeKind::kUnfriendly;
      });
      if (all_unfriendly) unfriendly_only = c;
    }
    if (unfriendly_only) {
      const Color c = unfriendly_only;
      TraceStep step{TraceStep::Kind::kDeleteUnfriendly, k, label[c - 1]};
      step.deleted_edges = essential[c].size();
      out.trace.push_back(step);
      EdgeColoring pruned = without_edges(current, essential[c]);
      const ComponentDecomposition pd = decompose(pruned);
      if (!essential_edges(pruned, pd, c).empty()) {
        throw anomaly("deleting the essential edges left color " + std::to_string(label[c - 1]) +
                      " with essential edges");
      }
      current = eliminate_color(pruned, pd, c);
      label.erase(label.begin() + (c - 1));
      const ComponentDecomposition after = decompose(current);
      if (auto sp = is_spanning(current, after); !sp.spanning) {
        throw anomaly("coloring is not spanning after deleting unfriendly essential edges (vertex " +
                      std::to_string(sp.witness->first) + ")");
      }
      continue;
    }

    // Every color has a friendly essential edge; work with the lowest color.
    const Color base = 1;
    const Edge* chosen = nullptr;
    for (const Edge& e : essential[base]) {
      if (classify_edge(s, e.vertices) == EdgeKind::kFriendly) {
        chosen = &e;
        break;
      }
    }
    if (!chosen) throw anomaly("no friendly essential edge found");
    const Edge e = *chosen;

    TraceStep step{TraceStep::Kind::kSelect, k, label[base - 1]};
    step.edge = e;
    const std::vector<int> counts = s.class_counts(e.vertices);
    const int first = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    step.class_order.push_back(first);
    for (int c = 0; c < r; ++c) {
      if (c != first) step.class_order.push_back(c);
    }
    const int in_first = counts[first];

    std::vector<ColSet> cols;
    for (int j = 0; j < r; ++j) {
      std::vector<Vertex> rest;
      for (int i = 0; i < r; ++i) {
        if (i != j) rest.push_back(e.vertices[i]);
      }
      cols.push_back(colors_around(current, d, rest));
      std::vector<Color> orig;
      for (Color c : cols.back().colors) orig.push_back(label[c - 1]);
      step.col_sets.push_back(std::move(orig));
    }
    out.trace.push_back(step);
    TraceStep& sel = out.trace.back();

    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        std::vector<Color> common;
        std::set_intersection(cols[i].colors.begin(), cols[i].colors.end(), cols[j].colors.begin(),
                              cols[j].colors.end(), std::back_inserter(common));
        if (common != std::vector<Color>{base}) {
          throw anomaly("Col sets of positions " + std::to_string(i) + " and " + std::to_string(j) +
                        " share a color other than the edge's own");
        }
      }
    }

    auto in_v1 = [&](int j) { return s.class_of(e.vertices[j]) == first; };
    const int c1_limit = 1 + floor_div(k - 1, r);
    const int c3_limit = 1 + floor_div(k - 1 - (r - ell), ell);

    Cover local;  // refs in current labels
    int pick = -1;
    for (int j = 0; j < r; ++j) {
      const int rest_in_v1 = in_first - (in_v1(j) ? 1 : 0);
      const int size = static_cast<int>(cols[j].colors.size());
      if (rest_in_v1 < ell && size <= c1_limit &&
          (pick < 0 || size < static_cast<int>(cols[pick].colors.size()))) {
        pick = j;
      }
    }
    if (pick >= 0) {
      sel.selection = "c1";
    } else {
      if (in_first < ell) throw anomaly("pigeonhole over Col sets failed");
      for (int i = 0; i < r && pick < 0; ++i) {
        if (!in_v1(i) && cols[i].colors == std::vector<Color>{base}) pick = i;
      }
      if (pick >= 0) {
        sel.selection = "c2";
      } else {
        for (int i = 0; i < r; ++i) {
          if (in_v1(i) && (pick < 0 || cols[i].colors.size() < cols[pick].colors.size())) pick = i;
        }
        if (pick < 0 || static_cast<int>(cols[pick].colors.size()) > c3_limit) {
          throw anomaly("no position inside the first class meets the Col-set bound");
        }
        sel.selection = "c3";
      }
    }
    sel.position = pick;
    if (sel.selection == "c2") {
      local.components.push_back({base, d.serial(e.vertices[pick], base)});
    } else {
      for (std::size_t i = 0; i < cols[pick].colors.size(); ++i) {
        local.components.push_back({cols[pick].colors[i], cols[pick].serials[i]});
      }
    }

    // Surviving colors keep their components, so each ref maps back to the
    // input's component of the same original color.
    for (const ComponentRef& ref : local.components) {
      const Component& comp = d.component(ref);
      const Color orig = label[ref.color - 1];
      const Serial orig_serial = original.serial(static_cast<Vertex>(comp.vertices.find_first()), orig);
      if (orig_serial == kIsolated || original.component({orig, orig_serial}).vertices != comp.vertices) {
        throw anomaly("component of color " + std::to_string(orig) + " changed during reduction");
      }
      out.cover.components.push_back({orig, orig_serial});
    }
    std::sort(out.cover.components.begin(), out.cover.components.end());
    if (!covers(original, out.cover)) throw anomaly("extracted components do not cover V");
    if (static_cast<int>(out.cover.size()) > out.bound) {
      throw anomaly("extracted cover has " + std::to_string(out.cover.size()) +
                    " components, above the bound " + std::to_string(out.bound));
    }
    return out;
  }
  throw anomaly("reduction did not terminate within the color count");
}

}  // namespace mcover
