#include "mcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mcover/certificate.hpp"
#include "mcover/dual.hpp"
#include "mcover/extractor.hpp"
#include "mcover/instance_io.hpp"

namespace mcover {

using json = nlohmann::ordered_json;

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InputError("uniform_below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EdgeColoring random_spanning_coloring(const PartiteStructure& s, int k, std::uint64_t seed,
                                      std::size_t repair_cap, HostKind host_kind) {
  if (k < 1) throw InputError("number of colors must be positive");
  auto host = std::make_shared<const Hypergraph>(s, host_kind);
  auto table = std::make_shared<const EdgeTable>(*host);
  const std::size_t n = s.vertex_count();
  const auto inc = table->incidence(n);
  for (Vertex v = 0; v < n; ++v) {
    if (inc[v].size() < static_cast<std::size_t>(k)) {
      throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(inc[v].size()) +
                       " < k = " + std::to_string(k));
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(table->size());
  for (Color& c : colors) c = static_cast<Color>(uniform_below(rng, k)) + 1;

  // count[v * k + c - 1]: edges of color c at v.
  std::vector<std::uint32_t> count(n * k, 0);
  for (std::size_t e = 0; e < table->size(); ++e) {
    for (Vertex v : table->edge(e)) ++count[v * k + colors[e] - 1];
  }
  std::vector<std::uint32_t> safe;
  for (std::size_t iter = 0;; ++iter) {
    Vertex v = 0;
    Color want = 0;
    for (Vertex u = 0; u < n && !want; ++u) {
      for (Color c = 1; c <= k; ++c) {
        if (count[u * k + c - 1] == 0) {
          v = u;
          want = c;
          break;
        }
      }
    }
    if (!want) break;
    if (iter >= repair_cap) {
      throw GenerationFailure("spanning repair exceeded " + std::to_string(repair_cap) + " steps");
    }
    safe.clear();
    for (std::uint32_t e : inc[v]) {
      const Color old = colors[e];
      const auto edge = table->edge(e);
      if (std::all_of(edge.begin(), edge.end(), [&](Vertex u) { return count[u * k + old - 1] >= 2; })) {
        safe.push_back(e);
      }
    }
    const auto& pool = safe.empty() ? inc[v] : safe;
    const std::uint32_t e = pool[uniform_below(rng, pool.size())];
    for (Vertex u : table->edge(e)) {
      --count[u * k + colors[e] - 1];
      ++count[u * k + want - 1];
    }
    colors[e] = want;
  }
  return EdgeColoring(std::move(host), k, std::move(table), std::move(colors));
}

EnumerationStats exhaustive_colorings(const PartiteStructure& s, int k,
                                      const std::function<void(const EdgeColoring&)>& fn,
                                      std::uint64_t budget) {
  if (k < 1) throw InputError("number of colors must be positive");
  auto host = std::make_shared<const Hypergraph>(s);
  auto table = std::make_shared<const EdgeTable>(*host);
  const std::size_t m = table->size();
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= static_cast<unsigned>(k);
    if (total > budget) {
      throw ResourceError(std::to_string(k) + "^" + std::to_string(m) + " colorings exceed the budget");
    }
  }
  const std::size_t n = s.vertex_count();
  EdgeColoring coloring(host, k, table, std::vector<Color>(m, 1));
  std::vector<Color> colors(m, 1);
  std::vector<std::uint32_t> count(n * k, 0);
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : table->edge(e)) ++count[v * k];
  }
  std::vector<std::uint32_t> per_color(k, static_cast<std::uint32_t>(m));
  per_color.assign(k, 0);
  per_color[0] = static_cast<std::uint32_t>(m);
  EnumerationStats stats;
  while (true) {
    ++stats.enumerated;
    bool spanning = true;
    for (Color c = 1; c <= k && spanning; ++c) {
      if (per_color[c - 1] == 0) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (count[v * k + c - 1] == 0) {
          spanning = false;
          break;
        }
      }
    }
    if (spanning) {
      ++stats.spanning;
      for (std::size_t e = 0; e < m; ++e) coloring.set_table_color(e, colors[e]);
      fn(coloring);
    }
    // Odometer step, last edge fastest.
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      const Color old = colors[pos];
      const Color next = old == k ? 1 : old + 1;
      for (Vertex v : table->edge(pos)) {
        --count[v * k + old - 1];
        ++count[v * k + next - 1];
      }
      --per_color[old - 1];
      ++per_color[next - 1];
      colors[pos] = next;
      if (next != 1) break;
      if (pos == 0) return stats;
    }
    if (m == 0) return stats;
  }
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kStatement: return "statement";
    case Suite::kHammingDistance: return "hamming-distance";
    case Suite::kCommonCoordinates: return "common-coordinates";
    case Suite::kKLeR: return "k-le-r";
    case Suite::kSmallT: return "small-t";
    case Suite::kTEqRMinus1: return "t-eq-r-1";
    case Suite::kLargeT: return "large-t";
    case Suite::kGeneralUpper: return "general-upper";
    case Suite::kExtractor: return "extractor";
    case Suite::kDuality: return "duality";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::kStatement, Suite::kHammingDistance, Suite::kCommonCoordinates, Suite::kKLeR,
          Suite::kSmallT,    Suite::kTEqRMinus1,   Suite::kLargeT,            Suite::kGeneralUpper,
          Suite::kExtractor, Suite::kDuality};
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

namespace {

struct Facts {
  const EdgeColoring& coloring;
  const ComponentDecomposition& d;
  bool spanning;
  int used;
  int exact;  // -1 when unavailable
};

PropertyOutcome na(Suite s) { return {s, false, true, ""}; }

PropertyOutcome bound_check(Suite s, const Facts& f, int bound, const std::string& label) {
  if (f.exact < 0) return {s, true, false, "exact cover unavailable"};
  const bool ok = f.exact <= bound;
  return {s, true, ok, ok ? "" : "cover " + std::to_string(f.exact) + " > " + label + " " + std::to_string(bound)};
}

PropertyOutcome check(Suite suite, const Facts& f, const SolverOptions& solver) {
  const PartiteStructure& s = f.coloring.structure();
  const int r = s.r();
  const int t = f.used - r;
  const bool l1 = s.ell() == 1;
  const std::size_t n = f.d.vertex_count();
  switch (suite) {
    case Suite::kStatement: {
      const bool ok = check_edge_agreement(f.coloring, f.d);
      return {suite, true, ok, ok ? "" : "an edge straddles two components of its color"};
    }
    case Suite::kHammingDistance: {
      if (!l1 || !f.spanning || f.exact <= 1) return na(suite);
      for (Vertex v = 0; v < n; ++v) {
        const VertexVector vv = f.d.vertex_vector(v);
        for (Vertex w = v + 1; w < n; ++w) {
          if (s.class_of(v) == s.class_of(w)) continue;
          const int delta = hamming(vv, f.d.vertex_vector(w));
          if (delta > t + 1) {
            return {suite, true, false,
                    "delta(" + std::to_string(v) + "," + std::to_string(w) + ") = " + std::to_string(delta)};
          }
        }
      }
      return {suite, true, true, ""};
    }
    case Suite::kCommonCoordinates: {
      if (!l1 || !f.spanning || f.exact <= 1) return na(suite);
      std::vector<Color> used;
      for (Color c = 1; c <= f.d.num_colors(); ++c) {
        if (!f.d.components_of(c).empty()) used.push_back(c);
      }
      std::string failure;
      std::vector<Vertex> tuple;
      // Every tuple of vertices from strictly increasing classes.
      auto descend = [&](auto&& self, int next_class) -> void {
        if (!failure.empty()) return;
        const int lp = static_cast<int>(tuple.size());
        if (lp >= 2) {
          int common = 0;
          for (Color c : used) {
            const Serial s0 = f.d.serial(tuple[0], c);
            bool same = true;
            for (Vertex w : tuple) same = same && f.d.serial(w, c) == s0;
            common += same;
          }
          if (common < r + 1 - lp) {
            failure = "|J| = " + std::to_string(common) + " for " + std::to_string(lp) + " vertices";
            return;
          }
        }
        for (int cls = next_class; cls < r; ++cls) {
          for (Vertex w = s.class_begin(cls); w < s.class_end(cls); ++w) {
            tuple.push_back(w);
            self(self, cls + 1);
            tuple.pop_back();
          }
        }
      };
      descend(descend, 0);
      return {suite, true, failure.empty(), failure};
    }
    case Suite::kKLeR:
      if (!f.spanning || f.used > r) return na(suite);
      return bound_check(suite, f, 1, "bound");
    case Suite::kSmallT:
      if (!l1 || !f.spanning || t < 1 || t > r - 2) return na(suite);
      return bound_check(suite, f, t + 1, "t+1 =");
    case Suite::kTEqRMinus1:
      if (!l1 || !f.spanning || t != r - 1) return na(suite);
      return bound_check(suite, f, r, "r =");
    case Suite::kLargeT:
      if (!l1 || !f.spanning || t < r - 1) return na(suite);
      return bound_check(suite, f, t + 2, "t+2 =");
    case Suite::kGeneralUpper:
      if (l1 || !f.spanning) return na(suite);
      return bound_check(suite, f, proved_upper_bound(r, s.ell(), f.used), "bound");
    case Suite::kExtractor: {
      if (l1 || !f.spanning) return na(suite);
      try {
        const ConstructiveCover cc = extract_cover_constructive(f.coloring);
        const bool ok = covers(f.d, cc.cover) && static_cast<int>(cc.cover.size()) <= cc.bound &&
                        cc.bound <= proved_upper_bound(r, s.ell(), f.used);
        return {suite, true, ok, ok ? "" : "constructive cover failed re-verification"};
      } catch (const AnomalyError& e) {
        return {suite, true, false, std::string("anomaly: ") + e.what()};
      }
    }
    case Suite::kDuality: {
      if (f.exact < 0) return {suite, true, false, "exact cover unavailable"};
      const DualInstance dual = build_dual(f.coloring, f.d, DualOptions{!f.spanning});
      const Transversal tr = tau(dual, solver.component_limit);
      if (tr.size != f.exact) {
        return {suite, true, false, "tau " + std::to_string(tr.size) + " != cover " + std::to_string(f.exact)};
      }
      if (l1 && f.spanning && !verify_r_wise_intersection(dual).holds) {
        return {suite, true, false, "dual lacks the r-wise intersection property"};
      }
      return {suite, true, true, ""};
    }
  }
  return na(suite);
}

struct Evaluation {
  InstanceOutcome outcome;
  std::vector<PropertyOutcome> raw;
};

InstanceOutcome evaluate_once(const EdgeColoring& coloring, const std::vector<Suite>& suites,
                              const SolverOptions& solver) {
  InstanceOutcome out;
  const PartiteStructure& s = coloring.structure();
  out.r = s.r();
  out.ell = s.ell();
  out.k = coloring.num_colors();
  out.sizes.assign(s.class_sizes().begin(), s.class_sizes().end());
  out.generated = true;
  const ComponentDecomposition d = decompose(coloring);
  out.spanning = is_spanning(coloring, d).spanning;
  for (Color c = 1; c <= d.num_colors(); ++c) out.used_colors += !d.components_of(c).empty();
  try {
    out.exact_cover = min_cover_exact(d, solver).size;
  } catch (const Error& e) {
    out.error = e.what();
  }
  const Facts facts{coloring, d, out.spanning, out.used_colors, out.exact_cover};
  for (Suite suite : suites) out.properties.push_back(check(suite, facts, solver));
  return out;
}

}  // namespace

InstanceOutcome evaluate_instance(const EdgeColoring& coloring, const std::vector<Suite>& suites,
                                  const SolverOptions& solver) {
  InstanceOutcome first = evaluate_once(coloring, suites, solver);
  const bool failed = std::any_of(first.properties.begin(), first.properties.end(),
                                  [](const PropertyOutcome& p) { return !p.passed; });
  if (!failed) return first;
  // Re-derive everything from the serialized instance before reporting.
  const InstanceFile again = parse_instance(write_instance(coloring, false, true));
  InstanceOutcome second = evaluate_once(*again.coloring, suites, solver);
  for (std::size_t i = 0; i < first.properties.size(); ++i) {
    if (!first.properties[i].passed && second.properties[i].passed) {
      second.anomaly = true;
      second.properties[i].detail = "failure did not reproduce: " + first.properties[i].detail;
    }
  }
  return second;
}

namespace {

std::string sizes_key(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out;
}

std::string cell_key(int k, const std::vector<std::size_t>& sizes) {
  return "k=" + std::to_string(k) + " sizes=" + sizes_key(sizes);
}

bool violated(const InstanceOutcome& o) {
  return std::any_of(o.properties.begin(), o.properties.end(), [](const PropertyOutcome& p) { return !p.passed; });
}

void save_counterexample(const SearchConfig& cfg, const EdgeColoring& coloring, InstanceOutcome& o,
                         const std::string& stem) {
  if (cfg.out_dir.empty()) return;
  std::filesystem::create_directories(cfg.out_dir);
  const std::string path = (std::filesystem::path(cfg.out_dir) / (stem + ".inst")).string();
  write_file(path, write_instance(coloring, o.spanning, true));
  o.counterexample_file = path;
}

// Runs `work(i)` for i in [0, count) over a pool; results land by index.
template <class Work>
void parallel_for(std::size_t count, int threads, Work&& work) {
  const int pool = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (pool == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < pool; ++w) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i; (i = next++) < count;) work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SearchReport run_property_suite(const SearchConfig& cfg) {
  SearchReport report;
  report.config = cfg;
  struct Cell {
    int k;
    std::vector<std::size_t> sizes;
  };
  std::vector<Cell> cells;
  for (int k : cfg.ks) {
    for (const auto& sizes : cfg.sizes) cells.push_back({k, sizes});
  }
  if (cells.empty()) return report;

  if (cfg.exhaustive) {
    std::size_t index = 0;
    for (const Cell& cell : cells) {
      const PartiteStructure s(cfg.r, cfg.ell, cell.sizes);
      const EnumerationStats stats = exhaustive_colorings(
          s, cell.k,
          [&](const EdgeColoring& coloring) {
            InstanceOutcome o = evaluate_instance(coloring, cfg.suites, cfg.solver);
            o.index = index++;
            o.k = cell.k;
            if (violated(o) || o.anomaly || !o.error.empty()) {
              save_counterexample(cfg, coloring, o, "cex_" + std::to_string(o.index));
              report.instances.push_back(std::move(o));
            } else {
              // Keep only a compact record for passing instances.
              InstanceOutcome slim;
              slim.index = o.index;
              slim.k = o.k;
              slim.sizes = o.sizes;
              slim.exact_cover = o.exact_cover;
              slim.generated = true;
              slim.spanning = o.spanning;
              report.instances.push_back(std::move(slim));
            }
          },
          cfg.enumeration_budget);
      report.enumerated += stats.enumerated;
    }
  } else {
    std::vector<InstanceOutcome> outcomes(cfg.count);
    std::vector<std::optional<EdgeColoring>> failing(cfg.count);
    parallel_for(cfg.count, cfg.threads, [&](std::size_t i) {
      const Cell& cell = cells[i % cells.size()];
      const std::uint64_t seed = derive_seed(cfg.seed, i);
      InstanceOutcome o;
      try {
        const PartiteStructure s(cfg.r, cfg.ell, cell.sizes);
        const EdgeColoring coloring = random_spanning_coloring(s, cell.k, seed, cfg.repair_cap);
        o = evaluate_instance(coloring, cfg.suites, cfg.solver);
        if (violated(o) || o.anomaly) failing[i] = coloring;
      } catch (const GenerationFailure& e) {
        o.error = e.what();
      } catch (const InputError& e) {
        o.error = e.what();
      }
      o.index = i;
      o.seed = seed;
      o.k = cell.k;
      o.r = cfg.r;
      o.ell = cfg.ell;
      o.sizes = cell.sizes;
      outcomes[i] = std::move(o);
    });
    for (std::size_t i = 0; i < cfg.count; ++i) {
      if (failing[i]) save_counterexample(cfg, *failing[i], outcomes[i], "cex_" + std::to_string(i));
    }
    report.instances = std::move(outcomes);
  }
  for (const auto& o : report.instances) {
    if (!o.generated) ++report.skipped;
    if (violated(o)) ++report.violations;
    if (!o.counterexample_file.empty()) report.counterexamples.push_back(o.counterexample_file);
  }
  return report;
}

SearchReport hunt_open_case(int r, int k, const std::vector<std::vector<std::size_t>>& size_grid,
                            const std::vector<std::uint64_t>& seeds, const SearchConfig& cfg) {
  if (k < 2 * r) throw InputError("the open case needs k >= 2r");
  SearchReport report;
  report.config = cfg;
  report.config.mode = "hunt";
  report.config.r = r;
  report.config.ell = 1;
  report.config.ks = {k};
  report.config.sizes = size_grid;
  if (seeds.empty() || size_grid.empty()) return report;
  const int ceiling = k - r + 2;
  const std::vector<Suite> suites{Suite::kStatement, Suite::kLargeT};

  std::vector<InstanceOutcome> outcomes(seeds.size());
  std::vector<std::optional<EdgeColoring>> keep(seeds.size());
  parallel_for(seeds.size(), cfg.threads, [&](std::size_t i) {
    const auto& sizes = size_grid[i % size_grid.size()];
    InstanceOutcome o;
    try {
      const PartiteStructure s(r, 1, sizes);
      const EdgeColoring coloring = random_spanning_coloring(s, k, seeds[i], cfg.repair_cap);
      o = evaluate_instance(coloring, suites, cfg.solver);
      if (o.exact_cover > ceiling) {
        o.anomaly = true;
        o.properties.push_back({Suite::kLargeT, true, false, "cover above k - r + 2"});
      }
      if (o.exact_cover >= ceiling || violated(o)) keep[i] = coloring;
    } catch (const GenerationFailure& e) {
      o.error = e.what();
    } catch (const InputError& e) {
      o.error = e.what();
    }
    o.index = i;
    o.seed = seeds[i];
    o.r = r;
    o.ell = 1;
    o.k = k;
    o.sizes = sizes;
    outcomes[i] = std::move(o);
  });

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!keep[i]) continue;
    InstanceOutcome& o = outcomes[i];
    const std::string inst_text = write_instance(*keep[i], o.spanning, true);
    const std::string digest = instance_digest(inst_text);
    const ComponentDecomposition d = decompose(*keep[i]);
    const ExactCover exact = min_cover_exact(d, cfg.solver);
    CertificateFile cert;
    cert.instance_digest = digest;
    cert.claim = ClaimType::kMinCover;
    cert.size = exact.size;
    cert.components = certificate_entries(d, exact.cover);
    cert.verdict = "covers";
    const std::string stem = "hunt_" + std::to_string(i);
    cert.instance_file = stem + ".inst";
    const std::string cert_text = write_certificate(cert);
    const VerifyResult vr = verify_certificate(inst_text, cert_text, cfg.solver.subset_budget);
    if (!vr.valid) {
      o.anomaly = true;
      o.error = "certificate failed re-verification: " + vr.reason;
    }
    if (!cfg.out_dir.empty()) {
      std::filesystem::create_directories(cfg.out_dir);
      const auto dir = std::filesystem::path(cfg.out_dir);
      write_file((dir / (stem + ".inst")).string(), inst_text);
      write_file((dir / (stem + ".cert")).string(), cert_text);
      o.counterexample_file = (dir / (stem + ".inst")).string();
    } else {
      o.counterexample_file = stem + ".inst (not written; no output directory)";
    }
  }
  for (const auto& o : outcomes) {
    if (!o.generated) ++report.skipped;
    if (violated(o)) ++report.violations;
    if (!o.counterexample_file.empty()) report.counterexamples.push_back(o.counterexample_file);
  }
  report.instances = std::move(outcomes);
  return report;
}

SearchReport run_search(const SearchConfig& cfg) {
  if (cfg.mode == "hunt") {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < cfg.count; ++i) seeds.push_back(derive_seed(cfg.seed, i));
    if (cfg.ks.size() != 1) throw InputError("hunt mode takes exactly one k");
    return hunt_open_case(cfg.r, cfg.ks.front(), cfg.sizes, seeds, cfg);
  }
  if (cfg.mode != "suite") throw InputError("unknown search mode '" + cfg.mode + "'");
  return run_property_suite(cfg);
}

SearchConfig parse_search_config(const std::string& json_text) {
  SearchConfig cfg;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("search config: ") + e.what());
  }
  try {
    cfg.mode = j.value("mode", cfg.mode);
    if (j.contains("suites")) {
      cfg.suites.clear();
      for (const auto& name : j.at("suites")) {
        const std::string s = name.get<std::string>();
        if (s == "all") {
          cfg.suites = all_suites();
          break;
        }
        auto suite = parse_suite(s);
        if (!suite) throw InputError("unknown suite '" + s + "'");
        cfg.suites.push_back(*suite);
      }
    }
    cfg.r = j.value("r", cfg.r);
    cfg.ell = j.value("ell", cfg.ell);
    if (j.contains("k")) {
      cfg.ks = j.at("k").is_array() ? j.at("k").get<std::vector<int>>() : std::vector<int>{j.at("k").get<int>()};
    }
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<std::vector<std::size_t>>>();
    cfg.exhaustive = j.value("exhaustive", cfg.exhaustive);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.count = j.value("count", cfg.count);
    cfg.repair_cap = j.value("repair_cap", cfg.repair_cap);
    cfg.solver.component_limit = j.value("component_limit", cfg.solver.component_limit);
    cfg.solver.subset_budget = j.value("subset_budget", cfg.solver.subset_budget);
    cfg.enumeration_budget = j.value("enumeration_budget", cfg.enumeration_budget);
    cfg.threads = j.value("threads", cfg.threads);
    cfg.out_dir = j.value("out", cfg.out_dir);
  } catch (const json::exception& e) {
    throw InputError(std::string("search config: ") + e.what());
  }
  return cfg;
}

namespace {

json config_to_json(const SearchConfig& cfg) {
  json j;
  j["mode"] = cfg.mode;
  json suites = json::array();
  for (Suite s : cfg.suites) suites.push_back(suite_name(s));
  j["suites"] = suites;
  j["r"] = cfg.r;
  j["ell"] = cfg.ell;
  j["k"] = cfg.ks;
  j["sizes"] = cfg.sizes;
  j["exhaustive"] = cfg.exhaustive;
  j["seed"] = cfg.seed;
  j["count"] = cfg.count;
  j["repair_cap"] = cfg.repair_cap;
  j["component_limit"] = cfg.solver.component_limit;
  j["subset_budget"] = cfg.solver.subset_budget;
  j["enumeration_budget"] = cfg.enumeration_budget;
  return j;
}

}  // namespace

std::string search_config_json(const SearchConfig& cfg) {
  json j = config_to_json(cfg);
  j["threads"] = cfg.threads;
  j["out"] = cfg.out_dir;
  return j.dump(2);
}

std::string SearchReport::to_json() const {
  json j;
  // Threads and output paths do not change results, so they stay out of the body.
  j["config"] = config_to_json(config);
  json cells = json::object();
  std::map<std::string, std::map<int, std::size_t>> histogram;
  json list = json::array();
  for (const auto& o : instances) {
    if (o.generated && o.exact_cover >= 0) histogram[cell_key(o.k, o.sizes)][o.exact_cover]++;
    if (config.exhaustive && !violated(o) && !o.anomaly && o.error.empty()) continue;
    json x;
    x["index"] = o.index;
    x["k"] = o.k;
    x["sizes"] = o.sizes;
    if (!config.exhaustive) x["seed"] = o.seed;
    x["generated"] = o.generated;
    if (!o.error.empty()) x["error"] = o.error;
    if (o.generated) {
      x["spanning"] = o.spanning;
      x["used_colors"] = o.used_colors;
      x["exact_cover"] = o.exact_cover;
      json props = json::object();
      for (const auto& p : o.properties) {
        if (!p.applicable) continue;
        props[suite_name(p.suite)] = p.passed ? "pass" : "FAIL: " + p.detail;
      }
      x["properties"] = props;
    }
    if (o.anomaly) x["anomaly"] = true;
    if (!o.counterexample_file.empty()) {
      x["counterexample"] = std::filesystem::path(o.counterexample_file).filename().string();
    }
    list.push_back(std::move(x));
  }
  for (const auto& [key, hist] : histogram) {
    json h = json::object();
    int max_cover = 0;
    std::size_t total = 0;
    for (const auto& [size, count] : hist) {
      h[std::to_string(size)] = count;
      max_cover = std::max(max_cover, size);
      total += count;
    }
    cells[key] = {{"instances", total}, {"max_cover", max_cover}, {"cover_histogram", h}};
  }
  j["cells"] = cells;
  j["enumerated"] = enumerated;
  j["violations"] = violations;
  j["skipped"] = skipped;
  json cex = json::array();
  for (const auto& c : counterexamples) cex.push_back(std::filesystem::path(c).filename().string());
  j["counterexamples"] = cex;
  j["instances"] = list;
  return j.dump(2) + "\n";
}

std::string SearchReport::summary() const {
  std::map<std::string, std::pair<std::size_t, int>> cells;
  for (const auto& o : instances) {
    if (!o.generated || o.exact_cover < 0) continue;
    auto& c = cells[cell_key(o.k, o.sizes)];
    ++c.first;
    c.second = std::max(c.second, o.exact_cover);
  }
  std::ostringstream os;
  for (const auto& [key, c] : cells) {
    os << key << "  instances=" << c.first << "  max_cover=" << c.second << '\n';
  }
  os << "violations=" << violations << " skipped=" << skipped << " counterexamples=" << counterexamples.size()
     << '\n';
  return os.str();
}

}  // namespace mcover
