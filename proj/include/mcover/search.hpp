#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcover/cover.hpp"

namespace mcover {

// Draws in [0, n) from a 64-bit Mersenne twister by rejection, so streams
// are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Seed of instance `index` in a stream rooted at `base` (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

class GenerationFailure : public Error {
 public:
  explicit GenerationFailure(const std::string& what) : Error(ExitCode::kResourceError, what) {}
};

// Uniform random table coloring of the complete host, then seeded repair
// until every vertex meets every color. InputError when some vertex degree
// is below k; GenerationFailure when the repair cap runs out.
EdgeColoring random_spanning_coloring(const PartiteStructure& s, int k, std::uint64_t seed,
                                      std::size_t repair_cap = 200'000,
                                      HostKind host = HostKind::kComplete);

struct EnumerationStats {
  std::uint64_t enumerated = 0;
  std::uint64_t spanning = 0;
};

// All k^m colorings of the complete host in odometer order (last edge
// fastest); `fn` sees the spanning ones. ResourceError above the budget.
EnumerationStats exhaustive_colorings(const PartiteStructure& s, int k,
                                      const std::function<void(const EdgeColoring&)>& fn,
                                      std::uint64_t budget = 10'000'000);

enum class Suite {
  kStatement,          // edge endpoints share their color's coordinate
  kHammingDistance,       // cover > 1 => delta(v, w) <= t + 1 across classes
  kCommonCoordinates,  // cover > 1 => |J| >= r + 1 - l' for l' vertices
  kKLeR,               // k <= r => cover 1
  kSmallT,             // 1 <= t <= r - 2 => cover <= t + 1
  kTEqRMinus1,         // t = r - 1 => cover <= r
  kLargeT,             // t >= r - 1 => cover <= t + 2
  kGeneralUpper,       // ell >= 2 => cover <= bound_formula
  kExtractor,          // ell >= 2 => constructive cover within the bound
  kDuality,            // tau(dual) = cover; r-wise intersection for ell = 1
};

const char* suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct SearchConfig {
  std::string mode = "suite";  // "suite" or "hunt"
  std::vector<Suite> suites = all_suites();
  int r = 3;
  int ell = 1;
  std::vector<int> ks{4};
  std::vector<std::vector<std::size_t>> sizes{{2, 2, 2}};
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t repair_cap = 200'000;
  SolverOptions solver;
  std::uint64_t enumeration_budget = 10'000'000;
  int threads = 1;
  std::string out_dir;  // counterexample files go here when set
};

// JSON round trip for config files.
SearchConfig parse_search_config(const std::string& json_text);
std::string search_config_json(const SearchConfig& cfg);

struct PropertyOutcome {
  Suite suite;
  bool applicable;
  bool passed;
  std::string detail;
};

struct InstanceOutcome {
  std::size_t index = 0;
  int r = 0, ell = 0, k = 0, used_colors = 0;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  bool generated = false;
  std::string error;
  bool spanning = false;
  int exact_cover = -1;
  std::vector<PropertyOutcome> properties;
  bool anomaly = false;
  std::string counterexample_file;
};

struct SearchReport {
  SearchConfig config;
  std::vector<InstanceOutcome> instances;
  std::uint64_t enumerated = 0;   // exhaustive mode: colorings visited
  std::size_t violations = 0;     // confirmed property failures
  std::size_t skipped = 0;        // generation failures
  std::vector<std::string> counterexamples;

  // Deterministic JSON body: same config, same bytes.
  std::string to_json() const;
  // One line per parameter cell with the largest cover seen.
  std::string summary() const;
};

// Evaluates the selected suites on one colored instance; every failure is
// re-checked from the serialized instance before it counts.
InstanceOutcome evaluate_instance(const EdgeColoring& coloring, const std::vector<Suite>& suites,
                                  const SolverOptions& solver);

// Runs the configured suites over random (or, with `exhaustive`, all)
// spanning colorings of every grid cell.
SearchReport run_property_suite(const SearchConfig& cfg);

// Random spanning colorings with ell = 1 and k >= 2r; records the largest
// exact cover per cell. Covers of k - r + 2 are written out with a verified
// minimum-cover certificate; anything larger is flagged as an anomaly.
SearchReport hunt_open_case(int r, int k, const std::vector<std::vector<std::size_t>>& size_grid,
                            const std::vector<std::uint64_t>& seeds, const SearchConfig& cfg);

SearchReport run_search(const SearchConfig& cfg);

}  // namespace mcover
