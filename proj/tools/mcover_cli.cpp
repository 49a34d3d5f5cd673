#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcover/certificate.hpp"
#include "mcover/constructions.hpp"
#include "mcover/dual.hpp"
#include "mcover/extractor.hpp"
#include "mcover/instance_io.hpp"
#include "mcover/search.hpp"

namespace fs = std::filesystem;
using namespace mcover;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = 200'000'000;
  std::size_t component_limit = 64;
  int threads = 1;
  std::string format = "text";
  std::string out_dir;

  bool machine() const { return format == "machine"; }
  SolverOptions solver() const { return {component_limit, budget}; }
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad size list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty size list");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (std::size_t v : parse_sizes(text)) out.push_back(static_cast<int>(v));
  return out;
}

// Key/value output: `key: value` in text mode, `key=value` in machine mode.
class Printer {
 public:
  explicit Printer(const Globals& g) : machine_(g.machine()) {}
  template <class T>
  void operator()(const std::string& key, const T& value) const {
    std::cout << key << (machine_ ? "=" : ": ") << value << '\n';
  }

 private:
  bool machine_;
};

std::string refs_text(const Cover& cover) {
  std::string out;
  for (const auto& ref : cover.components) {
    if (!out.empty()) out += ' ';
    out += std::to_string(ref.color) + ":" + std::to_string(ref.serial);
  }
  return out;
}

std::string output_path(const Globals& g, const std::string& explicit_path, const std::string& fallback) {
  if (!explicit_path.empty()) return explicit_path;
  if (g.out_dir.empty() || fallback.empty()) return "";
  fs::create_directories(g.out_dir);
  return (fs::path(g.out_dir) / fallback).string();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

EdgeColoring load_coloring(const std::string& path, bool* spanning_verified = nullptr) {
  InstanceFile file = parse_instance(read_file(path));
  if (!file.coloring) throw InputError(path + ": expected a colored instance, found a dual file");
  if (spanning_verified) *spanning_verified = file.spanning_verified;
  return std::move(*file.coloring);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic component covers of partite hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("MCOVER_OUT")) g.out_dir = env;
  app.add_option("--seed", g.seed, "Base seed for random generation");
  app.add_option("--budget", g.budget, "Subset / node budget for exhaustive checks");
  app.add_option("--component-limit", g.component_limit, "Largest component count for exact search");
  app.add_option("--threads", g.threads, "Worker threads for search")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", g.out_dir, "Output directory (default $MCOVER_OUT)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build an instance file");
  std::string family;
  int c_r = 3, c_t = 1, c_ell = 1, c_k = 0;
  std::string c_sizes, c_output;
  bool c_semicomplete = false, c_explicit = false;
  construct->add_option("family", family, "basic | general | nonspanning-sharp | random")
      ->required()
      ->check(CLI::IsMember({"basic", "general", "nonspanning-sharp", "random"}));
  std::vector<std::string> c_params;
  construct->add_option("params", c_params,
                        "Positional parameters: basic R T | general R ELL K [complete|semicomplete] | "
                        "nonspanning-sharp R K SIZES | random R ELL K SIZES");
  construct->add_option("--r", c_r, "Number of classes");
  construct->add_option("--t", c_t, "basic: t, giving r + t colors");
  construct->add_option("--ell", c_ell, "Per-class cap");
  construct->add_option("--k", c_k, "Number of colors");
  construct->add_option("--sizes", c_sizes, "Class sizes, comma separated");
  construct->add_flag("--semicomplete", c_semicomplete, "general: semicomplete host");
  construct->add_flag("--explicit", c_explicit, "List every edge instead of a construct line");
  construct->add_option("-o,--output", c_output, "Output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Components, spanning check and cover bounds");
  std::string a_file;
  bool a_vectors = false;
  analyze->add_option("instance", a_file)->required();
  analyze->add_flag("--vectors", a_vectors, "Dump every vertex vector");

  // cover
  auto* cover = app.add_subcommand("cover", "Compute a cover and write a certificate");
  std::string v_file, v_output;
  bool use_exact = false, use_greedy = false, use_constructive = false;
  cover->add_option("instance", v_file)->required();
  auto* f_exact = cover->add_flag("--exact", use_exact, "Optimal cover with a min-cover certificate");
  auto* f_greedy = cover->add_flag("--greedy", use_greedy, "Greedy cover");
  auto* f_con = cover->add_flag("--constructive", use_constructive, "Constructive cover (ell >= 2)");
  f_exact->excludes(f_greedy)->excludes(f_con);
  f_greedy->excludes(f_con);
  cover->add_option("-o,--output", v_output, "Certificate file");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  std::string cert_file, cert_instance;
  verify->add_option("certificate", cert_file)->required();
  verify->add_option("--instance", cert_instance, "Instance file (default: the certificate's instance-file)");

  // dual
  auto* dual = app.add_subcommand("dual", "Dual hypergraph and its transversal number");
  std::string d_file, d_output;
  bool d_partial = false;
  dual->add_option("instance", d_file)->required();
  dual->add_option("-o,--output", d_output, "Dual instance file");
  dual->add_flag("--allow-nonspanning", d_partial, "Build the partial dual of a non-spanning coloring");

  // search
  auto* search = app.add_subcommand("search", "Property suites or the open-case hunt");
  std::string s_config, s_mode, s_sizes, s_ks, s_suites;
  int s_r = 0, s_ell = 0;
  std::size_t s_count = 0;
  bool s_exhaustive = false;
  search->add_option("--config", s_config, "JSON config file");
  search->add_option("--mode", s_mode)->check(CLI::IsMember({"suite", "hunt"}));
  search->add_option("--suites", s_suites, "Comma separated suite names or 'all'");
  search->add_option("--r", s_r);
  search->add_option("--ell", s_ell);
  search->add_option("--k", s_ks, "Colors, comma separated");
  search->add_option("--sizes", s_sizes, "Size grid, cells separated by ';'");
  search->add_option("--count", s_count, "Random instances");
  search->add_flag("--exhaustive", s_exhaustive);

  // suite
  auto* suite = app.add_subcommand("suite", "Run one property suite");
  std::string u_name, u_sizes = "2,2,2", u_ks = "4";
  int u_r = 3, u_ell = 1;
  std::size_t u_count = 100;
  bool u_exhaustive = false;
  suite->add_option("name", u_name)->required();
  suite->add_option("--r", u_r);
  suite->add_option("--ell", u_ell);
  suite->add_option("--k", u_ks, "Colors, comma separated");
  suite->add_option("--sizes", u_sizes, "Size grid, cells separated by ';'");
  suite->add_option("--count", u_count);
  suite->add_flag("--exhaustive", u_exhaustive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kInputError);
  }

  const Printer out(g);
  try {
    if (*construct) {
      auto num = [&](std::size_t i) {
        try {
          return std::stoi(c_params.at(i));
        } catch (const std::exception&) {
          throw InputError("construct " + family + ": bad or missing parameter " + std::to_string(i + 1));
        }
      };
      if (!c_params.empty()) {
        c_r = num(0);
        if (family == "basic") {
          c_t = num(1);
        } else if (family == "general" || family == "random") {
          c_ell = num(1);
          c_k = num(2);
          if (family == "general" && c_params.size() > 3) {
            if (c_params[3] != "complete" && c_params[3] != "semicomplete") {
              throw InputError("host must be complete or semicomplete");
            }
            c_semicomplete = c_params[3] == "semicomplete";
          }
          if (family == "random") c_sizes = c_params.size() > 3 ? c_params[3] : "";
        } else {
          c_k = num(1);
          c_sizes = c_params.size() > 2 ? c_params[2] : "";
        }
      }
      std::optional<EdgeColoring> coloring;
      if (family == "basic") {
        coloring = build_basic(c_r, c_t);
      } else if (family == "general") {
        coloring = build_general(c_r, c_ell, c_k, c_semicomplete ? HostKind::kSemicomplete : HostKind::kComplete);
      } else if (family == "nonspanning-sharp") {
        coloring = build_nonspanning_sharp(c_r, c_k, parse_sizes(c_sizes));
      } else {
        coloring = random_spanning_coloring(PartiteStructure(c_r, c_ell, parse_sizes(c_sizes)), c_k, g.seed);
      }
      const bool spanning = is_spanning(*coloring, decompose(*coloring)).spanning;
      emit(output_path(g, c_output, ""), write_instance(*coloring, spanning, c_explicit));
      return 0;
    }

    if (*analyze) {
      const EdgeColoring coloring = load_coloring(a_file);
      const PartiteStructure& s = coloring.structure();
      const ComponentDecomposition d = decompose(coloring);
      const SpanningCheck sc = is_spanning(coloring, d);
      int used = 0;
      for (Color c = 1; c <= coloring.num_colors(); ++c) used += !d.components_of(c).empty();
      out("r", s.r());
      out("ell", s.ell());
      out("k", coloring.num_colors());
      out("used_colors", used);
      out("vertices", s.vertex_count());
      out("edges", coloring.host().edge_count());
      out("spanning", sc.spanning ? "yes" : "no");
      if (sc.witness) out("spanning_witness", std::to_string(sc.witness->first) + " " + std::to_string(sc.witness->second));
      for (Color c = 1; c <= coloring.num_colors(); ++c) {
        out("components_color_" + std::to_string(c), d.components_of(c).size());
      }
      if (a_vectors) {
        for (Vertex v = 0; v < s.vertex_count(); ++v) {
          std::string vec;
          for (Serial x : d.vertex_vector(v)) vec += (vec.empty() ? "" : ",") + std::to_string(x);
          out("vector_" + std::to_string(v), vec);
        }
      }
      if (used >= 1 + s.r() - s.ell()) out("bound_formula", bound_formula(s.r(), s.ell(), used));
      out("proved_upper_bound", proved_upper_bound(s.r(), s.ell(), used));
      if (d.component_count() <= g.component_limit) {
        out("exact_cover", min_cover_exact(d, g.solver()).size);
      } else {
        out("exact_cover", "skipped (use cover --greedy)");
        out("greedy_cover", min_cover_greedy(d).size);
      }
      return 0;
    }

    if (*cover) {
      bool spanning_verified = false;
      const EdgeColoring coloring = load_coloring(v_file, &spanning_verified);
      const std::string inst_text = read_file(v_file);
      const ComponentDecomposition d = decompose(coloring);
      CertificateFile cert;
      cert.instance_digest = instance_digest(inst_text);
      const std::string cert_path = output_path(g, v_output, fs::path(v_file).stem().string() + ".cert");
      if (!cert_path.empty()) {
        cert.instance_file =
            fs::relative(fs::absolute(v_file), fs::absolute(cert_path).parent_path()).generic_string();
      }
      Cover result;
      std::string method;
      if (use_constructive) {
        const ConstructiveCover cc = extract_cover_constructive(coloring);
        result = cc.cover;
        method = "constructive";
        cert.claim = ClaimType::kCover;
        if (!g.machine()) std::cout << describe(cc.trace);
        out("bound", cc.bound);
      } else if (use_greedy) {
        result = min_cover_greedy(d).cover;
        method = "greedy";
        cert.claim = ClaimType::kCover;
      } else {
        const ExactCover exact = min_cover_exact(d, g.solver());
        result = exact.cover;
        method = "exact";
        cert.claim = ClaimType::kMinCover;
        out("nodes", exact.nodes);
      }
      cert.size = static_cast<int>(result.size());
      cert.components = certificate_entries(d, result);
      cert.verdict = covers(d, result) ? "covers" : "does-not-cover";
      out("method", method);
      out("size", result.size());
      out("components", refs_text(result));
      out("digest", cert.instance_digest);
      const std::string text = write_certificate(cert);
      if (cert_path.empty()) {
        std::cout << text;
      } else {
        write_file(cert_path, text);
        out("certificate", cert_path);
      }
      return 0;
    }

    if (*verify) {
      const std::string cert_text = read_file(cert_file);
      std::string inst_path = cert_instance;
      if (inst_path.empty()) {
        CertificateFile cert;
        try {
          cert = parse_certificate(cert_text);
        } catch (const InputError& e) {
          out("verdict", "invalid");
          out("reason", e.what());
          return static_cast<int>(ExitCode::kVerificationFailed);
        }
        if (cert.instance_file.empty()) throw InputError("certificate names no instance file; pass --instance");
        inst_path = (fs::path(cert_file).parent_path() / cert.instance_file).string();
      }
      const VerifyResult vr = verify_certificate(read_file(inst_path), cert_text, g.budget);
      out("verdict", vr.valid ? "valid" : "invalid");
      if (!vr.valid) out("reason", vr.reason);
      return vr.valid ? 0 : static_cast<int>(ExitCode::kVerificationFailed);
    }

    if (*dual) {
      const EdgeColoring coloring = load_coloring(d_file);
      const ComponentDecomposition d = decompose(coloring);
      const DualInstance di = build_dual(coloring, d, DualOptions{d_partial});
      const Transversal tr = tau(di, g.component_limit, g.budget);
      out("dual_vertices", di.vertices.size());
      out("dual_edges", di.edges.size());
      out("tau", tr.size);
      if (coloring.structure().ell() == 1) {
        const IntersectionCheck ic = verify_r_wise_intersection(di);
        out("r_wise_intersection", ic.holds ? "yes" : "no");
      }
      const ExactCover exact = min_cover_exact(d, g.solver());
      out("exact_cover", exact.size);
      out("cross_check", exact.size == tr.size ? "agree" : "DISAGREE");
      const std::string path = output_path(g, d_output, "");
      if (!path.empty()) write_file(path, write_dual_instance(di));
      if (exact.size != tr.size) {
        throw AnomalyError("tau and exact cover disagree", "");
      }
      return 0;
    }

    if (*search || *suite) {
      SearchConfig cfg;
      if (*suite) {
        auto s = parse_suite(u_name);
        if (!s) throw InputError("unknown suite '" + u_name + "'");
        cfg.suites = {*s};
        cfg.r = u_r;
        cfg.ell = u_ell;
        cfg.ks = parse_ints(u_ks);
        s_sizes = u_sizes;
        cfg.count = u_count;
        cfg.exhaustive = u_exhaustive;
      } else {
        if (!s_config.empty()) cfg = parse_search_config(read_file(s_config));
        if (!s_mode.empty()) cfg.mode = s_mode;
        if (!s_suites.empty()) {
          cfg.suites.clear();
          std::stringstream ss(s_suites);
          for (std::string name; std::getline(ss, name, ',');) {
            if (name == "all") {
              cfg.suites = all_suites();
              break;
            }
            auto s = parse_suite(name);
            if (!s) throw InputError("unknown suite '" + name + "'");
            cfg.suites.push_back(*s);
          }
        }
        if (s_r) cfg.r = s_r;
        if (s_ell) cfg.ell = s_ell;
        if (!s_ks.empty()) cfg.ks = parse_ints(s_ks);
        if (s_count) cfg.count = s_count;
        if (s_exhaustive) cfg.exhaustive = true;
      }
      if (!s_sizes.empty()) {
        cfg.sizes.clear();
        std::stringstream ss(s_sizes);
        for (std::string cell; std::getline(ss, cell, ';');) cfg.sizes.push_back(parse_sizes(cell));
      }
      cfg.seed = app.count("--seed") || s_config.empty() ? g.seed : cfg.seed;
      cfg.threads = g.threads;
      if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
      cfg.solver.component_limit = g.component_limit;
      const SearchReport report = run_search(cfg);
      std::cout << report.summary();
      if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        const std::string path = (fs::path(cfg.out_dir) / "report.json").string();
        write_file(path, report.to_json());
        out("report", path);
      }
      const bool anomaly = std::any_of(report.instances.begin(), report.instances.end(),
                                       [](const InstanceOutcome& o) { return o.anomaly; });
      if (anomaly) return static_cast<int>(ExitCode::kAnomaly);
      return report.violations ? static_cast<int>(ExitCode::kVerificationFailed) : 0;
    }
  } catch (const AnomalyError& e) {
    std::cerr << "error code=" << static_cast<int>(e.code()) << " kind=anomaly reason=" << e.what() << '\n';
    if (!e.trace().empty()) std::cerr << e.trace() << '\n';
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    const char* kind = e.code() == ExitCode::kResourceError ? "resource" : "input";
    std::cerr << "error code=" << static_cast<int>(e.code()) << " kind=" << kind << " reason=" << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error code=2 kind=input reason=" << e.what() << '\n';
    return static_cast<int>(ExitCode::kInputError);
  }
  return 0;
}
