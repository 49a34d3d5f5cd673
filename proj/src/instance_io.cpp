#include "mcover/instance_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "mcover/constructions.hpp"

namespace mcover {

namespace {

constexpr std::string_view kMagic = "mcover-instance 1";

const char* host_name(HostKind h) { return h == HostKind::kComplete ? "complete" : "semicomplete"; }

std::string join_sizes(std::span<const std::size_t> sizes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::string descriptor_line(const ConstructionDescriptor& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BasicDescriptor>) {
          return "construct basic " + std::to_string(x.r) + " " + std::to_string(x.t);
        } else if constexpr (std::is_same_v<T, GeneralDescriptor>) {
          return "construct general " + std::to_string(x.r) + " " + std::to_string(x.ell) + " " +
                 std::to_string(x.k) + " " + host_name(x.host);
        } else {
          return "construct nonspanning-sharp " + std::to_string(x.r) + " " + std::to_string(x.k) +
                 " " + join_sizes(x.class_sizes, ',');
        }
      },
      d);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-empty line, split on whitespace; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    while (pos_ < text_.size()) {
      const auto end = text_.find('\n', pos_);
      const auto line = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++line_no_;
      tokens.clear();
      std::istringstream is{std::string(line)};
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("instance line " + std::to_string(line_no_) + ": " + why);
  }

  long long integer(const std::string& tok) const {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("expected an integer, got '" + tok + "'");
    return v;
  }

  void expect(std::vector<std::string>& tokens, const std::string& key, std::size_t min_args,
              std::size_t max_args) {
    if (!next(tokens)) fail("missing '" + key + "' line");
    if (tokens[0] != key) fail("expected '" + key + "', got '" + tokens[0] + "'");
    if (tokens.size() - 1 < min_args || tokens.size() - 1 > max_args) fail("wrong arity for '" + key + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

HostKind parse_host(const LineReader& in, const std::string& tok) {
  if (tok == "complete") return HostKind::kComplete;
  if (tok == "semicomplete") return HostKind::kSemicomplete;
  in.fail("unknown host kind '" + tok + "'");
}

std::vector<std::size_t> parse_sizes(const LineReader& in, const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  for (std::string part; std::getline(ss, part, ',');) {
    const long long v = in.integer(part);
    if (v <= 0) in.fail("class sizes must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

std::string write_instance(const EdgeColoring& coloring, bool spanning_verified, bool force_explicit) {
  const PartiteStructure& s = coloring.structure();
  std::ostringstream os;
  os << kMagic << '\n'
     << "r " << s.r() << '\n'
     << "ell " << s.ell() << '\n'
     << "k " << coloring.num_colors() << '\n'
     << "classes " << join_sizes(s.class_sizes(), ' ') << '\n'
     << "host " << host_name(coloring.host().kind()) << '\n'
     << "flags" << (spanning_verified ? " spanning-verified" : "") << '\n';
  if (coloring.is_rule_backed() && coloring.descriptor() && !force_explicit) {
    os << descriptor_line(*coloring.descriptor()) << '\n';
    return os.str();
  }
  for (const Edge& e : coloring.host().deleted().sorted()) {
    os << "deleted";
    for (Vertex v : e.vertices) os << ' ' << v;
    os << '\n';
  }
  coloring.for_each_edge([&](std::span<const Vertex> e, Color c) {
    os << "edge";
    for (Vertex v : e) os << ' ' << v;
    os << " color " << c << '\n';
  });
  return os.str();
}

std::string write_dual_instance(const DualInstance& dual) {
  std::ostringstream os;
  os << kMagic << '\n'
     << "r " << dual.k << '\n'
     << "ell 1\n"
     << "k " << dual.r << '\n'
     << "classes";
  for (Color c = 1; c <= dual.k; ++c) os << ' ' << dual.class_size(c);
  os << "\nhost complete\nflags dual\n";
  for (std::size_t e = 0; e < dual.edges.size(); ++e) {
    os << "edge";
    for (std::uint32_t x : dual.edges[e]) os << ' ' << x;
    os << " color " << dual.edge_class[e] + 1 << '\n';
  }
  return os.str();
}

InstanceFile parse_instance(std::string_view text) {
  LineReader in(text);
  std::vector<std::string> tok;
  if (!in.next(tok) || tok != std::vector<std::string>{"mcover-instance", "1"}) {
    in.fail("missing 'mcover-instance 1' header");
  }
  in.expect(tok, "r", 1, 1);
  const long long r = in.integer(tok[1]);
  in.expect(tok, "ell", 1, 1);
  const long long ell = in.integer(tok[1]);
  in.expect(tok, "k", 1, 1);
  const long long k = in.integer(tok[1]);
  in.expect(tok, "classes", 1, 4096);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    const long long v = in.integer(tok[i]);
    if (v < 0) in.fail("class sizes must be nonnegative");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  in.expect(tok, "host", 1, 1);
  const HostKind host = parse_host(in, tok[1]);
  in.expect(tok, "flags", 0, 2);
  InstanceFile out;
  bool is_dual = false;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] == "spanning-verified" && !out.spanning_verified) {
      out.spanning_verified = true;
    } else if (tok[i] == "dual" && !is_dual) {
      is_dual = true;
    } else {
      in.fail("unknown or repeated flag '" + tok[i] + "'");
    }
  }

  if (is_dual) {
    if (k < 1 || r < 1 || static_cast<long long>(sizes.size()) != r) in.fail("malformed dual header");
    DualInstance dual;
    dual.k = static_cast<int>(r);
    dual.r = static_cast<int>(k);
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      for (std::size_t s = 0; s < sizes[c]; ++s) {
        dual.vertices.push_back({static_cast<Color>(c + 1), static_cast<Serial>(s + 1)});
      }
    }
    while (in.next(tok)) {
      if (tok[0] != "edge" || tok.size() < 3 || tok[tok.size() - 2] != "color") in.fail("expected a dual edge line");
      std::vector<std::uint32_t> edge;
      std::vector<bool> color_seen(dual.k + 1, false);
      for (std::size_t i = 1; i + 2 < tok.size(); ++i) {
        const long long x = in.integer(tok[i]);
        if (x < 0 || x >= static_cast<long long>(dual.vertices.size())) in.fail("dual vertex out of range");
        const Color c = dual.vertices[x].color;
        if (color_seen[c]) in.fail("dual edge meets a color class twice");
        color_seen[c] = true;
        if (!edge.empty() && static_cast<std::uint32_t>(x) <= edge.back()) in.fail("dual edge not sorted");
        edge.push_back(static_cast<std::uint32_t>(x));
      }
      const long long cls = in.integer(tok.back());
      if (cls < 1 || cls > k) in.fail("dual edge class out of range");
      dual.edges.push_back(std::move(edge));
      dual.edge_class.push_back(static_cast<int>(cls - 1));
    }
    out.dual = std::move(dual);
    return out;
  }

  if (r < 3 || ell < 1 || ell > r || k < 1 || k > 1'000'000) in.fail("header parameters out of range");
  PartiteStructure structure(static_cast<int>(r), static_cast<int>(ell), sizes);

  if (!in.next(tok)) in.fail("instance has no body");
  if (tok[0] == "construct") {
    if (tok.size() < 2) in.fail("construct needs a kind");
    ConstructionDescriptor d;
    if (tok[1] == "basic" && tok.size() == 4) {
      d = BasicDescriptor{static_cast<int>(in.integer(tok[2])), static_cast<int>(in.integer(tok[3]))};
    } else if (tok[1] == "general" && tok.size() == 6) {
      d = GeneralDescriptor{static_cast<int>(in.integer(tok[2])), static_cast<int>(in.integer(tok[3])),
                            static_cast<int>(in.integer(tok[4])), parse_host(in, tok[5])};
    } else if (tok[1] == "nonspanning-sharp" && tok.size() == 5) {
      d = NonspanningSharpDescriptor{static_cast<int>(in.integer(tok[2])),
                                     static_cast<int>(in.integer(tok[3])), parse_sizes(in, tok[4])};
    } else {
      in.fail("malformed construct line");
    }
    EdgeColoring coloring = build(d);
    if (!(coloring.structure() == structure) || coloring.num_colors() != k ||
        coloring.host().kind() != host) {
      in.fail("header does not match the construction");
    }
    if (in.next(tok)) in.fail("unexpected line after construct");
    out.coloring = std::move(coloring);
    return out;
  }

  DeletedEdgeSet deleted;
  std::vector<std::pair<Edge, Color>> colored;
  const auto read_vertices = [&](std::size_t from, std::size_t to) {
    if (to - from != static_cast<std::size_t>(r)) in.fail("edge must list exactly r vertices");
    std::vector<Vertex> vs;
    for (std::size_t i = from; i < to; ++i) {
      const long long v = in.integer(tok[i]);
      if (v < 0 || v >= static_cast<long long>(structure.vertex_count())) in.fail("vertex id out of range");
      if (!vs.empty() && static_cast<Vertex>(v) <= vs.back()) in.fail("edge vertices not in increasing order");
      vs.push_back(static_cast<Vertex>(v));
    }
    if (!is_valid_edge(structure, vs)) in.fail("not a valid edge");
    return Edge(std::move(vs));
  };
  bool in_edges = false;
  do {
    if (tok[0] == "deleted" && !in_edges) {
      Edge e = read_vertices(1, tok.size());
      if (deleted.contains(e.vertices)) in.fail("deleted edge listed twice");
      if (host == HostKind::kSemicomplete) in.fail("semicomplete hosts carry no deleted edges");
      deleted.insert(structure, std::move(e));
    } else if (tok[0] == "edge" && tok.size() >= 3 && tok[tok.size() - 2] == "color") {
      in_edges = true;
      Edge e = read_vertices(1, tok.size() - 2);
      if (!colored.empty() && !(colored.back().first < e)) in.fail("edges not in canonical order");
      const long long c = in.integer(tok.back());
      if (c < 1 || c > k) in.fail("edge color out of range");
      colored.emplace_back(std::move(e), static_cast<Color>(c));
    } else {
      in.fail("unexpected line '" + tok[0] + "'");
    }
  } while (in.next(tok));

  auto hg = std::make_shared<const Hypergraph>(structure, host, std::move(deleted));
  out.coloring = EdgeColoring::from_edges(std::move(hg), static_cast<int>(k), colored);
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

std::string instance_digest(const InstanceFile& file) {
  std::string canonical;
  if (file.dual) {
    canonical = write_dual_instance(*file.dual);
  } else {
    canonical = write_instance(*file.coloring, file.spanning_verified, !file.coloring->is_rule_backed());
  }
  return "sha256:" + sha256_hex(canonical);
}

std::string instance_digest(std::string_view text) { return instance_digest(parse_instance(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace mcover
