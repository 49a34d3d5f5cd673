#include "mcover/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "mcover/instance_io.hpp"

namespace mcover {

const char* claim_name(ClaimType c) {
  switch (c) {
    case ClaimType::kCover: return "cover";
    case ClaimType::kMinCover: return "min-cover";
    case ClaimType::kNoCoverOfSize: return "no-cover-of-size";
    case ClaimType::kSpanning: return "spanning";
    case ClaimType::kBoundCheck: return "bound-check";
  }
  return "?";
}

std::vector<CertificateFile::Entry> certificate_entries(const ComponentDecomposition& d,
                                                        const Cover& cover) {
  std::vector<CertificateFile::Entry> out;
  for (const ComponentRef& ref : cover.components) {
    CertificateFile::Entry e{ref, {}};
    const VertexSet& s = d.component(ref).vertices;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
      e.vertices.push_back(static_cast<Vertex>(v));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string write_certificate(const CertificateFile& cert) {
  std::ostringstream os;
  os << "mcover-certificate 1\n"
     << "instance-digest " << cert.instance_digest << '\n';
  if (!cert.instance_file.empty()) os << "instance-file " << cert.instance_file << '\n';
  os << "claim " << claim_name(cert.claim) << '\n';
  const auto write_components = [&] {
    for (const auto& e : cert.components) {
      os << "component " << e.ref.color << ' ' << e.ref.serial << " :";
      for (Vertex v : e.vertices) os << ' ' << v;
      os << '\n';
    }
  };
  switch (cert.claim) {
    case ClaimType::kCover:
    case ClaimType::kMinCover:
    case ClaimType::kNoCoverOfSize:
      os << "size " << cert.size << '\n';
      if (cert.claim == ClaimType::kNoCoverOfSize) os << "verdict " << cert.verdict << '\n';
      write_components();
      if (cert.claim != ClaimType::kNoCoverOfSize) os << "verdict " << cert.verdict << '\n';
      break;
    case ClaimType::kSpanning:
      os << "verdict " << cert.verdict << '\n';
      if (cert.witness) os << "witness " << cert.witness->first << ' ' << cert.witness->second << '\n';
      break;
    case ClaimType::kBoundCheck:
      os << "bound " << cert.bound_r << ' ' << cert.bound_ell << ' ' << cert.bound_k << ' '
         << cert.bound_value << '\n'
         << "relation " << cert.relation << '\n';
      write_components();
      break;
  }
  return os.str();
}

namespace {

struct Tokens {
  std::vector<std::vector<std::string>> lines;
  std::size_t at = 0;

  explicit Tokens(std::string_view text) {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      std::istringstream ls(line);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) tok.push_back(t);
      if (!tok.empty()) lines.push_back(std::move(tok));
    }
  }
  bool done() const { return at == lines.size(); }
  const std::vector<std::string>* peek() const { return done() ? nullptr : &lines[at]; }
  const std::vector<std::string>& take(const std::string& key, std::size_t arity) {
    if (done()) throw InputError("certificate: missing '" + key + "'");
    const auto& t = lines[at];
    if (t[0] != key || t.size() != arity + 1) throw InputError("certificate: expected '" + key + "'");
    ++at;
    return t;
  }
};

long long number(const std::string& tok) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw InputError("certificate: bad integer '" + tok + "'");
  return v;
}

void read_components(Tokens& in, CertificateFile& cert) {
  while (const auto* t = in.peek()) {
    if ((*t)[0] != "component") break;
    if (t->size() < 4 || (*t)[3] != ":") throw InputError("certificate: malformed component line");
    CertificateFile::Entry e{{static_cast<Color>(number((*t)[1])), static_cast<Serial>(number((*t)[2]))}, {}};
    for (std::size_t i = 4; i < t->size(); ++i) {
      const long long v = number((*t)[i]);
      if (v < 0) throw InputError("certificate: negative vertex id");
      e.vertices.push_back(static_cast<Vertex>(v));
    }
    cert.components.push_back(std::move(e));
    ++in.at;
  }
}

}  // namespace

CertificateFile parse_certificate(std::string_view text) {
  Tokens in(text);
  CertificateFile cert;
  const auto& magic = in.take("mcover-certificate", 1);
  if (magic[1] != "1") throw InputError("certificate: unsupported version");
  cert.instance_digest = in.take("instance-digest", 1)[1];
  if (const auto* t = in.peek(); t && (*t)[0] == "instance-file") cert.instance_file = in.take("instance-file", 1)[1];
  const std::string claim = in.take("claim", 1)[1];
  if (claim == "cover" || claim == "min-cover") {
    cert.claim = claim == "cover" ? ClaimType::kCover : ClaimType::kMinCover;
    cert.size = static_cast<int>(number(in.take("size", 1)[1]));
    read_components(in, cert);
    cert.verdict = in.take("verdict", 1)[1];
  } else if (claim == "no-cover-of-size") {
    cert.claim = ClaimType::kNoCoverOfSize;
    cert.size = static_cast<int>(number(in.take("size", 1)[1]));
    cert.verdict = in.take("verdict", 1)[1];
    read_components(in, cert);
  } else if (claim == "spanning") {
    cert.claim = ClaimType::kSpanning;
    cert.verdict = in.take("verdict", 1)[1];
    if (!in.done()) {
      const auto& w = in.take("witness", 2);
      const long long v = number(w[1]);
      if (v < 0) throw InputError("certificate: negative vertex id");
      cert.witness = std::make_pair(static_cast<Vertex>(v), static_cast<Color>(number(w[2])));
    }
  } else if (claim == "bound-check") {
    cert.claim = ClaimType::kBoundCheck;
    const auto& b = in.take("bound", 4);
    cert.bound_r = static_cast<int>(number(b[1]));
    cert.bound_ell = static_cast<int>(number(b[2]));
    cert.bound_k = static_cast<int>(number(b[3]));
    cert.bound_value = static_cast<int>(number(b[4]));
    cert.relation = in.take("relation", 1)[1];
    read_components(in, cert);
  } else {
    throw InputError("certificate: unknown claim '" + claim + "'");
  }
  if (!in.done()) throw InputError("certificate: trailing lines");
  return cert;
}

namespace {

// Independent exhaustive check: does some subset of exactly m sets cover
// everything? Plain recursion over index choices.
class SubsetSearch {
 public:
  SubsetSearch(std::vector<VertexSet> sets, std::size_t n, std::uint64_t budget)
      : sets_(std::move(sets)), n_(n), budget_(budget) {}

  bool exists(int m) {
    if (m <= 0) return n_ == 0;
    if (static_cast<std::size_t>(m) > sets_.size()) m = static_cast<int>(sets_.size());
    return pick(0, m, VertexSet(n_));
  }

 private:
  bool pick(std::size_t from, int left, const VertexSet& acc) {
    if (left == 0) {
      if (++visited_ > budget_) throw ResourceError("verification exceeded its subset budget");
      return acc.all();
    }
    for (std::size_t i = from; i + left <= sets_.size(); ++i) {
      if (pick(i + 1, left - 1, acc | sets_[i])) return true;
    }
    return false;
  }

  std::vector<VertexSet> sets_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
};

VerifyResult reject(std::string why) { return {false, std::move(why)}; }

}  // namespace

VerifyResult verify_certificate(std::string_view instance_text, std::string_view certificate_text,
                                std::uint64_t subset_budget) {
  CertificateFile cert;
  try {
    cert = parse_certificate(certificate_text);
  } catch (const InputError& e) {
    return reject(std::string("malformed certificate: ") + e.what());
  }
  const InstanceFile inst = parse_instance(instance_text);
  if (instance_digest(inst) != cert.instance_digest) return reject("instance digest mismatch");
  if (!inst.coloring) return reject("certificates refer to colored instances, not duals");
  const EdgeColoring& coloring = *inst.coloring;
  const ComponentDecomposition d = decompose(coloring);
  const std::size_t n = d.vertex_count();

  // Listed components must match the instance's components exactly.
  std::set<ComponentRef> seen;
  VertexSet listed_union(n);
  for (const auto& entry : cert.components) {
    const ComponentRef ref = entry.ref;
    if (ref.color < 1 || ref.color > d.num_colors() || ref.serial < 1 ||
        ref.serial > static_cast<Serial>(d.components_of(ref.color).size())) {
      return reject("component reference out of range");
    }
    if (!seen.insert(ref).second) return reject("component listed twice");
    VertexSet claimed(n);
    for (std::size_t i = 0; i < entry.vertices.size(); ++i) {
      const Vertex v = entry.vertices[i];
      if (v >= n || (i > 0 && v <= entry.vertices[i - 1])) return reject("component vertex list malformed");
      claimed.set(v);
    }
    if (claimed != d.component(ref).vertices) {
      return reject("component " + std::to_string(ref.color) + "/" + std::to_string(ref.serial) +
                    " does not match the instance");
    }
    listed_union |= claimed;
  }

  std::vector<VertexSet> sets;
  for (const ComponentRef& ref : d.refs()) sets.push_back(d.component(ref).vertices);
  SubsetSearch search(std::move(sets), n, subset_budget);
  const int listed = static_cast<int>(cert.components.size());

  switch (cert.claim) {
    case ClaimType::kCover:
    case ClaimType::kMinCover: {
      if (listed != cert.size) return reject("size does not match the component count");
      const bool ok = listed_union.all();
      if (cert.verdict != (ok ? "covers" : "does-not-cover")) return reject("cover verdict is wrong");
      if (cert.claim == ClaimType::kMinCover) {
        if (!ok) return reject("a minimum cover must cover");
        if (search.exists(cert.size - 1)) return reject("a smaller cover exists");
      }
      return {true, "ok"};
    }
    case ClaimType::kNoCoverOfSize: {
      if (cert.size < 0) return reject("negative size");
      const bool exists = search.exists(cert.size);
      if (cert.verdict == "none") {
        if (exists) return reject("a cover of the stated size exists");
        if (listed != 0) return reject("unexpected witness");
        return {true, "ok"};
      }
      if (cert.verdict != "exists") return reject("unknown verdict");
      if (listed == 0 || listed > cert.size || !listed_union.all()) return reject("witness is not a cover of the stated size");
      return {true, "ok"};
    }
    case ClaimType::kSpanning: {
      const SpanningCheck sp = is_spanning(coloring, d);
      if (cert.verdict == "spanning") {
        if (!sp.spanning) return reject("coloring is not spanning");
        if (cert.witness) return reject("unexpected witness");
        return {true, "ok"};
      }
      if (cert.verdict != "not-spanning" || sp.spanning || !cert.witness) return reject("spanning verdict is wrong");
      const auto [v, c] = *cert.witness;
      if (v >= n || c < 1 || c > d.num_colors() || d.components_of(c).empty() || d.serial(v, c) != kIsolated) {
        return reject("witness vertex does meet the color");
      }
      return {true, "ok"};
    }
    case ClaimType::kBoundCheck: {
      const PartiteStructure& s = coloring.structure();
      if (cert.bound_r != s.r() || cert.bound_ell != s.ell()) return reject("bound parameters do not match");
      int used = 0;
      for (Color c = 1; c <= d.num_colors(); ++c) used += !d.components_of(c).empty();
      if (cert.bound_k < used) return reject("bound k below the colors in use");
      int expected = 0;
      try {
        expected = bound_formula(cert.bound_r, cert.bound_ell, cert.bound_k);
      } catch (const InputError&) {
        return reject("bound parameters out of range");
      }
      if (cert.bound_value != expected) return reject("bound value does not match the formula");
      const bool need_cover = cert.relation == "eq" || cert.relation == "le";
      const bool need_lower = cert.relation == "eq" || cert.relation == "ge";
      if (!need_cover && !need_lower) return reject("unknown relation");
      if (need_cover) {
        if (!listed_union.all()) return reject("listed components do not cover");
        if (cert.relation == "eq" ? listed != cert.bound_value : listed > cert.bound_value) {
          return reject("cover size does not satisfy the relation");
        }
      } else if (listed != 0) {
        return reject("unexpected components");
      }
      if (need_lower && search.exists(cert.bound_value - 1)) return reject("a cover below the bound exists");
      return {true, "ok"};
    }
  }
  return reject("unknown claim");
}

}  // namespace mcover
