#include "tatepol/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tatepol::doc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_from_literal(std::string s) {
  if (!is_integer_literal(s)) fail("malformed integer \"" + s + "\"");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::size_t parse_size(const json& j, const char* what) {
  Integer z = parse_integer(j);
  if (z < 0 || !z.fits_ulong_p()) fail(std::string(what) + " must be a non-negative integer");
  return z.get_ui();
}

template <class T, class Parse>
Matrix<T> parse_matrix(const json& j, Parse&& parse_entry) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) fail("matrix row must be an array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) fail("matrix rows have different lengths");
  }
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_entry(j[i][k]);
  return m;
}

void require_size(const IntMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) fail(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
}

}  // namespace

Kind detect_kind(const json& j) {
  if (!j.is_object()) fail("document must be a JSON object");
  if (j.contains("nodes")) return Kind::family;
  if (j.contains("phi")) return Kind::base_map;
  if (j.contains("toric_rank")) return Kind::semiabelian;
  if (j.contains("E")) return Kind::bundle;
  if (j.contains("genus")) return Kind::torus;
  fail("unrecognized document");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::torus: return "torus";
    case Kind::bundle: return "bundle";
    case Kind::semiabelian: return "semiabelian";
    case Kind::family: return "family";
    case Kind::base_map: return "base_map";
  }
  return "unknown";
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) return integer_from_literal(j.get<std::string>());
  fail("expected an integer, got " + j.dump());
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(parse_integer(j));
  if (!j.is_string()) fail("expected a rational (\"p/q\" string or integer), got " + j.dump());
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_literal(s));
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) fail("malformed rational \"" + s + "\"");
  Integer d = integer_from_literal(den);
  if (d == 0) fail("zero denominator in \"" + s + "\"");
  Rational q(integer_from_literal(num), d);
  q.canonicalize();
  return q;
}

IntMatrix parse_int_matrix(const json& j) { return parse_matrix<Integer>(j, parse_integer); }
RatMatrix parse_rat_matrix(const json& j) { return parse_matrix<Rational>(j, parse_rational); }

RawTorus parse_raw_torus(const json& j) {
  RawTorus t;
  t.genus = parse_size(field(j, "genus"), "genus");
  t.J = parse_rat_matrix(field(j, "J"));
  if (t.J.rows() != 2 * t.genus || t.J.cols() != 2 * t.genus) fail("J must be 2g x 2g");
  return t;
}

RawBundle parse_raw_bundle(const json& j, std::size_t lattice_rank) {
  RawBundle b;
  b.E = parse_int_matrix(field(j, "E"));
  require_size(b.E, lattice_rank, "E");
  const json& rho = field(j, "rho");
  if (!rho.is_array() || rho.size() != lattice_rank) fail("rho must list one angle per lattice basis vector");
  for (const auto& a : rho) b.rho.push_back(parse_rational(a));
  return b;
}

RawSemiabelian parse_raw_semiabelian(const json& j) {
  RawSemiabelian g;
  g.toric_rank = parse_size(field(j, "toric_rank"), "toric_rank");
  g.abelian = parse_raw_torus(field(j, "abelian"));
  g.bundle = parse_raw_bundle(field(j, "bundle"), 2 * g.abelian.genus);
  return g;
}

ComplexTorus parse_torus(const json& j) {
  RawTorus t = parse_raw_torus(j);
  return make_torus(t.genus, std::move(t.J));
}

AppellHumbertBundle parse_bundle(const json& j) {
  ComplexTorus t = parse_torus(field(j, "torus"));
  RawBundle b = parse_raw_bundle(j, t.lattice_rank());
  return make_bundle(t, std::move(b.E), std::move(b.rho));
}

SemiabelianModel parse_semiabelian(const json& j) {
  RawSemiabelian g = parse_raw_semiabelian(j);
  ComplexTorus t = make_torus(g.abelian.genus, std::move(g.abelian.J));
  return SemiabelianModel(g.toric_rank, make_bundle(t, std::move(g.bundle.E), std::move(g.bundle.rho)));
}

TorusFamily parse_family(const json& j) {
  TorusFamily f;
  const json& nodes = field(j, "nodes");
  if (!nodes.is_object()) fail("\"nodes\" must be an object keyed by node id");
  for (const auto& [id, node] : nodes.items()) f.nodes.emplace(id, parse_semiabelian(node));
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) fail("\"edges\" must be an array");
    for (const auto& e : edges) {
      const json& src = field(e, "src");
      const json& dst = field(e, "dst");
      if (!src.is_string() || !dst.is_string()) fail("edge endpoints must be node id strings");
      f.edges.push_back({src.get<std::string>(), dst.get<std::string>(), parse_int_matrix(field(e, "M"))});
    }
  }
  return f;
}

BaseMap parse_base_map(const json& j) {
  BaseMap m;
  const json& phi = field(j, "phi");
  if (!phi.is_object()) fail("\"phi\" must map node ids to node ids");
  for (const auto& [from, to] : phi.items()) {
    if (!to.is_string()) fail("\"phi\" values must be node id strings");
    m.phi.emplace(from, to.get<std::string>());
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) fail("base map \"edges\" must be an array");
    for (const auto& e : edges) {
      const json& src = field(e, "src");
      const json& dst = field(e, "dst");
      if (!src.is_string() || !dst.is_string()) fail("base map edge endpoints must be strings");
      m.edges.push_back({src.get<std::string>(), dst.get<std::string>(), parse_size(field(e, "over"), "over")});
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json rational_json(const Rational& q) { return json(q.get_str()); }

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ComplexTorus& t) { return json{{"genus", t.genus()}, {"J", to_json(t.J())}}; }

json to_json(const AppellHumbertBundle& b) {
  json rho = json::array();
  for (const auto& a : b.rho().angles) rho.push_back(rational_json(a));
  return json{{"E", to_json(b.E())}, {"rho", std::move(rho)}};
}

json bundle_document(const AppellHumbertBundle& b) {
  json j = to_json(b);
  j["torus"] = to_json(b.torus());
  return j;
}

json to_json(const SemiabelianModel& g) {
  return json{{"toric_rank", g.toric_rank()}, {"abelian", to_json(g.abelian())}, {"bundle", to_json(g.bundle())}};
}

json to_json(const TorusFamily& f) {
  json nodes = json::object();
  for (const auto& [id, g] : f.nodes) nodes[id] = to_json(g);
  json edges = json::array();
  for (const auto& e : f.edges) edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"M", to_json(e.M)}});
  return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json to_json(const BaseMap& m) {
  json phi = json::object();
  for (const auto& [from, to] : m.phi) phi[from] = to;
  json edges = json::array();
  for (const auto& e : m.edges) edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"over", e.over}});
  return json{{"phi", std::move(phi)}, {"edges", std::move(edges)}};
}

json to_json(const FamilyReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back(json{{"kind", x.kind == Violation::Kind::node ? "node" : "edge"}, {"where", x.where}, {"what", x.what}});
  return json{{"ok", r.ok()}, {"violations", std::move(v)}};
}

}  // namespace tatepol::doc
