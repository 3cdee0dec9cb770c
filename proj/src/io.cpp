#include "toric/io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace toric {

namespace {

struct LineReader {
  std::istream& in;
  int line = 0;

  // next non-comment, non-blank line split into tokens; false at end
  bool next(std::vector<std::string>& tok) {
    std::string s;
    while (std::getline(in, s)) {
      ++line;
      auto h = s.find('#');
      if (h != std::string::npos) s.erase(h);
      std::istringstream ss(s);
      tok.clear();
      for (std::string t; ss >> t;) tok.push_back(t);
      if (!tok.empty()) return true;
    }
    return false;
  }
};

bool is_int_token(const std::string& t) {
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Integer parse_int(const std::string& t, int line) {
  if (!is_int_token(t)) throw ParseError(line, "not an integer: '" + t + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

long parse_count(const std::string& t, int line) {
  const Integer v = parse_int(t, line);
  if (v < 0 || v > 1000000) throw ParseError(line, "bad count '" + t + "'");
  return v.convert_to<long>();
}

std::vector<IntVector> read_rows(LineReader& r, long rows, long n, const char* what) {
  std::vector<IntVector> out;
  std::vector<std::string> tok;
  for (long i = 0; i < rows; ++i) {
    if (!r.next(tok))
      throw ParseError(r.line, "expected " + std::to_string(rows) + " " + what + " rows, got " +
                                   std::to_string(i));
    if (long(tok.size()) != n)
      throw ParseError(r.line, "expected " + std::to_string(n) + " entries, got " +
                                   std::to_string(tok.size()));
    IntVector v(n);
    for (long j = 0; j < n; ++j) v(j) = parse_int(tok[j], r.line);
    out.push_back(v);
  }
  return out;
}

void expect_end(LineReader& r) {
  std::vector<std::string> tok;
  if (r.next(tok)) throw ParseError(r.line, "unexpected trailing data");
}

}  // namespace

PolytopeInput parse_polytope(std::istream& in) {
  LineReader r{in};
  std::vector<std::string> tok;
  if (!r.next(tok)) throw ParseError(r.line, "missing header");
  if (tok.size() != 2) throw ParseError(r.line, "header must be 'rank count'");
  const long n = parse_count(tok[0], r.line), d = parse_count(tok[1], r.line);
  if (n == 0) throw ParseError(r.line, "rank must be positive");
  PolytopeInput out;
  out.rows = read_rows(r, d, n, "vertex");
  expect_end(r);
  std::set<IntVector, LexLess> seen;
  for (const auto& v : out.rows)
    if (!seen.insert(v).second) out.warnings.push_back("duplicate vertex " + to_string(v));
  if (d == 0) throw Error("no vertices");
  out.polytope = std::make_shared<const LatticePolytope>(LatticePolytope::from_vertices(out.rows));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

PolytopeInput read_polytope_file(const std::string& path) {
  std::istringstream in(read_file(path));
  try {
    return parse_polytope(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_polytope(std::ostream& out, const std::vector<IntVector>& vertices) {
  const long n = vertices.empty() ? 0 : long(vertices[0].size());
  out << n << ' ' << vertices.size() << '\n';
  for (const auto& v : vertices) {
    for (long i = 0; i < n; ++i) out << (i ? " " : "") << v(i);
    out << '\n';
  }
}

Triangulation parse_triangulation(std::istream& in, std::shared_ptr<const LatticePolytope> host) {
  LineReader r{in};
  std::vector<std::string> tok;
  if (!r.next(tok)) throw ParseError(r.line, "missing header");
  if (tok.size() != 3) throw ParseError(r.line, "header must be 'rank points simplices'");
  const int header = r.line;
  const long n = parse_count(tok[0], r.line), p = parse_count(tok[1], r.line),
             m = parse_count(tok[2], r.line);
  if (n != host->rank()) throw ParseError(header, "rank does not match the polytope");
  auto points = read_rows(r, p, n, "point");
  std::vector<Simplex> simp;
  for (long i = 0; i < m; ++i) {
    if (!r.next(tok))
      throw ParseError(r.line, "expected " + std::to_string(m) + " simplex rows, got " +
                                   std::to_string(i));
    if (long(tok.size()) != n)
      throw ParseError(r.line, "simplex needs " + std::to_string(n) + " indices");
    Simplex s;
    for (const auto& t : tok) {
      const long k = parse_count(t, r.line);
      if (k >= p) throw ParseError(r.line, "point index " + t + " out of range");
      s.push_back(int(k));
    }
    simp.push_back(s);
  }
  expect_end(r);
  return Triangulation::from_simplices(std::move(host), std::move(points), std::move(simp));
}

Triangulation read_triangulation_file(const std::string& path,
                                      std::shared_ptr<const LatticePolytope> host) {
  std::istringstream in(read_file(path));
  try {
    return parse_triangulation(in, std::move(host));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_triangulation(std::ostream& out, const Triangulation& T) {
  const int n = T.rank();
  out << n << ' ' << T.points().size() << ' ' << T.maximal().size() << '\n';
  for (const auto& v : T.points()) {
    for (int i = 0; i < n; ++i) out << (i ? " " : "") << v(i);
    out << '\n';
  }
  for (const auto& s : T.maximal()) {
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

Divisor parse_divisor(const std::string& text, const DivisorLattice& DL) {
  if (text == "anticanonical") return anticanonical(DL);
  std::vector<Rational> vals;
  std::stringstream ss(text);
  for (std::string t; std::getline(ss, t, ',');) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    const auto slash = t.find('/');
    const std::string num = t.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (num.empty() || !is_int_token(num) || den.empty() || !is_int_token(den))
      throw Error("bad divisor coefficient '" + t + "'");
    const Integer q(den[0] == '+' ? den.substr(1) : den);
    if (q == 0) throw Error("zero denominator in '" + t + "'");
    vals.push_back(Rational(Integer(num[0] == '+' ? num.substr(1) : num), q));
  }
  if (long(vals.size()) != DL.d)
    throw Error("divisor needs " + std::to_string(DL.d) + " coefficients, got " +
                std::to_string(vals.size()));
  Divisor rho(DL.d);
  for (int i = 0; i < DL.d; ++i) rho(i) = vals[i];
  return rho;
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) {
    if (mp::abs(v(i)) < (Integer(1) << 62))
      a.push_back(v(i).convert_to<long long>());
    else
      a.push_back(v(i).str());
  }
  return a;
}

Json vector_json(const RatVector& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json vectors_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

Json hodge_json(const HodgeReport& h) {
  Json j;
  j["d"] = h.d;
  j["n"] = h.n;
  j["base"] = h.base;
  Json c = Json::array();
  for (const auto& t : h.corrections)
    if (t.product)
      c.push_back({{"face", t.face}, {"dual_face", t.dual_face}, {"interior", t.interior},
                   {"dual_interior", t.dual_interior}, {"product", t.product}});
  j["corrections"] = c;
  j["total"] = h.total;
  return j;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["digest"] = digest;
  j["result"] = payload;
  j["warnings"] = warnings;
  return j;
}

std::string Report::machine() const { return to_json().dump(1) + "\n"; }

namespace {

void flatten(std::ostream& out, const std::string& key, const Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(out, key.empty() ? it.key() : key + "." + it.key(), it.value());
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(out, key + "[" + std::to_string(i) + "]", j[i]);
    return;
  }
  out << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  out << command << " (" << digest << ")\n";
  flatten(out, "", payload);
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  return out.str();
}

}  // namespace toric
