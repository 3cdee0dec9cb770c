#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toric {

namespace {

int affine_dim(const std::vector<IntVector>& pts, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  if (idx.size() == 1) return 0;
  const IntVector& base = pts[idx[0]];
  IntMatrix M(base.size(), idx.size() - 1);
  for (size_t i = 1; i < idx.size(); ++i) M.col(i - 1) = pts[idx[i]] - base;
  return rank(M);
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

long to_long(const Integer& x) {
  if (abs(x) > Integer(1) << 40) throw Error("coordinate too large for box enumeration");
  return x.convert_to<long>();
}

Integer floor_q(const Rational& q) {
  Integer f = mp::numerator(q) / mp::denominator(q);
  if (Rational(f) > q) f -= 1;
  return f;
}

Integer ceil_q(const Rational& q) {
  Integer f = mp::numerator(q) / mp::denominator(q);
  if (Rational(f) < q) f += 1;
  return f;
}

bool rat_lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

// odometer over an integer box, first coordinate most significant
template <typename F>
void scan_box(const std::vector<long>& lo, const std::vector<long>& hi, F&& visit) {
  const size_t n = lo.size();
  for (size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<long> x = lo;
  while (true) {
    visit(x);
    long i = long(n) - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++x[i];
  }
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error("empty point set");
  const int n = int(points[0].size());
  if (n == 0) throw Error("rank must be positive");
  std::set<IntVector, LexLess> uniq;
  for (const auto& p : points) {
    if (p.size() != n) throw Error("points of mixed rank");
    uniq.insert(p);
  }
  std::vector<IntVector> pts(uniq.begin(), uniq.end());

  std::vector<IntVector> hom;
  for (const auto& p : pts) {
    IntVector h(n + 1);
    h.head(n) = p;
    h(n) = 1;
    hom.push_back(h);
  }
  ConeDescription cd = double_description(hom, n + 1);
  if (!cd.lineality.empty()) throw Error("points are not full-dimensional");

  std::vector<Facet> facets;
  for (const auto& r : cd.rays) {
    IntVector u = r.head(n);
    if (u.isZero()) continue;
    u = primitive(u);
    Integer mn = dot(u, pts[0]);
    for (const auto& p : pts) mn = std::min(mn, Integer(dot(u, p)));
    Integer c = -mn;
    if (c <= 0) throw Error("origin is not in the interior");
    facets.push_back({u, c});
  }
  if (int(facets.size()) < n + 1) throw Error("points are not full-dimensional");
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });

  LatticePolytope P;
  P.n_ = n;
  P.facets_ = facets;
  for (const auto& p : pts) {
    std::vector<IntVector> tight;
    for (const auto& f : facets)
      if (dot(f.normal, p) == -f.offset) tight.push_back(f.normal);
    if (int(tight.size()) >= n && toric::rank(columns(tight, n)) == n) P.vertices_.push_back(p);
  }

  const auto& V = P.vertices_;
  const int nf = int(facets.size());
  std::vector<std::vector<int>> fverts(nf);
  for (int j = 0; j < nf; ++j)
    for (int v = 0; v < int(V.size()); ++v)
      if (dot(facets[j].normal, V[v]) == -facets[j].offset) fverts[j].push_back(v);

  auto facets_of = [&](const std::vector<int>& S) {
    std::vector<int> r;
    for (int j = 0; j < nf; ++j)
      if (std::includes(fverts[j].begin(), fverts[j].end(), S.begin(), S.end())) r.push_back(j);
    return r;
  };

  // generate faces top-down; each (k-1)-face is a k-face cut by a facet
  std::vector<std::map<std::vector<int>, Face>> level(n);
  std::map<std::vector<int>, std::set<std::vector<int>>> kids;
  for (int j = 0; j < nf; ++j) {
    Face f;
    f.dim = n - 1;
    f.vertices = fverts[j];
    f.facets = {j};
    if (affine_dim(V, f.vertices) != n - 1) throw Error("degenerate facet");
    level[n - 1][f.vertices] = f;
  }
  for (int k = n - 1; k >= 1; --k) {
    for (const auto& [verts, G] : level[k]) {
      for (int j = 0; j < nf; ++j) {
        if (std::binary_search(G.facets.begin(), G.facets.end(), j)) continue;
        std::vector<int> S = intersect(verts, fverts[j]);
        if (int(S.size()) < k) continue;
        auto it = level[k - 1].find(S);
        if (it == level[k - 1].end()) {
          if (affine_dim(V, S) != k - 1) continue;
          Face h;
          h.dim = k - 1;
          h.vertices = S;
          h.facets = facets_of(S);
          level[k - 1][S] = h;
        }
        kids[verts].insert(S);
      }
    }
  }
  for (int k = 0; k < n; ++k)
    for (auto& [verts, f] : level[k]) {
      f.id = int(P.faces_.size());
      P.faces_.push_back(f);
      P.by_vertices_[verts] = f.id;
      P.by_facets_[f.facets] = f.id;
    }
  P.children_.assign(P.faces_.size(), {});
  for (const auto& [verts, ch] : kids) {
    int id = P.by_vertices_.at(verts);
    for (const auto& c : ch) P.children_[id].push_back(P.by_vertices_.at(c));
    std::sort(P.children_[id].begin(), P.children_[id].end());
  }
  P.facet_face_.resize(nf);
  for (int j = 0; j < nf; ++j) P.facet_face_[j] = P.by_vertices_.at(fverts[j]);
  return P;
}

const Face& LatticePolytope::face(int id) const {
  if (id < 0 || id >= int(faces_.size())) throw Error("unknown face id " + std::to_string(id));
  return faces_[id];
}

std::vector<int> LatticePolytope::faces_of_dim(int k) const {
  std::vector<int> r;
  for (const auto& f : faces_)
    if (f.dim == k) r.push_back(f.id);
  return r;
}

int LatticePolytope::face_with_vertices(const std::vector<int>& s) const {
  auto it = by_vertices_.find(s);
  return it == by_vertices_.end() ? -1 : it->second;
}

int LatticePolytope::face_with_facets(const std::vector<int>& s) const {
  auto it = by_facets_.find(s);
  return it == by_facets_.end() ? -1 : it->second;
}

int LatticePolytope::facet_face(int j) const { return facet_face_.at(j); }

int LatticePolytope::vertex_face(int v) const { return face_with_vertices({v}); }

bool LatticePolytope::contains(const IntVector& x) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) < -f.offset) return false;
  return true;
}

std::vector<int> LatticePolytope::tight_facets(const IntVector& x) const {
  std::vector<int> t;
  for (int j = 0; j < int(facets_.size()); ++j) {
    Integer v = dot(facets_[j].normal, x) + facets_[j].offset;
    if (v < 0) throw Error("point " + to_string(x) + " lies outside the polytope");
    if (v == 0) t.push_back(j);
  }
  return t;
}

int LatticePolytope::minimal_face(const IntVector& x) const {
  std::vector<int> t = tight_facets(x);
  if (t.empty()) return -1;
  int id = face_with_facets(t);
  if (id < 0) throw Error("no face with facet set for " + to_string(x));
  return id;
}

int LatticePolytope::vertex_index(const IntVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v, LexLess());
  if (it != vertices_.end() && equal(*it, v)) return int(it - vertices_.begin());
  return -1;
}

// ---------------------------------------------------------------------------

int RationalPolytope::dimension() const {
  if (vertices.empty()) return -1;
  if (vertices.size() == 1) return 0;
  RatMatrix M(n, vertices.size() - 1);
  for (size_t i = 1; i < vertices.size(); ++i) M.col(i - 1) = vertices[i] - vertices[0];
  return rank(M);
}

bool RationalPolytope::contains(const RatVector& y) const {
  for (const auto& h : halfspaces)
    if (dot(y, h.normal) < -h.offset) return false;
  return true;
}

bool RationalPolytope::interior_contains(const RatVector& y) const {
  if (dimension() < n) return false;
  for (const auto& h : halfspaces)
    if (dot(y, h.normal) <= -h.offset) return false;
  return true;
}

RationalPolytope dual_polytope(const LatticePolytope& P) {
  RationalPolytope D;
  D.n = P.rank();
  for (const auto& f : P.facets()) {
    RatVector v = to_rational(f.normal);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= Rational(f.offset);
    D.vertices.push_back(v);
  }
  for (const auto& v : P.vertices()) D.halfspaces.push_back({v, Rational(1)});
  return D;
}

bool is_reflexive(const LatticePolytope& P) {
  for (const auto& f : P.facets())
    if (f.offset != 1) return false;
  return true;
}

LatticePolytope dual_lattice_polytope(const LatticePolytope& P) {
  if (!is_reflexive(P)) throw Error("polytope is not reflexive");
  std::vector<IntVector> vs;
  for (const auto& f : P.facets()) vs.push_back(f.normal);
  return LatticePolytope::from_vertices(vs);
}

std::vector<ClassifiedPoint> lattice_points(const LatticePolytope& P) {
  const int n = P.rank();
  std::vector<long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = hi[i] = to_long(P.vertices()[0](i));
    for (const auto& v : P.vertices()) {
      lo[i] = std::min(lo[i], to_long(v(i)));
      hi[i] = std::max(hi[i], to_long(v(i)));
    }
  }
  const auto& F = P.facets();
  std::vector<std::vector<long>> u(F.size(), std::vector<long>(n));
  std::vector<long> c(F.size());
  for (size_t j = 0; j < F.size(); ++j) {
    for (int i = 0; i < n; ++i) u[j][i] = to_long(F[j].normal(i));
    c[j] = to_long(F[j].offset);
  }
  std::vector<ClassifiedPoint> out;
  std::vector<int> tight;
  scan_box(lo, hi, [&](const std::vector<long>& x) {
    tight.clear();
    for (size_t j = 0; j < F.size(); ++j) {
      long s = c[j];
      for (int i = 0; i < n; ++i) s += u[j][i] * x[i];
      if (s < 0) return;
      if (s == 0) tight.push_back(int(j));
    }
    ClassifiedPoint cp;
    cp.point.resize(n);
    for (int i = 0; i < n; ++i) cp.point(i) = x[i];
    cp.face = tight.empty() ? -1 : P.face_with_facets(tight);
    if (!tight.empty() && cp.face < 0) throw Error("unclassified boundary point");
    out.push_back(std::move(cp));
  });
  return out;
}

std::vector<IntVector> lattice_points(const RationalPolytope& P) {
  if (P.vertices.empty()) return {};
  std::vector<long> lo(P.n), hi(P.n);
  for (int i = 0; i < P.n; ++i) {
    Rational a = P.vertices[0](i), b = a;
    for (const auto& v : P.vertices) {
      a = std::min(a, v(i));
      b = std::max(b, v(i));
    }
    lo[i] = to_long(ceil_q(a));
    hi[i] = to_long(floor_q(b));
  }
  std::vector<IntVector> out;
  scan_box(lo, hi, [&](const std::vector<long>& x) {
    RatVector y(P.n);
    for (int i = 0; i < P.n; ++i) y(i) = x[i];
    if (!P.contains(y)) return;
    IntVector p(P.n);
    for (int i = 0; i < P.n; ++i) p(i) = x[i];
    out.push_back(p);
  });
  return out;
}

std::vector<IntVector> interior_lattice_points(const RationalPolytope& P) {
  std::vector<IntVector> out;
  if (P.dimension() < P.n) return out;
  for (const auto& p : lattice_points(P))
    if (P.interior_contains(to_rational(p))) out.push_back(p);
  return out;
}

std::vector<IntVector> face_interior_points(const LatticePolytope& P, int face_id) {
  P.face(face_id);
  std::vector<IntVector> out;
  for (const auto& cp : lattice_points(P))
    if (cp.face == face_id) out.push_back(cp.point);
  return out;
}

int dual_face(const LatticePolytope& P, const LatticePolytope& Pd, int face_id) {
  if (!is_reflexive(P)) throw Error("dual_face needs a reflexive polytope");
  const Face& F = P.face(face_id);
  std::vector<int> vs;
  for (int j : F.facets) {
    int v = Pd.vertex_index(P.facets()[j].normal);
    if (v < 0) throw Error("dual polytope does not match");
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  int id = Pd.face_with_vertices(vs);
  if (id < 0) throw Error("dual face not found");
  return id;
}

RationalPolytope rho_dual_polytope(int n, const std::vector<IntVector>& points,
                                   const RatVector& rho) {
  if (rho.size() != Eigen::Index(points.size())) throw Error("rho has wrong length");
  std::vector<IntVector> cons;
  for (size_t i = 0; i < points.size(); ++i) {
    const Integer den = mp::denominator(rho(i));
    IntVector a(n + 1);
    a.head(n) = den * points[i];
    a(n) = mp::numerator(rho(i));
    cons.push_back(a);
  }
  IntVector t = IntVector::Zero(n + 1);
  t(n) = 1;
  cons.push_back(t);
  ConeDescription cd = double_description(cons, n + 1);
  if (!cd.lineality.empty()) throw Error("rho-dual polytope is unbounded");
  RationalPolytope R;
  R.n = n;
  for (const auto& r : cd.rays) {
    if (r(n) == 0) throw Error("rho-dual polytope is unbounded (divisor not convex?)");
    RatVector v(n);
    for (int i = 0; i < n; ++i) v(i) = Rational(r(i), r(n));
    R.vertices.push_back(v);
  }
  std::sort(R.vertices.begin(), R.vertices.end(), rat_lex_less);
  for (size_t i = 0; i < points.size(); ++i) R.halfspaces.push_back({points[i], rho(i)});
  return R;
}

Integer normalized_volume(const LatticePolytope& P) {
  const auto& V = P.vertices();
  const int n = P.rank();
  std::map<int, std::vector<std::vector<int>>> memo;
  // pulling triangulation from the lexicographically largest vertex of each face
  std::function<const std::vector<std::vector<int>>&(int)> tri = [&](int id) -> const auto& {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Face& f = P.face(id);
    std::vector<std::vector<int>> out;
    int apex = f.vertices.back();
    if (f.dim == 0) {
      out.push_back({apex});
    } else {
      for (int c : P.subfaces(id)) {
        const Face& g = P.face(c);
        if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
        for (auto s : tri(c)) {
          s.push_back(apex);
          out.push_back(s);
        }
      }
    }
    return memo[id] = out;
  };
  int apex = int(V.size()) - 1;
  Integer total = 0;
  for (int j = 0; j < int(P.facets().size()); ++j) {
    int id = P.facet_face(j);
    const Face& g = P.face(id);
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
    for (const auto& s : tri(id)) {
      IntMatrix M(n, n);
      for (int i = 0; i < n; ++i) M.col(i) = V[s[i]] - V[apex];
      total += abs(determinant(M));
    }
  }
  return total;
}

}  // namespace toric
