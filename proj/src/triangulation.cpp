#include "toric/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

IntMatrix point_matrix(const std::vector<IntVector>& pts, const Simplex& s, int n) {
  IntMatrix B(n, s.size());
  for (size_t i = 0; i < s.size(); ++i) B.col(i) = pts[s[i]];
  return B;
}

bool contains_all(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void subsets(const Simplex& s, size_t k, size_t start, Simplex& cur, std::set<Simplex>& out) {
  if (cur.size() == k) {
    out.insert(cur);
    return;
  }
  for (size_t i = start; i < s.size(); ++i) {
    cur.push_back(s[i]);
    subsets(s, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Triangulation Triangulation::from_simplices(std::shared_ptr<const LatticePolytope> host,
                                            std::vector<IntVector> points,
                                            std::vector<Simplex> maximal) {
  if (!host) throw Error("triangulation needs a host polytope");
  const int n = host->rank();
  Triangulation T;
  T.host_ = host;
  T.points_ = std::move(points);

  std::set<IntVector, LexLess> seen;
  std::vector<std::vector<int>> tight(T.points_.size());
  for (size_t i = 0; i < T.points_.size(); ++i) {
    const auto& p = T.points_[i];
    if (p.size() != n) throw Error("triangulation point has wrong rank");
    if (!seen.insert(p).second) throw Error("duplicate triangulation point " + to_string(p));
    tight[i] = host->tight_facets(p);
    if (tight[i].empty()) throw Error("point " + to_string(p) + " is not on the boundary");
  }

  for (auto& s : maximal) {
    std::sort(s.begin(), s.end());
    if (int(s.size()) != n) throw Error("maximal simplex must have rank-many points");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= int(T.points_.size())) throw Error("simplex index out of range");
      if (i && s[i] == s[i - 1]) throw Error("repeated point in simplex");
    }
  }
  std::sort(maximal.begin(), maximal.end());
  for (size_t i = 1; i < maximal.size(); ++i)
    if (maximal[i] == maximal[i - 1]) throw Error("duplicate maximal simplex");
  T.maximal_ = std::move(maximal);

  const int nf = int(host->facets().size());
  T.by_facet_.assign(nf, {});
  Integer volume = 0;
  std::vector<Integer> dets;
  for (size_t k = 0; k < T.maximal_.size(); ++k) {
    const Simplex& s = T.maximal_[k];
    std::vector<int> common = tight[s[0]];
    for (size_t i = 1; i < s.size(); ++i) {
      std::vector<int> r;
      std::set_intersection(common.begin(), common.end(), tight[s[i]].begin(), tight[s[i]].end(),
                            std::back_inserter(r));
      common = r;
    }
    if (common.empty()) throw Error("simplex does not lie in a facet");
    T.host_facet_.push_back(common.front());
    T.by_facet_[common.front()].push_back(int(k));
    IntMatrix B = point_matrix(T.points_, s, n);
    Integer det = determinant(B);
    if (det == 0) throw Error("degenerate simplex");
    dets.push_back(det);
    volume += abs(det);
    T.inverses_.push_back(*inverse(to_rational(B)));
  }

  // ridges
  std::map<Simplex, std::vector<std::pair<int, int>>> ridges;
  for (size_t k = 0; k < T.maximal_.size(); ++k)
    for (int pos = 0; pos < n; ++pos) {
      Simplex r = T.maximal_[k];
      r.erase(r.begin() + pos);
      ridges[r].push_back({int(k), pos});
    }
  T.neighbors_.assign(T.maximal_.size(), std::vector<int>(n, -1));
  for (const auto& [r, users] : ridges) {
    if (users.size() != 2)
      throw Error("ridge shared by " + std::to_string(users.size()) + " simplices");
    Integer side[2];
    for (int u = 0; u < 2; ++u) {
      IntMatrix M(n, n);
      for (int i = 0; i + 1 < n; ++i) M.col(i) = T.points_[r[i]];
      const Simplex& s = T.maximal_[users[u].first];
      M.col(n - 1) = T.points_[s[users[u].second]];
      side[u] = determinant(M);
    }
    if (side[0] * side[1] >= 0) throw Error("adjacent simplices fold over their common ridge");
    T.neighbors_[users[0].first][users[0].second] = users[1].first;
    T.neighbors_[users[1].first][users[1].second] = users[0].first;
  }

  Integer expected = normalized_volume(*host);
  if (volume != expected)
    throw Error("cone volumes sum to " + volume.str() + ", expected " + expected.str());

  std::vector<bool> used(T.points_.size(), false);
  for (const auto& s : T.maximal_)
    for (int i : s) used[i] = true;
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw Error("point " + to_string(T.points_[i]) + " is not used by any simplex");

  T.skeleta_.assign(n, {});
  for (int j = 0; j < n; ++j) {
    std::set<Simplex> all;
    for (const auto& s : T.maximal_) {
      Simplex cur;
      subsets(s, size_t(j + 1), 0, cur, all);
    }
    T.skeleta_[j].assign(all.begin(), all.end());
  }
  return T;
}

int Triangulation::point_index(const IntVector& x) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (equal(points_[i], x)) return int(i);
  return -1;
}

int Triangulation::simplex_index(const Simplex& s) const {
  Simplex t = s;
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(maximal_.begin(), maximal_.end(), t);
  if (it != maximal_.end() && *it == t) return int(it - maximal_.begin());
  return -1;
}

Integer Triangulation::cone_volume(int s) const {
  return abs(determinant(point_matrix(points_, maximal_.at(s), rank())));
}

bool Triangulation::satisfies_skeleton_condition() const {
  if (!is_reflexive(*host_)) return false;
  auto sk = boundary_skeleton_points(*host_);
  if (sk.size() != points_.size()) return false;
  std::set<IntVector, LexLess> a(sk.begin(), sk.end()), b(points_.begin(), points_.end());
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const IntVector& x, const IntVector& y) { return equal(x, y); });
}

bool Triangulation::operator==(const Triangulation& o) const {
  if (points_.size() != o.points_.size() || maximal_ != o.maximal_) return false;
  for (size_t i = 0; i < points_.size(); ++i)
    if (!equal(points_[i], o.points_[i])) return false;
  return true;
}

std::vector<IntVector> boundary_skeleton_points(const LatticePolytope& P) {
  if (!is_reflexive(P)) throw Error("boundary skeleton needs a reflexive polytope");
  std::vector<IntVector> out;
  for (const auto& cp : lattice_points(P))
    if (!cp.interior() && P.face(cp.face).dim <= P.rank() - 2) out.push_back(cp.point);
  return out;
}

Triangulation build_triangulation(const LatticePolytope& P) {
  return build_triangulation(std::make_shared<const LatticePolytope>(P));
}

// Pulling triangulation. The apex of a face is the first point it contains,
// non-vertex points first (lexicographic), then vertices. Points never used
// as an apex are inserted afterwards by stellar subdivision of the simplex
// carrying them in its relative interior.
Triangulation build_triangulation(std::shared_ptr<const LatticePolytope> host) {
  const LatticePolytope& P = *host;
  const int n = P.rank();
  std::vector<IntVector> pts = boundary_skeleton_points(P);
  auto index_of = [&](const IntVector& x) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x, LexLess());
    return int(it - pts.begin());
  };
  std::vector<int> vmap;
  for (const auto& v : P.vertices()) vmap.push_back(index_of(v));
  std::vector<bool> is_vertex(pts.size(), false);
  for (int v : vmap) is_vertex[v] = true;

  std::vector<int> order;
  for (int p = 0; p < int(pts.size()); ++p)
    if (!is_vertex[p]) order.push_back(p);
  for (int p = 0; p < int(pts.size()); ++p)
    if (is_vertex[p]) order.push_back(p);
  std::vector<std::vector<int>> tight(pts.size());
  for (size_t p = 0; p < pts.size(); ++p) tight[p] = P.tight_facets(pts[p]);
  auto in_face = [&](int p, const Face& f) {
    return std::includes(tight[p].begin(), tight[p].end(), f.facets.begin(), f.facets.end());
  };

  std::map<int, std::vector<Simplex>> memo;
  std::function<const std::vector<Simplex>&(int)> pull = [&](int id) -> const auto& {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Face& f = P.face(id);
    int apex = -1;
    for (int p : order)
      if (in_face(p, f)) {
        apex = p;
        break;
      }
    std::vector<Simplex> out;
    if (f.dim == 0) {
      out.push_back({apex});
    } else {
      for (int c : P.subfaces(id)) {
        if (in_face(apex, P.face(c))) continue;
        for (auto s : pull(c)) {
          s.push_back(apex);
          out.push_back(s);
        }
      }
    }
    return memo[id] = out;
  };

  std::vector<Simplex> cur;
  std::vector<int> facet_of;
  std::vector<bool> used(pts.size(), false);
  for (int j = 0; j < int(P.facets().size()); ++j)
    for (auto t : pull(P.facet_face(j))) {
      std::sort(t.begin(), t.end());
      for (int x : t) used[x] = true;
      cur.push_back(t);
      facet_of.push_back(j);
    }

  for (int p = 0; p < int(pts.size()); ++p) {
    if (used[p]) continue;
    Simplex tau;
    for (size_t k = 0; k < cur.size() && tau.empty(); ++k) {
      if (!std::binary_search(tight[p].begin(), tight[p].end(), facet_of[k])) continue;
      auto lam = solve_rational(point_matrix(pts, cur[k], n), to_rational(pts[p]));
      if (!lam) continue;
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if ((*lam)(i) < 0) ok = false;
      if (!ok) continue;
      for (int i = 0; i < n; ++i)
        if ((*lam)(i) > 0) tau.push_back(cur[k][i]);
    }
    if (tau.size() < 2) throw Error("could not place point " + to_string(pts[p]));
    std::vector<Simplex> next;
    std::vector<int> next_facet;
    for (size_t k = 0; k < cur.size(); ++k) {
      if (!contains_all(cur[k], tau)) {
        next.push_back(cur[k]);
        next_facet.push_back(facet_of[k]);
        continue;
      }
      for (int w : tau) {
        Simplex s;
        for (int x : cur[k])
          if (x != w) s.push_back(x);
        s.push_back(p);
        std::sort(s.begin(), s.end());
        next.push_back(s);
        next_facet.push_back(facet_of[k]);
      }
    }
    cur = std::move(next);
    facet_of = std::move(next_facet);
  }
  return Triangulation::from_simplices(host, pts, cur);
}

Integer lattice_index(const std::vector<IntVector>& points, int n) {
  if (points.empty()) return 0;
  SmithDecomposition sd = smith_normal_form(columns(points, n));
  if (sd.rank < n) return 0;
  Integer idx = 1;
  for (int i = 0; i < n; ++i) idx *= sd.D(i, i);
  return idx;
}

Integer check_spanning(const Triangulation& T) { return lattice_index(T.points(), T.rank()); }

ContainingSimplex find_containing_simplex(const Triangulation& T, const IntVector& x) {
  return find_containing_simplex(T, to_rational(x));
}

ContainingSimplex find_containing_simplex(const Triangulation& T, const RatVector& x) {
  if (x.isZero()) throw Error("find_containing_simplex: zero vector has no ray");
  const auto& F = T.host().facets();
  std::vector<Rational> r(F.size());
  Rational best = 0;
  for (size_t j = 0; j < F.size(); ++j) {
    r[j] = dot(x, F[j].normal) / Rational(F[j].offset);
    if (j == 0 || r[j] < best) best = r[j];
  }
  const int n = T.rank();
  for (size_t j = 0; j < F.size(); ++j) {
    if (r[j] != best) continue;
    for (int k : T.simplices_in_facet(int(j))) {
      RatVector lam = T.inverse_basis(k) * x;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (lam(i) < 0) ok = false;
      if (!ok) continue;
      ContainingSimplex out;
      out.maximal = k;
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i)
        if (lam(i) > 0) {
          out.simplex.push_back(T.maximal()[k][i]);
          c.push_back(lam(i));
        }
      out.coefficients.resize(c.size());
      for (size_t i = 0; i < c.size(); ++i) out.coefficients(i) = c[i];
      return out;
    }
  }
  throw Error("no simplex contains the ray through " + to_string(x));
}

std::vector<FlopCircuit> flop_candidates(const Triangulation& T) {
  if (T.rank() != 4) throw Error("flops are only defined in rank 4");
  const auto& P = T.host();
  const auto& pts = T.points();
  const auto& M = T.maximal();
  std::vector<FlopCircuit> out;
  std::set<std::vector<int>> seen;
  for (int si = 0; si < int(M.size()); ++si)
    for (int pos = 0; pos < 4; ++pos) {
      int ti = T.neighbors()[si][pos];
      if (ti < si) continue;
      const Simplex& s = M[si];
      const Simplex& t = M[ti];
      int p = s[pos];
      int q = -1;
      for (int i = 0; i < 4; ++i)
        if (!std::binary_search(s.begin(), s.end(), t[i])) q = t[i];
      Simplex ridge = s;
      ridge.erase(ridge.begin() + pos);
      for (int k = 0; k < 3; ++k) {
        int d0 = ridge[k];
        int d2 = ridge[(k + 1) % 3], d3 = ridge[(k + 2) % 3];
        if (d2 > d3) std::swap(d2, d3);
        if (!equal(IntVector(pts[p] + pts[q]), IntVector(pts[d2] + pts[d3]))) continue;
        std::vector<int> common = P.tight_facets(pts[p]);
        for (int x : {q, d2, d3}) {
          std::vector<int> tx = P.tight_facets(pts[x]), r;
          std::set_intersection(common.begin(), common.end(), tx.begin(), tx.end(),
                                std::back_inserter(r));
          common = r;
        }
        int face = P.face_with_facets(common);
        if (face < 0 || P.face(face).dim != 2) continue;
        // the square also bounds a second facet; its two tetrahedra must share an apex
        auto across = [&](int simplex, int drop) {
          const Simplex& u = M[simplex];
          int at = int(std::find(u.begin(), u.end(), drop) - u.begin());
          return T.neighbors()[simplex][at];
        };
        int s2 = across(si, d0), t2 = across(ti, d0);
        auto apex_of = [&](int simplex, std::initializer_list<int> skip) {
          for (int x : M[simplex])
            if (std::find(skip.begin(), skip.end(), x) == skip.end()) return x;
          return -1;
        };
        int e = apex_of(s2, {p, d2, d3}), e2 = apex_of(t2, {q, d2, d3});
        if (e != e2) continue;
        std::vector<int> key = {std::min(p, q), std::max(p, q), d2, d3, std::min(d0, e),
                                std::max(d0, e)};
        if (!seen.insert(key).second) continue;
        FlopCircuit c;
        c.s = s;
        c.t = t;
        c.d0 = d0;
        c.d1 = p;
        c.d2 = d2;
        c.d3 = d3;
        c.d4 = q;
        c.s_companion = M[s2];
        c.t_companion = M[t2];
        c.d0_companion = e;
        c.two_face = face;
        out.push_back(c);
      }
    }
  return out;
}

Triangulation apply_flop(const Triangulation& T, const FlopCircuit& c) {
  if (T.rank() != 4) throw Error("flops are only defined in rank 4");
  for (const Simplex* s : {&c.s, &c.t, &c.s_companion, &c.t_companion})
    if (T.simplex_index(*s) < 0) throw Error("stale flop circuit: simplex no longer present");
  auto make = [](std::initializer_list<int> xs) {
    Simplex s(xs);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<Simplex> drop = {c.s, c.t, c.s_companion, c.t_companion};
  std::vector<Simplex> next;
  for (const auto& s : T.maximal())
    if (!drop.count(s)) next.push_back(s);
  next.push_back(make({c.d0, c.d1, c.d2, c.d4}));
  next.push_back(make({c.d0, c.d1, c.d3, c.d4}));
  next.push_back(make({c.d0_companion, c.d1, c.d2, c.d4}));
  next.push_back(make({c.d0_companion, c.d1, c.d3, c.d4}));
  return Triangulation::from_simplices(T.host_ptr(), T.points(), next);
}

}  // namespace toric
