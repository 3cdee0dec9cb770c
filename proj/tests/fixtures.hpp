#pragma once

#include "toric/mirror.hpp"

#include <functional>
#include <map>
#include <random>

namespace fx {

using namespace toric;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline IntVector unit(int n, int i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return v;
}

// e1..en and -(1,...,1)
inline std::vector<IntVector> reflexive_simplex(int n) {
  std::vector<IntVector> vs;
  for (int i = 0; i < n; ++i) vs.push_back(unit(n, i));
  vs.push_back(IntVector::Constant(n, Integer(-1)));
  return vs;
}

inline std::vector<IntVector> cross_polytope(int n) {
  std::vector<IntVector> vs;
  for (int i = 0; i < n; ++i) {
    vs.push_back(unit(n, i));
    vs.push_back(IntVector(-unit(n, i)));
  }
  return vs;
}

inline std::vector<IntVector> cube(int n) {
  std::vector<IntVector> vs;
  for (int m = 0; m < (1 << n); ++m) {
    IntVector v(n);
    for (int i = 0; i < n; ++i) v(i) = (m >> i & 1) ? 1 : -1;
    vs.push_back(v);
  }
  return vs;
}

inline std::vector<IntVector> diamond() { return cross_polytope(2); }
inline std::vector<IntVector> square() { return cube(2); }
inline std::vector<IntVector> hexagon() {
  return {iv({1, 0}), iv({0, 1}), iv({-1, 1}), iv({-1, 0}), iv({0, -1}), iv({1, -1})};
}

inline std::vector<IntVector> product(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      IntVector v(x.size() + y.size());
      v << x, y;
      out.push_back(v);
    }
  return out;
}

inline std::vector<IntVector> product_of_diamonds() { return product(diamond(), diamond()); }
inline std::vector<IntVector> diamond_segment() { return product(diamond(), {iv({1}), iv({-1})}); }

struct Named {
  std::string name;
  std::vector<IntVector> vertices;
};

// reflexive fixtures whose codim-2 corrections vanish in rank 3
inline std::vector<Named> reflexive_fixtures() {
  return {{"diamond", diamond()},
          {"square", square()},
          {"hexagon", hexagon()},
          {"triangle", reflexive_simplex(2)},
          {"quartic", reflexive_simplex(3)},
          {"octahedron", cross_polytope(3)},
          {"cube", cube(3)},
          {"diamond_segment", diamond_segment()},
          {"quintic", reflexive_simplex(4)},
          {"cross4", cross_polytope(4)},
          {"product_of_diamonds", product_of_diamonds()}};
}

inline std::shared_ptr<const LatticePolytope> poly(const std::vector<IntVector>& vs) {
  return std::make_shared<const LatticePolytope>(LatticePolytope::from_vertices(vs));
}

// Weighted simplex: delta^m = -sum_{i != m} w_i delta^i for some w_m = 1,
// the other delta^i are unit vectors. The triangulation is the face
// decomposition.
inline std::vector<IntVector> weighted_points(const std::vector<long>& w) {
  const int n = int(w.size()) - 1;
  int m = -1;
  for (int i = 0; i <= n; ++i)
    if (w[i] == 1) {
      m = i;
      break;
    }
  if (m < 0) throw Error("some weight must be 1");
  std::vector<IntVector> pts(n + 1);
  int k = 0;
  for (int i = 0; i <= n; ++i)
    if (i != m) pts[i] = unit(n, k++);
  pts[m] = IntVector::Zero(n);
  for (int i = 0; i <= n; ++i)
    if (i != m) pts[m] -= w[i] * pts[i];
  return pts;
}

inline Triangulation weighted_simplex(const std::vector<long>& w) {
  auto pts = weighted_points(w);
  std::vector<Simplex> simp;
  for (int i = 0; i < int(pts.size()); ++i) {
    Simplex s;
    for (int j = 0; j < int(pts.size()); ++j)
      if (j != i) s.push_back(j);
    simp.push_back(s);
  }
  return Triangulation::from_simplices(poly(pts), pts, simp);
}

// Blow-up: points delta^1..delta^{n+1} as above plus delta^{n+2} = -delta^{n+1};
// simplices s_i (drop delta^i, keep delta^{n+1}) and t_i (drop delta^i, use delta^{n+2}).
inline Triangulation blowup(const std::vector<long>& w) {
  auto pts = weighted_points(w);
  const int n = int(w.size()) - 1;
  pts.push_back(IntVector(-pts[n]));
  std::vector<Simplex> simp;
  for (int i = 0; i < n; ++i) {
    Simplex s, t;
    for (int k = 0; k < n; ++k)
      if (k != i) {
        s.push_back(k);
        t.push_back(k);
      }
    s.push_back(n);
    t.push_back(n + 1);
    simp.push_back(s);
    simp.push_back(t);
  }
  return Triangulation::from_simplices(poly(pts), pts, simp);
}

// --- independent oracles -------------------------------------------------

// cofactor expansion, small matrices only
inline Integer cofactor_det(const IntMatrix& A) {
  const Eigen::Index n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Integer s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (A(0, j) == 0) continue;
    IntMatrix M(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) M(r - 1, cc++) = A(r, c);
    const Integer t = A(0, j) * cofactor_det(M);
    s += (j % 2) ? Integer(-t) : t;
  }
  return s;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors
inline Integer determinantal_divisor(const IntMatrix& A, int k) {
  Integer g = 0;
  for_each_subset(int(A.rows()), k, [&](const std::vector<int>& r) {
    for_each_subset(int(A.cols()), k, [&](const std::vector<int>& c) {
      IntMatrix M(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M(i, j) = A(r[i], c[j]);
      g = gcd(g, cofactor_det(M));
    });
  });
  return g;
}

// plain Gauss-Jordan; unique solution of a square system or nullopt
inline std::optional<RatVector> gauss_solve(RatMatrix A, RatVector b) {
  const Eigen::Index n = A.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && A(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    A.row(c).swap(A.row(p));
    std::swap(b(c), b(p));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || A(r, c) == 0) continue;
      const Rational f = A(r, c) / A(c, c);
      A.row(r) -= f * A.row(c);
      b(r) -= f * b(c);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / A(i, i);
  return x;
}

// x in conv(V): Caratheodory over affinely independent subsets
inline bool in_hull(const std::vector<IntVector>& V, const IntVector& x) {
  const int n = int(x.size());
  bool found = false;
  for (int k = 1; k <= n + 1 && !found; ++k)
    for_each_subset(int(V.size()), k, [&](const std::vector<int>& s) {
      if (found) return;
      // least squares free: pick n+1 equations via normal form (V^T V) when k < n+1
      RatMatrix A(n + 1, k);
      RatVector b(n + 1);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) A(i, j) = Rational(V[s[j]](i));
        b(i) = Rational(x(i));
      }
      for (int j = 0; j < k; ++j) A(n, j) = 1;
      b(n) = 1;
      RatMatrix AtA = A.transpose() * A;
      RatVector Atb = A.transpose() * b;
      auto lam = gauss_solve(AtA, Atb);
      if (!lam) return;
      if (A * *lam != b) return;
      for (int j = 0; j < k; ++j)
        if ((*lam)(j) < 0) return;
      found = true;
    });
  return found;
}

// x in cone(G) + span(Lin): Caratheodory with lineality split into +/- rays
inline bool in_cone(const std::vector<IntVector>& G, const std::vector<IntVector>& Lin,
                    const RatVector& x) {
  std::vector<IntVector> R = G;
  for (const auto& l : Lin) {
    R.push_back(l);
    R.push_back(IntVector(-l));
  }
  const int n = int(x.size());
  if (x.isZero()) return true;
  bool found = false;
  for (int k = 1; k <= n && !found; ++k)
    for_each_subset(int(R.size()), k, [&](const std::vector<int>& s) {
      if (found) return;
      RatMatrix A(n, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) A(i, j) = Rational(R[s[j]](i));
      RatMatrix AtA = A.transpose() * A;
      auto lam = gauss_solve(AtA, RatVector(A.transpose() * x));
      if (!lam || A * *lam != x) return;
      for (int j = 0; j < k; ++j)
        if ((*lam)(j) < 0) return;
      found = true;
    });
  return found;
}

// max t over {<g,x> >= t, <h,x> >= 0, |x_i| <= 1, t <= 1} by vertex enumeration
inline Rational brute_max_margin(const std::vector<RatVector>& strict,
                                 const std::vector<RatVector>& nonstrict, int k) {
  // rows (a, c): <a,(x,t)> >= c
  std::vector<std::pair<RatVector, Rational>> rows;
  auto row = [&](const RatVector& a, Rational c) { rows.push_back({a, c}); };
  for (const auto& g : strict) {
    RatVector a(k + 1);
    a << g, Rational(-1);
    row(a, 0);
  }
  for (const auto& h : nonstrict) {
    RatVector a(k + 1);
    a << h, Rational(0);
    row(a, 0);
  }
  for (int i = 0; i <= k; ++i) {
    RatVector a = RatVector::Zero(k + 1);
    a(i) = 1;
    if (i < k) row(a, -1);
    a(i) = -1;
    row(a, -1);
  }
  std::optional<Rational> best;
  for_each_subset(int(rows.size()), k + 1, [&](const std::vector<int>& s) {
    RatMatrix A(k + 1, k + 1);
    RatVector b(k + 1);
    for (int i = 0; i <= k; ++i) {
      A.row(i) = rows[s[i]].first.transpose();
      b(i) = rows[s[i]].second;
    }
    auto x = gauss_solve(A, b);
    if (!x) return;
    for (const auto& [a, c] : rows)
      if (a.dot(*x) < c) return;
    if (!best || (*x)(k) > *best) best = (*x)(k);
  });
  return best.value_or(Rational(-1));
}

// lattice points of {y : <y, u> >= -1} inside [-B, B]^n
inline std::vector<IntVector> box_points(const std::vector<IntVector>& normals, int n, long B) {
  std::vector<IntVector> out;
  std::vector<long> x(n, -B);
  while (true) {
    IntVector y(n);
    for (int i = 0; i < n; ++i) y(i) = x[i];
    bool in = true;
    for (const auto& u : normals)
      if (dot(y, u) < -1) {
        in = false;
        break;
      }
    if (in) out.push_back(y);
    int i = n - 1;
    while (i >= 0 && x[i] == B) x[i--] = -B;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

inline int affine_dim(const std::vector<IntVector>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<IntVector> d;
  for (size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - pts[0]);
  return int(rank(columns(d, int(pts[0].size()))));
}

// h^{1,1} from box scans only: points of P are grouped by the set of dual
// points they pair to -1 with, which is the lattice-point set of the dual face
inline long batyrev_h11(const std::vector<IntVector>& V, long B) {
  const int n = int(V[0].size());
  const auto dual = box_points(V, n, B);
  const auto pts = box_points(dual, n, B);
  auto tight = [](const IntVector& p, const std::vector<IntVector>& other) {
    std::vector<int> s;
    for (int i = 0; i < int(other.size()); ++i)
      if (dot(p, other[i]) == -1) s.push_back(i);
    return s;
  };
  std::map<std::vector<int>, long> groups;
  for (const auto& p : pts) groups[tight(p, dual)]++;
  long facet_interior = 0, corr = 0;
  for (const auto& [S, count] : groups) {
    if (S.empty()) continue;  // origin
    std::vector<IntVector> D;
    for (int i : S) D.push_back(dual[i]);
    const int dd = affine_dim(D);
    if (dd == 0) facet_interior += count;
    if (dd != 1) continue;
    // the face itself: points of P tight on all of S
    std::vector<int> face;
    for (int j = 0; j < int(pts.size()); ++j) {
      bool all = true;
      for (int i : S) all = all && dot(pts[j], dual[i]) == -1;
      if (all) face.push_back(j);
    }
    long dual_interior = 0;
    for (int i : S)
      if (tight(dual[i], pts) == face) ++dual_interior;
    corr += count * dual_interior;
  }
  return long(pts.size()) - n - 1 - facet_interior + corr;
}

// m_s solves <m_s, delta> = -rho_delta on s; convex iff every m_s lies in the rho-dual polytope
inline bool convex_oracle(const Triangulation& T, const RatVector& rho) {
  const int n = T.rank();
  for (const auto& S : T.maximal()) {
    RatMatrix A(n, n);
    RatVector b(n);
    for (int i = 0; i < n; ++i) {
      A.row(i) = to_rational(T.points()[S[i]]).transpose();
      b(i) = -rho(S[i]);
    }
    auto m = fx::gauss_solve(A, b);
    if (!m) throw Error("degenerate simplex");
    for (int p = 0; p < int(T.points().size()); ++p)
      if (m->dot(to_rational(T.points()[p])) < -rho(p)) return false;
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A(i, j) = d(rng);
  return A;
}

inline IntVector random_vector(std::mt19937& rng, int n, int lo, int hi) {
  return random_matrix(rng, n, 1, lo, hi).col(0);
}

inline RatVector random_divisor(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(-6, 9), den(1, 4);
  RatVector r(d);
  for (int i = 0; i < d; ++i) r(i) = Rational(num(rng), den(rng));
  return r;
}

}  // namespace fx
