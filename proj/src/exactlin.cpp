#include "toric/exactlin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = v(i) / g;
  return w;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, mp::denominator(v(i)));
  IntVector w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    w(i) = mp::numerator(v(i)) * (l / mp::denominator(v(i)));
  return primitive(w);
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool is_integral(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (mp::denominator(v(i)) != 1) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  if (!is_integral(v)) throw Error("vector is not integral: " + to_string(v));
  IntVector w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = mp::numerator(v(i));
  return w;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

bool equal(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << mp::numerator(q);
  if (mp::denominator(q) != 1) os << "/" << mp::denominator(q);
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

IntVector int_vector(std::initializer_list<long> xs) {
  IntVector v(xs.size());
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

RatVector rat_vector(std::initializer_list<Rational> xs) {
  RatVector v(xs.size());
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Eigen::Index r = rows.size(), c = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (Eigen::Index(row.size()) != c) throw Error("ragged matrix literal");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix columns(const std::vector<IntVector>& cols, int rows) {
  IntMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("column length mismatch");
    m.col(j) = cols[j];
  }
  return m;
}

// ---------------------------------------------------------------------------

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::Identity(m, m);
  IntMatrix V = IntMatrix::Identity(n, n);

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    U.row(a).swap(U.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    V.col(a).swap(V.col(b));
  };

  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    Eigen::Index pc = -1;
    for (Eigen::Index j = t; j < n && pc < 0; ++j)
      for (Eigen::Index i = t; i < m; ++i)
        if (D(i, j) != 0) {
          pc = j;
          break;
        }
    if (pc < 0) break;
    swap_cols(t, pc);

    while (true) {
      // column t
      Eigen::Index best = -1;
      for (Eigen::Index i = t; i < m; ++i)
        if (D(i, t) != 0 && (best < 0 || abs(D(i, t)) < abs(D(best, t)))) best = i;
      if (best < 0) {
        // column emptied by row work; pull in the smallest entry of row t
        Eigen::Index bc = -1;
        for (Eigen::Index j = t; j < n; ++j)
          if (D(t, j) != 0 && (bc < 0 || abs(D(t, j)) < abs(D(t, bc)))) bc = j;
        swap_cols(t, bc);
        continue;
      }
      swap_rows(t, best);
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        if (D(i, t) != 0) dirty = true;
      }
      if (dirty) continue;

      Eigen::Index bc = -1;
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (D(t, j) != 0 && abs(D(t, j)) < abs(D(t, t)) && (bc < 0 || abs(D(t, j)) < abs(D(t, bc))))
          bc = j;
      if (bc >= 0) {
        swap_cols(t, bc);
        continue;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        D.row(t) += D.row(bad);
        U.row(t) += U.row(bad);
        continue;
      }
      break;
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return {U, D, V, int(t)};
}

IntMatrix hermite_rows(const IntMatrix& A) {
  IntMatrix H = A;
  const Eigen::Index m = H.rows(), n = H.cols();
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (H(i, j) != 0 && (best < 0 || abs(H(i, j)) < abs(H(best, j)))) best = i;
      if (best < 0) break;
      if (best != r) H.row(best).swap(H.row(r));
      bool dirty = false;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        Integer q = H(i, j) / H(r, j);
        H.row(i) -= q * H.row(r);
        if (H(i, j) != 0) dirty = true;
      }
      if (!dirty) break;
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) H.row(r) = -H.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = H(i, j) / H(r, j);
      if (H(i, j) - q * H(r, j) < 0) q -= 1;
      if (q != 0) H.row(i) -= q * H.row(r);
    }
    ++r;
  }
  return H.topRows(r);
}

IntMatrix integer_kernel_basis(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  const Eigen::Index n = A.cols();
  const Eigen::Index k = n - s.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix K = s.V.rightCols(k);
  IntMatrix H = hermite_rows(IntMatrix(K.transpose()));
  return H.transpose();
}

std::vector<int> rref(RatMatrix& A) {
  std::vector<int> pivots;
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (A(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) A.row(p).swap(A.row(r));
    Rational inv = 1 / A(r, j);
    for (Eigen::Index c = j; c < n; ++c) A(r, c) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || A(i, j) == 0) continue;
      Rational f = A(i, j);
      for (Eigen::Index c = j; c < n; ++c)
        if (A(r, c) != 0) A(i, c) -= f * A(r, c);
    }
    pivots.push_back(int(j));
    ++r;
  }
  return pivots;
}

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != b.size()) throw Error("solve_rational: shape mismatch");
  RatMatrix M(A.rows(), A.cols() + 1);
  M.leftCols(A.cols()) = A;
  M.col(A.cols()) = b;
  std::vector<int> piv = rref(M);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
  RatVector x = RatVector::Zero(A.cols());
  for (size_t r = 0; r < piv.size(); ++r) x(piv[r]) = M(r, A.cols());
  return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b) {
  return solve_rational(to_rational(A), b);
}

int rank(const RatMatrix& A) {
  RatMatrix M = A;
  return int(rref(M).size());
}

int rank(const IntMatrix& A) { return rank(to_rational(A)); }

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw Error("determinant of non-square matrix");
  const Eigen::Index n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw Error("inverse of non-square matrix");
  const Eigen::Index n = A.rows();
  RatMatrix M(n, 2 * n);
  M.leftCols(n) = A;
  M.rightCols(n) = RatMatrix::Identity(n, n);
  std::vector<int> piv = rref(M);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  return RatMatrix(M.rightCols(n));
}

// ---------------------------------------------------------------------------
// feasibility

namespace {

struct Constraint {
  IntVector a;
  bool strict;
};

struct ConstraintLess {
  bool operator()(const Constraint& x, const Constraint& y) const {
    if (x.strict != y.strict) return x.strict < y.strict;
    return lex_less(x.a, y.a);
  }
};

int infer_ambient(const std::vector<RatVector>& s, const std::vector<RatVector>& h, int ambient) {
  for (const auto& v : s) {
    if (ambient < 0) ambient = int(v.size());
    if (v.size() != ambient) throw Error("rational_feasible: dimension mismatch");
  }
  for (const auto& v : h) {
    if (ambient < 0) ambient = int(v.size());
    if (v.size() != ambient) throw Error("rational_feasible: dimension mismatch");
  }
  if (ambient < 0) throw Error("rational_feasible: ambient dimension unknown");
  return ambient;
}

bool check_witness(const std::vector<RatVector>& strict, const std::vector<RatVector>& nonstrict,
                   const RatVector& x) {
  for (const auto& g : strict)
    if (dot(g, x) <= 0) return false;
  for (const auto& h : nonstrict)
    if (dot(h, x) < 0) return false;
  return true;
}

Feasibility finish(const std::vector<RatVector>& strict, const std::vector<RatVector>& nonstrict,
                   const RatVector& x) {
  RatVector w = to_rational(primitive(x));
  if (!check_witness(strict, nonstrict, w)) throw Error("feasibility witness failed verification");
  return {true, w};
}

struct FmOverflow {};

constexpr size_t kFmLimit = 4000;

Feasibility fm_impl(const std::vector<RatVector>& strict, const std::vector<RatVector>& nonstrict,
                    int k) {
  std::vector<std::vector<Constraint>> levels(k + 1);
  {
    std::set<Constraint, ConstraintLess> init;
    for (const auto& g : strict) init.insert({primitive(g), true});
    for (const auto& h : nonstrict) init.insert({primitive(h), false});
    for (const auto& c : init) {
      if (c.a.isZero()) {
        if (c.strict) return {false, {}};
        continue;
      }
      levels[k].push_back(c);
    }
  }
  for (int var = k - 1; var >= 0; --var) {
    std::set<Constraint, ConstraintLess> next;
    std::vector<const Constraint*> pos, neg;
    for (const auto& c : levels[var + 1]) {
      if (c.a(var) > 0)
        pos.push_back(&c);
      else if (c.a(var) < 0)
        neg.push_back(&c);
      else
        next.insert(c);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        IntVector a = Integer(-q->a(var)) * p->a + Integer(p->a(var)) * q->a;
        a(var) = 0;
        bool strict = p->strict || q->strict;
        if (a.isZero()) {
          if (strict) return {false, {}};
          continue;
        }
        next.insert({primitive(a), strict});
        if (next.size() > kFmLimit) throw FmOverflow{};
      }
    levels[var].assign(next.begin(), next.end());
  }
  // every remaining constraint is 0 >= 0 or was rejected above
  RatVector x = RatVector::Zero(k);
  for (int var = 0; var < k; ++var) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : levels[var + 1]) {
      if (c.a(var) == 0) continue;
      Rational rest = 0;
      for (int i = 0; i < var; ++i) rest += Rational(c.a(i)) * x(i);
      Rational bound = -rest / Rational(c.a(var));
      if (c.a(var) > 0) {
        if (!lo || bound > *lo || (bound == *lo && c.strict)) {
          lo = bound;
          lo_strict = c.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && c.strict)) {
          hi = bound;
          hi_strict = c.strict;
        }
      }
    }
    Rational v = 0;
    if (lo && hi) {
      if (*lo == *hi)
        v = *lo;
      else if (lo_strict || hi_strict)
        v = (*lo + *hi) / 2;
      else
        v = *lo;
    } else if (lo) {
      if (lo_strict) {
        Integer f = mp::numerator(*lo) / mp::denominator(*lo);
        if (Rational(f) > *lo) f -= 1;
        v = Rational(f + 1);
      } else {
        v = *lo;
      }
    } else if (hi) {
      if (hi_strict) {
        Integer f = mp::numerator(*hi) / mp::denominator(*hi);
        if (Rational(f) < *hi) f += 1;
        v = Rational(f - 1);
      } else {
        v = *hi;
      }
    }
    x(var) = v;
  }
  return finish(strict, nonstrict, x);
}

}  // namespace

Feasibility feasible_fourier_motzkin(const std::vector<RatVector>& strict,
                                     const std::vector<RatVector>& nonstrict, int ambient) {
  int k = infer_ambient(strict, nonstrict, ambient);
  if (strict.empty()) return {true, RatVector::Zero(k)};
  try {
    return fm_impl(strict, nonstrict, k);
  } catch (const FmOverflow&) {
    throw Error("fourier-motzkin: more than " + std::to_string(kFmLimit) + " constraints");
  }
}

// Farkas alternative: infeasible iff some y >= 0, sum y = 1, z >= 0 with
// G^T y + H^T z = 0. Phase one of that program is solved with Bland's rule;
// the optimal duals give the witness when the phase-one value is positive.
Feasibility feasible_simplex(const std::vector<RatVector>& strict,
                             const std::vector<RatVector>& nonstrict, int ambient) {
  const int k = infer_ambient(strict, nonstrict, ambient);
  if (strict.empty()) return {true, RatVector::Zero(k)};

  std::vector<IntVector> cols;
  for (const auto& g : strict) cols.push_back(primitive(g));
  const int m1 = int(cols.size());
  for (const auto& h : nonstrict) cols.push_back(primitive(h));
  const int m = int(cols.size());
  const int rows = k + 1;
  const int art0 = m;
  const int ncols = m + rows;
  RatMatrix T = RatMatrix::Zero(rows + 1, ncols + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < k; ++i) T(i, j) = Rational(cols[j](i));
    if (j < m1) T(k, j) = 1;
  }
  for (int i = 0; i < rows; ++i) T(i, art0 + i) = 1;
  T(k, ncols) = 1;
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = art0 + i;
  // objective row holds reduced costs; last entry is minus the objective value
  for (int j = 0; j <= ncols; ++j) {
    if (j >= art0 && j < ncols) continue;
    Rational s = 0;
    for (int i = 0; i < rows; ++i) s += T(i, j);
    T(rows, j) = -s;
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (T(rows, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (T(i, enter) <= 0) continue;
      Rational ratio = T(i, ncols) / T(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("phase-one program unbounded");
    Rational inv = 1 / T(leave, enter);
    for (int j = 0; j <= ncols; ++j)
      if (T(leave, j) != 0) T(leave, j) *= inv;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      Rational f = T(i, enter);
      for (int j = 0; j <= ncols; ++j)
        if (T(leave, j) != 0) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }
  Rational value = -T(rows, ncols);
  if (value == 0) return {false, {}};
  RatVector x(k);
  for (int i = 0; i < k; ++i) x(i) = -(1 - T(rows, art0 + i));
  return finish(strict, nonstrict, x);
}

Feasibility rational_feasible(const std::vector<RatVector>& strict,
                              const std::vector<RatVector>& nonstrict, int ambient) {
  int k = infer_ambient(strict, nonstrict, ambient);
  if (strict.empty()) return {true, RatVector::Zero(k)};
  if (k <= 12) {
    try {
      return fm_impl(strict, nonstrict, k);
    } catch (const FmOverflow&) {
    }
  }
  return feasible_simplex(strict, nonstrict, k);
}

// ---------------------------------------------------------------------------
// double description

namespace {

using Bits = std::vector<uint64_t>;

void set_bit(Bits& b, size_t i) {
  if (b.size() <= i / 64) b.resize(i / 64 + 1, 0);
  b[i / 64] |= uint64_t(1) << (i % 64);
}

bool subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w) {
    uint64_t bw = w < b.size() ? b[w] : 0;
    if (a[w] & ~bw) return false;
  }
  return true;
}

Bits meet(const Bits& a, const Bits& b) {
  Bits r(std::min(a.size(), b.size()));
  for (size_t w = 0; w < r.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

size_t popcount(const Bits& a) {
  size_t c = 0;
  for (uint64_t w : a) c += __builtin_popcountll(w);
  return c;
}

struct DdRay {
  IntVector v;
  Bits zero;
};

}  // namespace

ConeDescription double_description(const std::vector<IntVector>& inequalities, int ambient) {
  std::set<IntVector, LexLess> uniq;
  for (const auto& a : inequalities) {
    if (a.size() != ambient) throw Error("double_description: dimension mismatch");
    if (!a.isZero()) uniq.insert(primitive(a));
  }
  std::vector<IntVector> ineq(uniq.begin(), uniq.end());

  std::vector<IntVector> lin;
  for (int i = 0; i < ambient; ++i) {
    IntVector e = IntVector::Zero(ambient);
    e(i) = 1;
    lin.push_back(e);
  }
  std::vector<DdRay> rays;

  for (size_t idx = 0; idx < ineq.size(); ++idx) {
    const IntVector& a = ineq[idx];
    size_t l0 = lin.size();
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        l0 = i;
        break;
      }
    if (l0 < lin.size()) {
      IntVector piv = lin[l0];
      Integer ap = dot(a, piv);
      if (ap < 0) {
        piv = -piv;
        ap = -ap;
      }
      std::vector<IntVector> nl;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == l0) continue;
        IntVector v = ap * lin[i] - Integer(dot(a, lin[i])) * piv;
        nl.push_back(primitive(v));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        r.v = primitive(IntVector(ap * r.v - Integer(dot(a, r.v)) * piv));
        set_bit(r.zero, idx);
      }
      DdRay nr{primitive(piv), {}};
      for (size_t j = 0; j < idx; ++j) set_bit(nr.zero, j);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<size_t> pos, neg;
    std::vector<DdRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) set_bit(rays[i].zero, idx);
      continue;
    }
    const size_t need = size_t(std::max<long>(0, long(ambient) - long(lin.size()) - 2));
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      DdRay r = rays[i];
      if (val[i] == 0) set_bit(r.zero, idx);
      next.push_back(std::move(r));
    }
    for (size_t p : pos)
      for (size_t q : neg) {
        Bits z = meet(rays[p].zero, rays[q].zero);
        if (popcount(z) < need) continue;
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (subset(z, rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = val[p] * rays[q].v - val[q] * rays[p].v;
        DdRay nr{primitive(v), z};
        set_bit(nr.zero, idx);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  ConeDescription out;
  if (!lin.empty()) {
    IntMatrix A(ineq.size(), ambient);
    for (size_t i = 0; i < ineq.size(); ++i) A.row(i) = ineq[i].transpose();
    IntMatrix K = ineq.empty() ? IntMatrix(IntMatrix::Identity(ambient, ambient))
                               : integer_kernel_basis(A);
    for (Eigen::Index j = 0; j < K.cols(); ++j) out.lineality.push_back(K.col(j));
    // canonical representatives: orthogonal to the lineality space
    RatMatrix Lq = to_rational(K);
    RatMatrix G = Lq.transpose() * Lq;
    RatMatrix Ginv = *inverse(G);
    for (auto& r : rays) {
      RatVector rq = to_rational(r.v);
      RatVector proj = rq - Lq * (Ginv * (Lq.transpose() * rq));
      r.v = primitive(proj);
    }
  }
  std::set<IntVector, LexLess> rs;
  for (const auto& r : rays) rs.insert(r.v);
  out.rays.assign(rs.begin(), rs.end());
  return out;
}

}  // namespace toric
