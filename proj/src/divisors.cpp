#include "toric/divisors.hpp"

#include <algorithm>
#include <set>

namespace toric {

DivisorLattice build_divisor_lattice(const Triangulation& T) {
  DivisorLattice DL;
  DL.n = T.rank();
  DL.d = int(T.points().size());
  DL.points = T.points();
  DL.beta = columns(DL.points, DL.n);
  DL.kernel = integer_kernel_basis(DL.beta);
  const int r = DL.rank();
  if (r > 0) {
    RatMatrix Kt = to_rational(IntMatrix(DL.kernel.transpose()));
    DL.pivot_rows = rref(Kt);
    RatMatrix sub(r, r);
    for (int i = 0; i < r; ++i) sub.row(i) = to_rational(IntMatrix(DL.kernel.row(DL.pivot_rows[i])));
    DL.pivot_inverse = *inverse(sub);
  }
  return DL;
}

RatVector DivisorLattice::kernel_coordinates(const RatVector& v) const {
  if (v.size() != d) throw Error("divisor-lattice vector has wrong length");
  const int r = rank();
  RatVector c = RatVector::Zero(r);
  for (int i = 0; i < r; ++i) {
    const Rational& x = v(pivot_rows[i]);
    if (x == 0) continue;
    for (int j = 0; j < r; ++j)
      if (pivot_inverse(j, i) != 0) c(j) += pivot_inverse(j, i) * x;
  }
  // membership check on the support of v and of K c
  RatVector back = from_kernel(c);
  for (int i = 0; i < d; ++i)
    if (back(i) != v(i)) throw Error("vector " + to_string(v) + " is not in the kernel of beta");
  return c;
}

RatVector DivisorLattice::from_kernel(const RatVector& c) const {
  RatVector v = RatVector::Zero(d);
  for (int j = 0; j < rank(); ++j) {
    if (c(j) == 0) continue;
    for (int i = 0; i < d; ++i)
      if (kernel(i, j) != 0) v(i) += c(j) * Rational(kernel(i, j));
  }
  return v;
}

RatVector DivisorLattice::iota_star(const RatVector& rho) const {
  if (rho.size() != d) throw Error("divisor has wrong length");
  RatVector out(rank());
  for (int j = 0; j < rank(); ++j) {
    Rational s = 0;
    for (int i = 0; i < d; ++i)
      if (kernel(i, j) != 0) s += rho(i) * Rational(kernel(i, j));
    out(j) = s;
  }
  return out;
}

Divisor anticanonical(const DivisorLattice& DL) {
  Divisor r(DL.d);
  for (int i = 0; i < DL.d; ++i) r(i) = 1;
  return r;
}

RatVector n_vector(const Triangulation& T, const DivisorLattice& DL, int delta) {
  if (delta < 0 || delta >= DL.d) throw Error("n_vector: label out of range");
  ContainingSimplex cs = find_containing_simplex(T, IntVector(-T.points()[delta]));
  RatVector v = RatVector::Zero(DL.d);
  v(delta) = 1;
  for (size_t i = 0; i < cs.simplex.size(); ++i) v(cs.simplex[i]) += cs.coefficients(i);
  return v;
}

RatVector n_s_vector(const Triangulation& T, int s, int delta_prime) {
  const Simplex& S = T.maximal().at(s);
  if (std::binary_search(S.begin(), S.end(), delta_prime))
    throw Error("n_s_vector: point lies in the simplex");
  RatVector c = -(T.inverse_basis(s) * to_rational(T.points()[delta_prime]));
  RatVector v = RatVector::Zero(T.points().size());
  v(delta_prime) = 1;
  for (size_t i = 0; i < S.size(); ++i) v(S[i]) += c(i);
  return v;
}

Rational wall_pairing(const Triangulation& T, int s, const RatVector& rho, int delta_prime) {
  const Simplex& S = T.maximal().at(s);
  RatVector c = T.inverse_basis(s) * to_rational(T.points()[delta_prime]);
  Rational v = rho(delta_prime);
  for (size_t i = 0; i < S.size(); ++i) v -= c(i) * rho(S[i]);
  return v;
}

LocalBasis local_basis(const Triangulation& T, const DivisorLattice& DL, int s) {
  LocalBasis B;
  B.simplex = s;
  B.inside = T.maximal().at(s);
  for (int i = 0; i < DL.d; ++i)
    if (!std::binary_search(B.inside.begin(), B.inside.end(), i)) B.outside.push_back(i);
  const int n = int(B.inside.size()), m = int(B.outside.size());

  std::vector<RatVector> kv;
  for (int o : B.outside) kv.push_back(n_vector(T, DL, o));
  auto fill = [&]() {
    B.n_in.resize(n, m);
    B.n_out.resize(m, m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) B.n_in(i, j) = kv[j](B.inside[i]);
      for (int i = 0; i < m; ++i) B.n_out(i, j) = kv[j](B.outside[i]);
    }
  };
  fill();
  auto inv = inverse(B.n_out);
  if (!inv) {
    B.uses_n_delta = false;
    kv.clear();
    for (int o : B.outside) kv.push_back(n_s_vector(T, s, o));
    fill();
    inv = inverse(B.n_out);
    if (!inv) throw Error("local basis is singular");
  }
  B.g_out = *inv;
  B.g_in = -(B.n_in * B.g_out);

  B.basis = RatMatrix::Zero(DL.d, DL.d);
  for (int i = 0; i < n; ++i) B.basis(B.inside[i], i) = 1;
  for (int j = 0; j < m; ++j) B.basis.col(n + j) = kv[j];
  auto dual = inverse(B.basis);
  if (!dual) throw Error("local basis is singular");
  B.dual = *dual;
  return B;
}

Decomposition decompose_divisor(const LocalBasis& B, const Divisor& rho) {
  const int d = int(B.basis.rows());
  const int n = int(B.inside.size());
  if (rho.size() != d) throw Error("divisor has wrong length");
  Decomposition out{RatVector::Zero(d), RatVector::Zero(d)};
  for (int i = 0; i < n; ++i) out.linear += rho(B.inside[i]) * RatVector(B.dual.row(i).transpose());
  for (int j = n; j < d; ++j) {
    Rational p = rho.dot(B.basis.col(j));
    out.local += p * RatVector(B.dual.row(j).transpose());
  }
  return out;
}

namespace {

template <typename Pred>
bool all_walls(const Divisor& rho, const Triangulation& T, Pred ok) {
  const int n = T.rank();
  if (rho.size() != Eigen::Index(T.points().size())) throw Error("divisor has wrong length");
  for (int s = 0; s < int(T.maximal().size()); ++s) {
    const Simplex& S = T.maximal()[s];
    RatVector rs(n);
    for (int i = 0; i < n; ++i) rs(i) = rho(S[i]);
    RatVector w = T.inverse_basis(s).transpose() * rs;
    for (int p = 0; p < int(T.points().size()); ++p) {
      if (std::binary_search(S.begin(), S.end(), p)) continue;
      Rational v = rho(p) - dot(w, T.points()[p]);
      if (!ok(v)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_convex_divisor(const Divisor& rho, const Triangulation& T) {
  return all_walls(rho, T, [](const Rational& v) { return v >= 0; });
}

bool is_strictly_convex_divisor(const Divisor& rho, const Triangulation& T) {
  return all_walls(rho, T, [](const Rational& v) { return v > 0; });
}

bool is_convex_by_definition(const Divisor& rho, const Triangulation& T, const DivisorLattice& DL) {
  for (int s = 0; s < int(T.maximal().size()); ++s) {
    LocalBasis B = local_basis(T, DL, s);
    Decomposition dec = decompose_divisor(B, rho);
    if (dec.linear + dec.local != rho) throw Error("decomposition does not reproduce the divisor");
    for (int o : B.outside)
      if (dec.local(o) < 0) return false;
  }
  return true;
}

KahlerCone kahler_cone(const Triangulation& T, const DivisorLattice& DL, GeneratorMode mode,
                       bool filter) {
  KahlerCone K;
  const size_t all_pairs = T.maximal().size() * size_t(DL.d - DL.n);
  if (mode == GeneratorMode::Automatic)
    mode = all_pairs > kAutomaticWallThreshold ? GeneratorMode::Walls : GeneratorMode::All;
  K.mode = mode;
  K.filtered = filter;

  std::vector<Simplex> dagger;
  if (filter)
    for (int p = 0; p < DL.d; ++p)
      dagger.push_back(find_containing_simplex(T, IntVector(-T.points()[p])).simplex);

  std::set<IntVector, LexLess> gens;
  auto add = [&](int s, int p) {
    if (filter) {
      const Simplex& S = T.maximal()[s];
      const Simplex& D = dagger[p];
      Simplex sorted = D;
      std::sort(sorted.begin(), sorted.end());
      if (std::includes(S.begin(), S.end(), sorted.begin(), sorted.end())) return;
    }
    ++K.pairs_examined;
    IntVector v = primitive(n_s_vector(T, s, p));
    gens.insert(to_integer(DL.kernel_coordinates(to_rational(v))));
  };
  for (int s = 0; s < int(T.maximal().size()); ++s) {
    const Simplex& S = T.maximal()[s];
    if (mode == GeneratorMode::All) {
      for (int p = 0; p < DL.d; ++p)
        if (!std::binary_search(S.begin(), S.end(), p)) add(s, p);
    } else {
      for (int pos = 0; pos < T.rank(); ++pos) {
        const Simplex& U = T.maximal()[T.neighbors()[s][pos]];
        for (int p : U)
          if (!std::binary_search(S.begin(), S.end(), p)) add(s, p);
      }
    }
  }
  K.generators.assign(gens.begin(), gens.end());
  K.cone = RationalCone::from_inequalities(DL.rank(), K.generators);
  return K;
}

SectionSpace section_space(const Triangulation& T, const DivisorLattice& DL, const Divisor& rho) {
  if (rho.size() != DL.d) throw Error("divisor has wrong length");
  for (int i = 0; i < DL.d; ++i)
    if (mp::denominator(rho(i)) != 1 || rho(i) < 0)
      throw Error("section space needs nonnegative integer coefficients");
  if (!is_convex_divisor(rho, T)) throw Error("divisor is not convex");
  SectionSpace S;
  S.rho = rho;
  S.polytope = rho_dual_polytope(DL.n, DL.points, rho);
  for (const auto& v : lattice_points(S.polytope)) {
    Section sec;
    sec.point = v;
    sec.exponents.resize(DL.d);
    for (int i = 0; i < DL.d; ++i) {
      sec.exponents(i) = dot(v, DL.points[i]) + mp::numerator(rho(i));
      if (sec.exponents(i) < 0) throw Error("negative section exponent");
    }
    S.sections.push_back(std::move(sec));
  }
  return S;
}

CanonicalCount canonical_section_count(const Triangulation& T, const DivisorLattice& DL,
                                       const Divisor& rho) {
  if (!is_convex_divisor(rho, T)) throw Error("divisor is not convex");
  RationalPolytope R = rho_dual_polytope(DL.n, DL.points, rho);
  CanonicalCount c;
  if (R.dimension() < DL.n) {
    c.lower_dimensional = true;
    return c;
  }
  c.count = interior_lattice_points(R).size();
  return c;
}

std::vector<int> star_points(const Triangulation& T, const Simplex& s) {
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::set<int> out;
  for (const auto& m : T.maximal())
    if (std::includes(m.begin(), m.end(), sorted.begin(), sorted.end()))
      for (int p : m)
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) out.insert(p);
  return {out.begin(), out.end()};
}

OrbitDivisor restrict_divisor_to_orbit(const Triangulation& T, const DivisorLattice& DL,
                                       const Simplex& s, const Divisor& rho, const IntVector& v0) {
  if (rho.size() != DL.d) throw Error("divisor has wrong length");
  if (v0.size() != DL.n) throw Error("dual point has wrong rank");
  for (int i = 0; i < DL.d; ++i)
    if (Rational(dot(v0, DL.points[i])) < -rho(i))
      throw Error("point " + to_string(v0) + " is outside the rho-dual polytope");
  for (int i : s)
    if (Rational(dot(v0, DL.points.at(i))) != -rho(i))
      throw Error("point " + to_string(v0) + " is not on the face dual to the simplex");
  OrbitDivisor out;
  out.star = star_points(T, s);
  out.values.resize(out.star.size());
  for (size_t k = 0; k < out.star.size(); ++k)
    out.values(k) = rho(out.star[k]) + Rational(dot(v0, DL.points[out.star[k]]));
  return out;
}

}  // namespace toric
