#include "toric/mirror.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

std::vector<size_t> interior_counts(const LatticePolytope& P) {
  std::vector<size_t> c(P.faces().size(), 0);
  for (const auto& p : lattice_points(P))
    if (!p.interior()) ++c[p.face];
  return c;
}

// sum over codim-2 faces F of P of |Int F| * |Int F*|
std::vector<CorrectionTerm> corrections(const LatticePolytope& P, const LatticePolytope& Pd) {
  const auto cp = interior_counts(P), cd = interior_counts(Pd);
  std::vector<CorrectionTerm> out;
  for (int f : P.faces_of_dim(P.rank() - 2)) {
    CorrectionTerm t;
    t.face = f;
    t.dual_face = dual_face(P, Pd, f);
    t.interior = cp[f];
    t.dual_interior = cd[t.dual_face];
    t.product = t.interior * t.dual_interior;
    out.push_back(t);
  }
  return out;
}

HodgeReport assemble(int n, int d, std::vector<CorrectionTerm> terms) {
  HodgeReport r;
  r.n = n;
  r.d = d;
  r.base = long(d) - n;
  r.corrections = std::move(terms);
  r.total = r.base + r.correction_sum();
  return r;
}

void require_reflexive(const LatticePolytope& P) {
  if (!is_reflexive(P)) throw Error("polytope is not reflexive");
}

}  // namespace

long HodgeReport::correction_sum() const {
  long s = 0;
  for (const auto& c : corrections) s += long(c.product);
  return s;
}

HodgeReport picard_dim(const LatticePolytope& P) {
  require_reflexive(P);
  const LatticePolytope Pd = dual_lattice_polytope(P);
  return assemble(P.rank(), int(boundary_skeleton_points(P).size()), corrections(P, Pd));
}

HodgeReport picard_dim(const LatticePolytope& P, const Triangulation& T) {
  require_reflexive(P);
  const LatticePolytope Pd = dual_lattice_polytope(P);
  HodgeReport r = assemble(P.rank(), int(T.points().size()), corrections(P, Pd));
  if (!T.satisfies_skeleton_condition())
    r.warnings.push_back("triangulation points differ from the boundary skeleton points");
  const Integer idx = check_spanning(T);
  if (idx != 1)
    r.warnings.push_back("points generate a sublattice of index " + idx.str());
  return r;
}

HodgeReport deformation_dim(const LatticePolytope& P) {
  require_reflexive(P);
  const LatticePolytope Pd = dual_lattice_polytope(P);
  return assemble(P.rank(), int(boundary_skeleton_points(Pd).size()), corrections(Pd, P));
}

KahlerCone degeneration_cone(const Triangulation& Tstar, const DivisorLattice& DLstar,
                             GeneratorMode mode) {
  return kahler_cone(Tstar, DLstar, mode);
}

std::string to_string(DegenerationClass c) {
  switch (c) {
    case DegenerationClass::NotNonnegative: return "not nonnegative";
    case DegenerationClass::Nonnegative: return "nonnegative";
    case DegenerationClass::Positive: return "positive";
    case DegenerationClass::MaximalUnipotent: return "maximal unipotent";
  }
  return "?";
}

DegenerationFamily classify_degeneration(const RatVector& mu, const DivisorLattice& DLstar,
                                         const KahlerCone& cone) {
  if (mu.size() != DLstar.d) throw Error("mu has wrong length");
  DegenerationFamily f;
  f.mu = mu;
  const RatVector iota = DLstar.iota_star(mu);
  bool nonneg = true, pos = true;
  for (const auto& g : cone.generators) {
    Rational s = 0;
    for (int j = 0; j < g.size(); ++j)
      if (g(j) != 0) s += iota(j) * Rational(g(j));
    f.pairings.push_back(s);
    if (s < 0) nonneg = false;
    if (s <= 0) pos = false;
  }
  f.coordinates_positive = true;
  for (int i = 0; i < mu.size(); ++i)
    if (mu(i) <= 0) f.coordinates_positive = false;
  if (!nonneg)
    f.classification = DegenerationClass::NotNonnegative;
  else if (!pos)
    f.classification = DegenerationClass::Nonnegative;
  else if (!f.coordinates_positive)
    f.classification = DegenerationClass::Positive;
  else {
    f.classification = DegenerationClass::MaximalUnipotent;
    f.limit = "z^{0*}";
  }
  return f;
}

MirrorReport mirror_check(const LatticePolytope& P, const Triangulation& T, const Triangulation& Tstar,
                          GeneratorMode mode) {
  require_reflexive(P);
  const LatticePolytope Pd = dual_lattice_polytope(P);
  if (T.host().vertices() != P.vertices()) throw Error("triangulation is not over the polytope");
  if (Tstar.host().vertices() != Pd.vertices())
    throw Error("dual triangulation is not over the dual polytope");

  MirrorReport r;
  r.pic_x = picard_dim(P, T);
  r.def_x = deformation_dim(P);
  r.pic_mirror = picard_dim(Pd, Tstar);
  r.def_mirror = deformation_dim(Pd);
  r.pic_matches_mirror_def = r.pic_x.total == r.def_mirror.total;
  r.def_matches_mirror_pic = r.def_x.total == r.pic_mirror.total;

  auto key = [](const HodgeReport& h, bool swap) {
    std::multiset<std::tuple<int, int, size_t>> s;
    for (const auto& c : h.corrections)
      s.insert(swap ? std::make_tuple(c.dual_face, c.face, c.product)
                    : std::make_tuple(c.face, c.dual_face, c.product));
    return s;
  };
  // pic(X) sums over faces of P; def(X*) sums over faces of the dual of Pd, which is P again
  r.corrections_swap = key(r.pic_x, false) == key(r.def_mirror, false) &&
                       key(r.def_x, false) == key(r.pic_mirror, false);

  const DivisorLattice DLs = build_divisor_lattice(Tstar);
  const KahlerCone ks = kahler_cone(Tstar, DLs, mode), ds = degeneration_cone(Tstar, DLs, mode);
  r.kahler_generators = normalize_generators(ks.generators).size();
  r.kahler_is_degeneration = same_generators(ks.generators, ds.generators);

  const DivisorLattice DL = build_divisor_lattice(T);
  const KahlerCone k = kahler_cone(T, DL, mode), dg = degeneration_cone(T, DL, mode);
  r.mirror_kahler_generators = normalize_generators(k.generators).size();
  r.mirror_kahler_is_degeneration = same_generators(k.generators, dg.generators);

  for (const auto* h : {&r.pic_x, &r.pic_mirror})
    r.warnings.insert(r.warnings.end(), h->warnings.begin(), h->warnings.end());

  if (P.rank() == 3) {
    r.k3 = true;
    r.k3_sum = r.pic_x.total + r.def_x.total;
    r.k3_sum_is_20 = r.k3_sum == 20;
    r.k3_edge_correction = r.pic_x.correction_sum();
    r.k3_sum_matches_corrected = r.k3_sum == 20 + r.k3_edge_correction;
  }
  return r;
}

OrbitClosureData orbit_closure_data(const Triangulation& T, const Simplex& s) {
  const int n = T.rank();
  OrbitClosureData o;
  o.simplex = s;
  std::sort(o.simplex.begin(), o.simplex.end());
  const int k = int(o.simplex.size());
  if (k == 0 || k > n) throw Error("simplex has wrong size");
  o.m = n - k;

  bool found = false;
  for (const auto& m : T.maximal())
    if (std::includes(m.begin(), m.end(), o.simplex.begin(), o.simplex.end())) {
      found = true;
      Simplex rest;
      std::set_difference(m.begin(), m.end(), o.simplex.begin(), o.simplex.end(),
                          std::back_inserter(rest));
      o.star_simplices.push_back(rest);
    }
  if (!found) throw Error("simplex is not in the triangulation");
  o.star = star_points(T, o.simplex);

  IntMatrix S(n, k);
  for (int j = 0; j < k; ++j) S.col(j) = T.points()[o.simplex[j]];
  const SmithDecomposition snf = smith_normal_form(S);
  if (snf.rank != k) throw Error("simplex points are dependent");
  o.projection = snf.U.bottomRows(o.m);
  if (o.m == 0) return o;

  for (int p : o.star) o.projected.push_back(o.projection * T.points()[p]);
  try {
    auto host = std::make_shared<const LatticePolytope>(LatticePolytope::from_vertices(o.projected));
    o.polytope = *host;
    std::vector<Simplex> simp;
    for (const auto& r : o.star_simplices) {
      Simplex q;
      for (int p : r)
        q.push_back(int(std::lower_bound(o.star.begin(), o.star.end(), p) - o.star.begin()));
      simp.push_back(q);
    }
    o.triangulation = Triangulation::from_simplices(host, o.projected, simp);
  } catch (const Error& e) {
    o.triangulation_error = e.what();
  }
  return o;
}

FlopReport flop_mirror_report(const Triangulation& T, const Triangulation& Tflop, GeneratorMode mode) {
  if (T == Tflop) throw Error("triangulations are equal; not a flop");
  FlopReport r;
  bool found = false;
  for (const auto& c : flop_candidates(T)) {
    if (apply_flop(T, c) == Tflop) {
      r.circuit = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error("second triangulation is not a flop of the first");

  r.pic_before = picard_dim(T.host(), T);
  r.pic_after = picard_dim(Tflop.host(), Tflop);
  r.pic_unchanged = r.pic_before.total == r.pic_after.total;

  const DivisorLattice DL = build_divisor_lattice(T);
  const DivisorLattice DLf = build_divisor_lattice(Tflop);
  if (DL.points != DLf.points) throw Error("flop changed the point set");
  r.before = kahler_cone(T, DL, mode);
  r.after = kahler_cone(Tflop, DLf, mode);
  r.disjoint = cone_interior_disjoint(r.before.cone, r.after.cone);

  // affine relation among the four square points, positive on d1
  const int q[4] = {r.circuit.d1, r.circuit.d2, r.circuit.d3, r.circuit.d4};
  IntMatrix Q(DL.n, 4);
  for (int j = 0; j < 4; ++j) Q.col(j) = DL.points[q[j]];
  const IntMatrix K = integer_kernel_basis(Q);
  if (K.cols() != 1) throw Error("flop points do not form a circuit");
  IntVector lam = K.col(0);
  if (lam(0) < 0) lam = -lam;
  RatVector v = RatVector::Zero(DL.d);
  for (int j = 0; j < 4; ++j) v(q[j]) += Rational(lam(j));
  r.circuit_vector = v;
  const RatVector c = DL.kernel_coordinates(v);
  r.circuit_generator = primitive(c);

  auto pairs_nonneg = [](const KahlerCone& k, const RatVector& x) {
    std::vector<RatVector> h;
    for (const auto& g : k.generators) h.push_back(to_rational(g));
    return !rational_feasible({RatVector(-x)}, h, int(x.size())).feasible;
  };
  const RatVector nc = -c;
  const bool b_pos = pairs_nonneg(r.before, c), b_neg = pairs_nonneg(r.before, nc);
  const bool a_pos = pairs_nonneg(r.after, c), a_neg = pairs_nonneg(r.after, nc);
  r.separates = (b_pos && !b_neg && a_neg && !a_pos) || (b_neg && !b_pos && a_pos && !a_neg);
  return r;
}

OneParameterFamily one_parameter_family(const std::vector<IntVector>& points,
                                        const std::vector<IntVector>& dual_points,
                                        const RatVector& mu, const RatVector& base) {
  const Eigen::Index m = Eigen::Index(dual_points.size());
  if (mu.size() != m || base.size() != m) throw Error("family data has wrong length");
  OneParameterFamily f;
  f.mu = mu;
  f.base_exponents = IntVector::Ones(Eigen::Index(points.size()));
  for (Eigen::Index k = 0; k < m; ++k) {
    FamilyTerm t;
    t.label = int(k);
    t.point = dual_points[k];
    t.exponents.resize(Eigen::Index(points.size()));
    for (size_t i = 0; i < points.size(); ++i)
      t.exponents(Eigen::Index(i)) = dot(dual_points[k], points[i]) + 1;
    t.coefficient = base(k);
    t.parameter_power = mu(k);
    if (mu(k) != 0 && base(k) != 0) ++f.deformed_terms;
    f.terms.push_back(std::move(t));
  }
  f.constant = f.deformed_terms == 0;
  return f;
}

bool equivalent_families(const OneParameterFamily& a, const OneParameterFamily& b) {
  if (a.base_exponents != b.base_exponents || a.terms.size() != b.terms.size()) return false;
  std::optional<Rational> alpha;
  for (size_t k = 0; k < a.terms.size(); ++k) {
    const auto &x = a.terms[k], &y = b.terms[k];
    if (x.point != y.point || x.exponents != y.exponents || x.coefficient != y.coefficient)
      return false;
    if (x.parameter_power == 0 || y.parameter_power == 0) {
      if (x.parameter_power != y.parameter_power) return false;
      continue;
    }
    const Rational r = y.parameter_power / x.parameter_power;
    if (r <= 0) return false;
    if (alpha && *alpha != r) return false;
    alpha = r;
  }
  return true;
}

}  // namespace toric
