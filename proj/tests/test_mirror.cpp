#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace toric;
using fx::iv;

namespace {

std::vector<IntVector> dual_points_by_scan(const std::vector<IntVector>& V, long B) {
  // vertices are not needed by the oracle; any point set with the same hull works
  return fx::box_points(V, int(V[0].size()), B);
}

long box_for(const std::vector<IntVector>& V) { return V[0].size() == 4 ? 5 : 4; }

}  // namespace

TEST(Hodge, GoldenValues) {
  auto h = [](const std::vector<IntVector>& V) {
    auto P = LatticePolytope::from_vertices(V);
    return std::pair<long, long>(picard_dim(P).total, deformation_dim(P).total);
  };
  EXPECT_EQ(h(fx::reflexive_simplex(4)), (std::pair<long, long>(1, 101)));
  EXPECT_EQ(h(fx::reflexive_simplex(3)), (std::pair<long, long>(1, 19)));
  EXPECT_EQ(h(fx::cross_polytope(3)), (std::pair<long, long>(3, 17)));
  EXPECT_EQ(h(fx::cube(3)), (std::pair<long, long>(17, 3)));
}

TEST(Hodge, AgreesWithBoxScanOracle) {
  for (const auto& [name, V] : fx::reflexive_fixtures()) {
    if (V[0].size() < 3) continue;
    auto P = LatticePolytope::from_vertices(V);
    const long B = box_for(V);
    EXPECT_EQ(picard_dim(P).total, fx::batyrev_h11(V, B)) << name;
    EXPECT_EQ(deformation_dim(P).total, fx::batyrev_h11(dual_points_by_scan(V, B), B)) << name;
  }
}

TEST(Hodge, FormulasSwapUnderDuality) {
  for (const auto& [name, V] : fx::reflexive_fixtures()) {
    if (V[0].size() < 3) continue;
    auto P = LatticePolytope::from_vertices(V);
    auto D = dual_lattice_polytope(P);
    auto a = picard_dim(P), b = deformation_dim(D);
    EXPECT_EQ(a.total, b.total) << name;
    EXPECT_EQ(a.correction_sum(), b.correction_sum()) << name;
    EXPECT_EQ(deformation_dim(P).total, picard_dim(D).total) << name;
    auto T = build_triangulation(P);
    auto withT = picard_dim(P, T);
    EXPECT_EQ(withT.total, a.total);
    EXPECT_TRUE(withT.warnings.empty()) << name;
  }
}

TEST(Hodge, K3Sums) {
  for (const auto& V : {fx::reflexive_simplex(3), fx::cross_polytope(3), fx::cube(3)}) {
    auto P = fx::poly(V);
    auto T = build_triangulation(P);
    auto Ts = build_triangulation(dual_lattice_polytope(*P));
    auto r = mirror_check(*P, T, Ts);
    EXPECT_TRUE(r.k3);
    EXPECT_EQ(r.k3_sum, 20);
    EXPECT_TRUE(r.k3_sum_is_20);
    EXPECT_EQ(r.k3_edge_correction, 0);
    EXPECT_TRUE(r.pic_matches_mirror_def && r.def_matches_mirror_pic);
    EXPECT_TRUE(r.kahler_is_degeneration && r.mirror_kahler_is_degeneration);
  }
  // an edge with interior points on both sides adds to the sum
  auto P = fx::poly(fx::diamond_segment());
  auto r = mirror_check(*P, build_triangulation(P), build_triangulation(dual_lattice_polytope(*P)));
  EXPECT_EQ(r.pic_x.total, 13);
  EXPECT_EQ(r.def_x.total, 11);
  EXPECT_EQ(r.k3_sum, 24);
  EXPECT_FALSE(r.k3_sum_is_20);
  EXPECT_EQ(r.k3_edge_correction, 4);
  EXPECT_TRUE(r.k3_sum_matches_corrected);
  EXPECT_TRUE(r.corrections_swap);
}

TEST(Hodge, WarnsOnCoarseTriangulation) {
  auto P = fx::poly(fx::square());
  auto T = build_triangulation(P);
  auto r = picard_dim(*P, T);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("index 2"), std::string::npos);
  EXPECT_THROW(picard_dim(LatticePolytope::from_vertices({iv({2, 0}), iv({0, 2}), iv({-2, 0}), iv({0, -2})})),
               Error);
}

TEST(Degeneration, ConeEqualsKahlerConeOfDual) {
  for (const auto& [name, V] : fx::reflexive_fixtures()) {
    if (name == "quintic" || name == "product_of_diamonds" || name == "cross4") continue;  // covered by acceptance
    auto D = std::make_shared<const LatticePolytope>(dual_lattice_polytope(LatticePolytope::from_vertices(V)));
    auto Ts = build_triangulation(D);
    auto DLs = build_divisor_lattice(Ts);
    auto a = degeneration_cone(Ts, DLs), b = kahler_cone(Ts, DLs);
    EXPECT_EQ(normalize_generators(a.generators), normalize_generators(b.generators)) << name;
    if (DLs.rank() <= 4) EXPECT_TRUE(same_generators(a.cone.generators(), b.cone.generators())) << name;
  }
}

TEST(Degeneration, Classification) {
  auto P = LatticePolytope::from_vertices(fx::cross_polytope(3));
  auto Ts = build_triangulation(dual_lattice_polytope(P));
  auto DLs = build_divisor_lattice(Ts);
  auto K = degeneration_cone(Ts, DLs);
  ASSERT_TRUE(K.cone.interior_nonempty());

  auto zero = classify_degeneration(RatVector::Zero(DLs.d), DLs, K);
  EXPECT_EQ(zero.classification, DegenerationClass::Nonnegative);
  EXPECT_FALSE(zero.coordinates_positive);

  // lift an interior class to a divisor, then shift by a large anticanonical multiple
  const RatVector w = K.cone.interior_witness();
  auto lift = solve_rational(to_rational(IntMatrix(DLs.kernel.transpose())), w);
  ASSERT_TRUE(lift);
  RatVector mu = *lift;
  Rational lo = 0;
  for (int i = 0; i < DLs.d; ++i) lo = std::min(lo, mu(i));
  mu += (Rational(1) - lo) * anticanonical(DLs);
  auto mu_class = classify_degeneration(mu, DLs, K);
  EXPECT_EQ(mu_class.classification, DegenerationClass::MaximalUnipotent);
  EXPECT_EQ(mu_class.limit, "z^{0*}");

  auto neg = classify_degeneration(RatVector(-mu), DLs, K);
  EXPECT_EQ(neg.classification, DegenerationClass::NotNonnegative);

  // positive class, one coordinate pushed negative by a linear shift
  std::mt19937 rng(31);
  int positive_seen = 0;
  for (int t = 0; t < 20; ++t) {
    IntVector xi = fx::random_vector(rng, DLs.n, -4, 4);
    RatVector shifted = mu;
    for (int i = 0; i < DLs.d; ++i) shifted(i) += Rational(dot(xi, DLs.points[i]));
    auto c = classify_degeneration(shifted, DLs, K);
    EXPECT_EQ(c.pairings, mu_class.pairings);
    EXPECT_TRUE(c.classification == DegenerationClass::MaximalUnipotent ||
                c.classification == DegenerationClass::Positive);
    EXPECT_EQ(c.classification == DegenerationClass::MaximalUnipotent, c.coordinates_positive);
    positive_seen += c.classification == DegenerationClass::Positive;
  }
  EXPECT_GT(positive_seen, 0);
  EXPECT_THROW(classify_degeneration(RatVector::Zero(3), DLs, K), Error);
}

TEST(Degeneration, InvariantUnderLinearShift) {
  for (const auto& V : {fx::reflexive_simplex(3), fx::cube(3), fx::diamond_segment()}) {
    auto P = LatticePolytope::from_vertices(V);
    auto Ts = build_triangulation(dual_lattice_polytope(P));
    auto DLs = build_divisor_lattice(Ts);
    auto K = degeneration_cone(Ts, DLs);
    std::mt19937 rng(12);
    for (int k = 0; k < 4; ++k) {
      RatVector mu = fx::random_divisor(rng, DLs.d);
      if (k % 2) mu += Rational(4) * anticanonical(DLs);
      auto base = classify_degeneration(mu, DLs, K);
      for (int t = 0; t < 20; ++t) {
        IntVector xi = fx::random_vector(rng, DLs.n, -5, 5);
        RatVector s = mu;
        for (int i = 0; i < DLs.d; ++i) s(i) += Rational(dot(xi, DLs.points[i]));
        auto c = classify_degeneration(s, DLs, K);
        EXPECT_EQ(c.pairings, base.pairings);
        const bool pos_like = [](DegenerationClass x) {
          return x == DegenerationClass::Positive || x == DegenerationClass::MaximalUnipotent;
        }(c.classification);
        if (pos_like)
          EXPECT_TRUE(base.classification == DegenerationClass::Positive ||
                      base.classification == DegenerationClass::MaximalUnipotent);
        else
          EXPECT_EQ(c.classification, base.classification);
      }
    }
  }
}

TEST(OrbitClosure, OctahedronVertex) {
  auto T = build_triangulation(fx::poly(fx::cross_polytope(3)));
  const int v = T.point_index(iv({0, 0, 1}));
  auto o = orbit_closure_data(T, {v});
  EXPECT_EQ(o.m, 2);
  EXPECT_EQ(o.star.size(), 4u);
  ASSERT_TRUE(o.polytope);
  EXPECT_EQ(o.polytope->vertices().size(), 4u);
  EXPECT_EQ(lattice_points(*o.polytope).size(), 5u);
  ASSERT_TRUE(o.triangulation) << o.triangulation_error;
  EXPECT_EQ(o.triangulation->maximal().size(), 4u);
  // projection kills the simplex and is onto Z^2
  EXPECT_TRUE((o.projection * T.points()[v]).isZero());
  EXPECT_EQ(fx::determinantal_divisor(o.projection, 2), 1);
}

TEST(OrbitClosure, QuinticEdgeAndMaximalSimplex) {
  auto T = build_triangulation(fx::poly(fx::reflexive_simplex(4)));
  auto o = orbit_closure_data(T, {0, 1});
  EXPECT_EQ(o.m, 2);
  EXPECT_EQ(o.star.size(), 3u);
  ASSERT_TRUE(o.polytope);
  EXPECT_EQ(o.polytope->vertices().size(), 3u);
  EXPECT_TRUE(is_reflexive(*o.polytope));
  ASSERT_TRUE(o.triangulation);
  auto full = orbit_closure_data(T, T.maximal()[0]);
  EXPECT_EQ(full.m, 0);
  EXPECT_TRUE(full.star.empty());
  EXPECT_FALSE(full.polytope);
  EXPECT_THROW(orbit_closure_data(T, {}), Error);
}

TEST(Flop, MirrorReport) {
  auto P = fx::poly(fx::product_of_diamonds());
  auto T = build_triangulation(P);
  auto c = flop_candidates(T);
  ASSERT_FALSE(c.empty());
  auto F = apply_flop(T, c[0]);
  auto r = flop_mirror_report(T, F);
  EXPECT_TRUE(r.pic_unchanged);
  EXPECT_TRUE(r.disjoint.disjoint);
  EXPECT_TRUE(r.disjoint.first_full && r.disjoint.second_full);
  EXPECT_TRUE(r.separates);
  // the circuit relation lies in ker(beta) and is primitive
  auto DL = build_divisor_lattice(T);
  EXPECT_TRUE((to_rational(DL.beta) * r.circuit_vector).isZero());
  EXPECT_EQ(content(r.circuit_generator), 1);
  EXPECT_THROW(flop_mirror_report(T, T), Error);
  // the mirror side is untouched: same polytope, same degeneration data
  EXPECT_EQ(r.pic_before.total, picard_dim(*P).total);
}

TEST(Family, ExponentsAndRescaling) {
  auto P = LatticePolytope::from_vertices(fx::reflexive_simplex(4));
  auto pts = P.vertices();
  std::vector<IntVector> dpts;
  for (const auto& lp : lattice_points(dual_lattice_polytope(P))) dpts.push_back(lp.point);
  const Eigen::Index m = Eigen::Index(dpts.size());
  RatVector base = RatVector::Ones(m), mu = RatVector::Zero(m);
  int origin = -1;
  for (Eigen::Index k = 0; k < m; ++k)
    if (dpts[k].isZero()) origin = int(k);
  ASSERT_GE(origin, 0);
  auto flat = one_parameter_family(pts, dpts, mu, base);
  EXPECT_TRUE(flat.constant);
  EXPECT_EQ(flat.terms[origin].exponents, IntVector::Ones(5).eval());
  // exponents are degree 5 monomials
  for (const auto& t : flat.terms) {
    EXPECT_EQ(t.exponents.sum(), 5);
    for (int i = 0; i < 5; ++i) EXPECT_GE(t.exponents(i), 0);
  }
  mu = RatVector::Ones(m);
  mu(origin) = 0;
  auto a = one_parameter_family(pts, dpts, mu, base);
  EXPECT_EQ(a.deformed_terms, int(m) - 1);
  auto b = one_parameter_family(pts, dpts, RatVector(Rational(3, 2) * mu), base);
  EXPECT_TRUE(equivalent_families(a, b));
  auto c = one_parameter_family(pts, dpts, RatVector(-mu), base);
  EXPECT_FALSE(equivalent_families(a, c));
  EXPECT_THROW(one_parameter_family(pts, dpts, RatVector::Ones(3), base), Error);
}
