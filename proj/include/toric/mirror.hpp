#pragma once

#include "toric/divisors.hpp"

#include <optional>

namespace toric {

struct CorrectionTerm {
  int face = -1;       // codim-2 face of the polytope the sum runs over
  int dual_face = -1;  // its dual face
  size_t interior = 0, dual_interior = 0, product = 0;
};

struct HodgeReport {
  int d = 0, n = 0;
  long base = 0;
  std::vector<CorrectionTerm> corrections;
  long total = 0;
  std::vector<std::string> warnings;
  long correction_sum() const;
};

// (d - n) plus the codim-2 face corrections of P
HodgeReport picard_dim(const LatticePolytope& P);
// same with d taken from T; warns on skeleton or spanning defects
HodgeReport picard_dim(const LatticePolytope& P, const Triangulation& T);
// (d* - n) plus the codim-2 face corrections of the dual
HodgeReport deformation_dim(const LatticePolytope& P);

// the Kahler-cone construction applied to a triangulation of the dual boundary
KahlerCone degeneration_cone(const Triangulation& Tstar, const DivisorLattice& DLstar,
                             GeneratorMode mode = GeneratorMode::Automatic);

enum class DegenerationClass { NotNonnegative, Nonnegative, Positive, MaximalUnipotent };
std::string to_string(DegenerationClass c);

struct DegenerationFamily {
  RatVector mu;
  DegenerationClass classification = DegenerationClass::NotNonnegative;
  std::vector<Rational> pairings;  // against the cone generators, in order
  bool coordinates_positive = false;
  std::string limit;               // "z^{0*}" for maximal unipotent directions
};

DegenerationFamily classify_degeneration(const RatVector& mu, const DivisorLattice& DLstar,
                                         const KahlerCone& cone);

struct MirrorReport {
  HodgeReport pic_x, def_x, pic_mirror, def_mirror;
  bool pic_matches_mirror_def = false;
  bool def_matches_mirror_pic = false;
  bool corrections_swap = false;
  bool kahler_is_degeneration = false;         // over the dual triangulation
  bool mirror_kahler_is_degeneration = false;  // over the primal triangulation
  size_t kahler_generators = 0, mirror_kahler_generators = 0;
  bool k3 = false;
  long k3_sum = 0;
  bool k3_sum_is_20 = false;
  long k3_edge_correction = 0;
  bool k3_sum_matches_corrected = false;  // sum == 20 + edge correction
  std::vector<std::string> warnings;
};

MirrorReport mirror_check(const LatticePolytope& P, const Triangulation& T, const Triangulation& Tstar,
                          GeneratorMode mode = GeneratorMode::Automatic);

struct OrbitClosureData {
  Simplex simplex;
  int m = 0;              // rank of the quotient lattice
  IntMatrix projection;   // m x n
  std::vector<int> star;  // Star(s)^(0), point indices
  std::vector<Simplex> star_simplices;  // maximal simplices containing s, minus s
  std::vector<IntVector> projected;     // aligned with star
  std::optional<LatticePolytope> polytope;
  std::optional<Triangulation> triangulation;
  std::string triangulation_error;
};

OrbitClosureData orbit_closure_data(const Triangulation& T, const Simplex& s);

struct FlopReport {
  FlopCircuit circuit;
  HodgeReport pic_before, pic_after;
  bool pic_unchanged = false;
  KahlerCone before, after;
  DisjointnessReport disjoint;
  RatVector circuit_vector;      // e^{d1} + e^{d4} - e^{d2} - e^{d3}
  IntVector circuit_generator;   // its kernel coordinates
  bool separates = false;        // generator of one cone, negative generator of the other
};

FlopReport flop_mirror_report(const Triangulation& T, const Triangulation& Tflop,
                              GeneratorMode mode = GeneratorMode::Automatic);

struct FamilyTerm {
  int label = -1;
  IntVector point;
  IntVector exponents;
  Rational coefficient;
  Rational parameter_power;
};

struct OneParameterFamily {
  IntVector base_exponents;  // the z^{0*} monomial
  std::vector<FamilyTerm> terms;
  RatVector mu;
  bool constant = false;
  int deformed_terms = 0;
};

OneParameterFamily one_parameter_family(const std::vector<IntVector>& points,
                                        const std::vector<IntVector>& dual_points,
                                        const RatVector& mu, const RatVector& base);
bool equivalent_families(const OneParameterFamily& a, const OneParameterFamily& b);

}  // namespace toric
