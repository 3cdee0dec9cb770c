#pragma once

#include "toric/cone.hpp"
#include "toric/triangulation.hpp"

namespace toric {

struct DivisorLattice {
  int n = 0, d = 0;
  std::vector<IntVector> points;  // labels of e^delta, in triangulation order
  IntMatrix beta;                 // n x d, columns are the points
  IntMatrix kernel;               // d x (d - n), saturated basis of ker(beta)

  int rank() const { return int(kernel.cols()); }
  // coordinates c with kernel * c = v; throws if v is not in ker(beta)
  RatVector kernel_coordinates(const RatVector& v) const;
  RatVector from_kernel(const RatVector& c) const;
  // pairing of a divisor with the kernel basis
  RatVector iota_star(const RatVector& rho) const;

  std::vector<int> pivot_rows;
  RatMatrix pivot_inverse;
};

using Divisor = RatVector;  // coefficients rho^delta over the triangulation points

DivisorLattice build_divisor_lattice(const Triangulation& T);
Divisor anticanonical(const DivisorLattice& DL);

// n^delta: e^delta plus the cone coordinates of -delta
RatVector n_vector(const Triangulation& T, const DivisorLattice& DL, int delta);
// n_s^delta' for maximal simplex s and delta' outside it
RatVector n_s_vector(const Triangulation& T, int s, int delta_prime);
// <rho, n_s^delta'> without forming the vector
Rational wall_pairing(const Triangulation& T, int s, const RatVector& rho, int delta_prime);

struct LocalBasis {
  int simplex = -1;
  std::vector<int> inside, outside;  // point indices
  // columns: e^delta (inside order) then the kernel part (outside order)
  RatMatrix basis;
  // rows: e_{delta,s} then n_{delta',s}, expressed in the e^{delta dagger} basis
  RatMatrix dual;
  // false when the n^delta' are dependent and n_s^delta' span the kernel part instead
  bool uses_n_delta = true;
  RatMatrix n_in, n_out;  // kernel-part coordinates on inside / outside labels
  RatMatrix g_in, g_out;  // -n_in n_out^{-1} and n_out^{-1}
};
LocalBasis local_basis(const Triangulation& T, const DivisorLattice& DL, int s);

struct Decomposition {
  Divisor linear;  // rho'_s, in the image of beta*
  Divisor local;   // rho_s
};
Decomposition decompose_divisor(const LocalBasis& B, const Divisor& rho);

bool is_convex_divisor(const Divisor& rho, const Triangulation& T);
bool is_strictly_convex_divisor(const Divisor& rho, const Triangulation& T);
// the definition route: signs of rho_s on every chart
bool is_convex_by_definition(const Divisor& rho, const Triangulation& T, const DivisorLattice& DL);

enum class GeneratorMode { All, Walls, Automatic };

struct KahlerCone {
  std::vector<IntVector> generators;  // generators of n_{Lambda,+} in kernel coordinates
  RationalCone cone;                  // its dual, the Kahler cone
  GeneratorMode mode = GeneratorMode::All;
  bool filtered = false;
  size_t pairs_examined = 0;
};

// Walls mode uses only n_s^delta' across adjacent simplices. On a complete
// fan convexity across every wall is equivalent to global convexity, so the
// generated cone is the same; the generator list is shorter.
KahlerCone kahler_cone(const Triangulation& T, const DivisorLattice& DL,
                       GeneratorMode mode = GeneratorMode::Automatic, bool filter = false);
// pairs above this count switch Automatic to Walls
constexpr size_t kAutomaticWallThreshold = 20000;

struct Section {
  IntVector point;
  IntVector exponents;  // over the triangulation points
};

struct SectionSpace {
  Divisor rho;
  RationalPolytope polytope;
  std::vector<Section> sections;
};

SectionSpace section_space(const Triangulation& T, const DivisorLattice& DL, const Divisor& rho);

struct CanonicalCount {
  size_t count = 0;
  bool lower_dimensional = false;
};
CanonicalCount canonical_section_count(const Triangulation& T, const DivisorLattice& DL,
                                       const Divisor& rho);

std::vector<int> star_points(const Triangulation& T, const Simplex& s);

struct OrbitDivisor {
  std::vector<int> star;  // point indices of Star(s)^(0)
  RatVector values;       // aligned with star
};
OrbitDivisor restrict_divisor_to_orbit(const Triangulation& T, const DivisorLattice& DL,
                                       const Simplex& s, const Divisor& rho, const IntVector& v0);

}  // namespace toric
