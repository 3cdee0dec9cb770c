#pragma once

#include "toric/polytope.hpp"

namespace toric {

using Simplex = std::vector<int>;  // sorted point indices

class Triangulation {
 public:
  // Validates coverage of the host boundary: every simplex sits in a facet,
  // is nondegenerate, ridges are shared by exactly two simplices lying on
  // opposite sides, and cone volumes add up to the normalized volume.
  // Does not require reflexivity or the skeleton condition.
  static Triangulation from_simplices(std::shared_ptr<const LatticePolytope> host,
                                      std::vector<IntVector> points,
                                      std::vector<Simplex> maximal);

  int rank() const { return host_->rank(); }
  const LatticePolytope& host() const { return *host_; }
  std::shared_ptr<const LatticePolytope> host_ptr() const { return host_; }

  const std::vector<IntVector>& points() const { return points_; }
  int point_index(const IntVector& x) const;  // -1 if absent

  const std::vector<Simplex>& maximal() const { return maximal_; }
  // Lambda^(j): all j-simplices
  const std::vector<Simplex>& skeleton(int j) const { return skeleta_.at(j); }
  // neighbors()[s][k]: maximal simplex across the ridge opposite maximal()[s][k]
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }
  int host_facet(int s) const { return host_facet_.at(s); }
  int simplex_index(const Simplex& s) const;  // maximal only, -1 if absent
  // inverse of the matrix whose columns are the points of maximal simplex s
  const RatMatrix& inverse_basis(int s) const { return inverses_.at(s); }
  Integer cone_volume(int s) const;
  const std::vector<int>& simplices_in_facet(int f) const { return by_facet_.at(f); }

  bool satisfies_skeleton_condition() const;  // points == boundary skeleton of host

  bool operator==(const Triangulation& o) const;

 private:
  std::shared_ptr<const LatticePolytope> host_;
  std::vector<IntVector> points_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<Simplex>> skeleta_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> host_facet_;
  std::vector<RatMatrix> inverses_;
  std::vector<std::vector<int>> by_facet_;
};

std::vector<IntVector> boundary_skeleton_points(const LatticePolytope& P);

Triangulation build_triangulation(const LatticePolytope& P);
Triangulation build_triangulation(std::shared_ptr<const LatticePolytope> P);

// [L : L_0] for the sublattice generated by the points; 0 if they do not span
Integer check_spanning(const Triangulation& T);
Integer lattice_index(const std::vector<IntVector>& points, int n);

struct ContainingSimplex {
  Simplex simplex;           // points with strictly positive coefficient
  RatVector coefficients;    // aligned with simplex
  int maximal = -1;          // an enclosing maximal simplex
};
ContainingSimplex find_containing_simplex(const Triangulation& T, const IntVector& x);
ContainingSimplex find_containing_simplex(const Triangulation& T, const RatVector& x);

struct FlopCircuit {
  Simplex s, t;  // d0 d1 d2 d3 and d0 d4 d2 d3
  int d0 = -1, d1 = -1, d2 = -1, d3 = -1, d4 = -1;
  // the same square seen from the other facet through the 2-face
  Simplex s_companion, t_companion;
  int d0_companion = -1;
  int two_face = -1;  // host face id
};

std::vector<FlopCircuit> flop_candidates(const Triangulation& T);
Triangulation apply_flop(const Triangulation& T, const FlopCircuit& c);

}  // namespace toric
