#pragma once

#include "toric/exactlin.hpp"

#include <map>
#include <memory>

namespace toric {

// <normal, x> >= -offset
struct Facet {
  IntVector normal;
  Integer offset;
};

struct Face {
  int id = -1;
  int dim = -1;
  std::vector<int> vertices;  // sorted indices into vertices()
  std::vector<int> facets;    // sorted indices of the facets containing this face
};

class LatticePolytope {
 public:
  static LatticePolytope from_vertices(const std::vector<IntVector>& points);

  int rank() const { return n_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  // proper faces, ordered by dimension then vertex set
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const;
  std::vector<int> faces_of_dim(int k) const;
  int face_with_vertices(const std::vector<int>& vertex_set) const;  // -1 if absent
  int face_with_facets(const std::vector<int>& facet_set) const;     // -1 if absent
  int facet_face(int facet_index) const;
  int vertex_face(int vertex_index) const;
  // faces of dimension dim-1 inside the given face
  const std::vector<int>& subfaces(int id) const { return children_.at(id); }

  bool contains(const IntVector& x) const;
  // smallest face containing x; -1 for interior points; throws outside
  int minimal_face(const IntVector& x) const;
  std::vector<int> tight_facets(const IntVector& x) const;

  int vertex_index(const IntVector& v) const;  // -1 if not a vertex

 private:
  int n_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> children_;
  std::vector<int> facet_face_;
  std::map<std::vector<int>, int> by_vertices_;
  std::map<std::vector<int>, int> by_facets_;
};

// <normal, y> >= -offset with rational offsets
struct RationalHalfspace {
  IntVector normal;
  Rational offset;
};

struct RationalPolytope {
  int n = 0;
  std::vector<RatVector> vertices;
  std::vector<RationalHalfspace> halfspaces;
  int dimension() const;
  bool contains(const RatVector& y) const;
  bool interior_contains(const RatVector& y) const;  // strict on every halfspace
};

struct ClassifiedPoint {
  IntVector point;
  int face = -1;  // minimal face id, -1 for interior
  bool interior() const { return face < 0; }
};

RationalPolytope dual_polytope(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);
// integral dual for reflexive P
LatticePolytope dual_lattice_polytope(const LatticePolytope& P);

std::vector<ClassifiedPoint> lattice_points(const LatticePolytope& P);
std::vector<IntVector> lattice_points(const RationalPolytope& P);
std::vector<IntVector> interior_lattice_points(const RationalPolytope& P);
std::vector<IntVector> face_interior_points(const LatticePolytope& P, int face_id);

// face F of P -> face F* of Pd, Pd the dual of reflexive P
int dual_face(const LatticePolytope& P, const LatticePolytope& Pd, int face_id);

// {y : <y, delta> >= -rho^delta}
RationalPolytope rho_dual_polytope(int n, const std::vector<IntVector>& points, const RatVector& rho);

Integer normalized_volume(const LatticePolytope& P);

}  // namespace toric
