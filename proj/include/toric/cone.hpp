#pragma once

#include "toric/exactlin.hpp"

#include <memory>
#include <mutex>

namespace toric {

// Finitely generated cone. Either description may be given; the other is
// produced on demand by double description and cached.
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(int ambient, const std::vector<IntVector>& gens,
                                      const std::vector<IntVector>& lineality = {});
  // {x : <a, x> >= 0 for every a in normals}
  static RationalCone from_inequalities(int ambient, const std::vector<IntVector>& normals);

  int ambient() const { return ambient_; }

  // extreme rays modulo lineality, primitive, lexicographically sorted
  const std::vector<IntVector>& generators() const;
  const std::vector<IntVector>& lineality() const;
  // irredundant inequality normals (equalities appear as +/- pairs)
  const std::vector<IntVector>& facet_normals() const;

  // inequality list as supplied or computed, possibly redundant
  const std::vector<IntVector>& inequalities() const;
  bool has_inequalities() const { return state_->have_h; }
  bool has_generators() const { return state_->have_v; }

  bool contains(const IntVector& x) const;
  bool contains(const RatVector& x) const;

  // ambient interior nonempty; the witness is an interior point
  bool interior_nonempty() const;
  const RatVector& interior_witness() const;
  int dimension() const;

 private:
  struct State {
    std::mutex mu;
    bool have_v = false, have_h = false, have_facets = false, have_interior = false;
    bool have_dim = false;
    bool v_reduced = false;  // gens are exactly the extreme rays
    std::vector<IntVector> gens, lin, ineq, facets;
    bool interior = false;
    RatVector witness;
    int dim = 0;
  };
  void ensure_v() const;
  void ensure_h() const;

  int ambient_ = 0;
  std::shared_ptr<State> state_ = std::make_shared<State>();
};

RationalCone dual_cone(const RationalCone& C);

struct DisjointnessReport {
  bool disjoint = false;
  bool first_full = false;
  bool second_full = false;
  RatVector common_point;  // set when the interiors meet
};
DisjointnessReport cone_interior_disjoint(const RationalCone& a, const RationalCone& b);

// generator-set equality after primitive normalization and sorting
bool same_generators(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

std::vector<IntVector> normalize_generators(const std::vector<IntVector>& gens);

}  // namespace toric
