#include "toric/cone.hpp"

#include <algorithm>
#include <set>

namespace toric {

std::vector<IntVector> normalize_generators(const std::vector<IntVector>& gens) {
  std::set<IntVector, LexLess> s;
  for (const auto& g : gens)
    if (!g.isZero()) s.insert(primitive(g));
  return {s.begin(), s.end()};
}

bool same_generators(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  auto x = normalize_generators(a), y = normalize_generators(b);
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!equal(x[i], y[i])) return false;
  return true;
}

RationalCone RationalCone::from_generators(int ambient, const std::vector<IntVector>& gens,
                                           const std::vector<IntVector>& lineality) {
  RationalCone c;
  c.ambient_ = ambient;
  for (const auto& g : gens)
    if (g.size() != ambient) throw Error("cone generator has wrong dimension");
  c.state_->gens = normalize_generators(gens);
  c.state_->lin = normalize_generators(lineality);
  c.state_->have_v = true;
  return c;
}

RationalCone RationalCone::from_inequalities(int ambient, const std::vector<IntVector>& normals) {
  RationalCone c;
  c.ambient_ = ambient;
  for (const auto& a : normals)
    if (a.size() != ambient) throw Error("cone inequality has wrong dimension");
  c.state_->ineq = normalize_generators(normals);
  c.state_->have_h = true;
  return c;
}

void RationalCone::ensure_v() const {
  State& s = *state_;
  if (s.have_v && s.v_reduced) return;
  // supplied generators may be redundant; reduce through the facets
  if (s.have_v) ensure_h();
  ConeDescription d = double_description(s.have_facets ? s.facets : s.ineq, ambient_);
  s.gens = d.rays;
  s.lin = d.lineality;
  s.have_v = s.v_reduced = true;
}

void RationalCone::ensure_h() const {
  State& s = *state_;
  if (s.have_h && s.have_facets) return;
  if (!s.have_h) {
    std::vector<IntVector> in = s.gens;
    for (const auto& l : s.lin) {
      in.push_back(l);
      in.push_back(-l);
    }
    ConeDescription d = double_description(in, ambient_);
    std::vector<IntVector> f = d.rays;
    for (const auto& l : d.lineality) {
      f.push_back(l);
      f.push_back(-l);
    }
    s.ineq = normalize_generators(f);
    s.facets = s.ineq;
    s.have_h = s.have_facets = true;
    return;
  }
  ensure_v();
  std::vector<IntVector> in = s.gens;
  for (const auto& l : s.lin) {
    in.push_back(l);
    in.push_back(-l);
  }
  ConeDescription d = double_description(in, ambient_);
  std::vector<IntVector> f = d.rays;
  for (const auto& l : d.lineality) {
    f.push_back(l);
    f.push_back(-l);
  }
  s.facets = normalize_generators(f);
  s.have_facets = true;
}

const std::vector<IntVector>& RationalCone::generators() const {
  std::lock_guard<std::mutex> g(state_->mu);
  ensure_v();
  return state_->gens;
}

const std::vector<IntVector>& RationalCone::lineality() const {
  std::lock_guard<std::mutex> g(state_->mu);
  ensure_v();
  return state_->lin;
}

const std::vector<IntVector>& RationalCone::inequalities() const {
  std::lock_guard<std::mutex> g(state_->mu);
  if (!state_->have_h) ensure_h();
  return state_->ineq;
}

const std::vector<IntVector>& RationalCone::facet_normals() const {
  std::lock_guard<std::mutex> g(state_->mu);
  ensure_h();
  return state_->facets;
}

bool RationalCone::contains(const IntVector& x) const { return contains(to_rational(x)); }

bool RationalCone::contains(const RatVector& x) const {
  const auto& in = inequalities();
  for (const auto& a : in)
    if (dot(x, a) < 0) return false;
  return true;
}

bool RationalCone::interior_nonempty() const {
  std::lock_guard<std::mutex> g(state_->mu);
  State& s = *state_;
  if (s.have_interior) return s.interior;
  if (s.have_v && !s.have_h) {
    std::vector<IntVector> all = s.gens;
    for (const auto& l : s.lin) all.push_back(l);
    s.interior = !all.empty() && rank(columns(all, ambient_)) == ambient_;
    s.witness = RatVector::Zero(ambient_);
    if (s.interior)
      for (const auto& v : s.gens) s.witness += to_rational(v);
  } else {
    std::vector<RatVector> strict;
    for (const auto& a : s.ineq) strict.push_back(to_rational(a));
    Feasibility f = rational_feasible(strict, {}, ambient_);
    s.interior = f.feasible;
    s.witness = f.feasible ? f.witness : RatVector(RatVector::Zero(ambient_));
  }
  s.have_interior = true;
  return s.interior;
}

const RatVector& RationalCone::interior_witness() const {
  interior_nonempty();
  return state_->witness;
}

int RationalCone::dimension() const {
  if (interior_nonempty()) return ambient_;
  std::lock_guard<std::mutex> g(state_->mu);
  State& s = *state_;
  if (!s.have_dim) {
    ensure_v();
    std::vector<IntVector> all = s.gens;
    for (const auto& l : s.lin) all.push_back(l);
    s.dim = all.empty() ? 0 : rank(columns(all, ambient_));
    s.have_dim = true;
  }
  return s.dim;
}

RationalCone dual_cone(const RationalCone& C) {
  if (C.has_generators()) {
    std::vector<IntVector> in = C.generators();
    for (const auto& l : C.lineality()) {
      in.push_back(l);
      in.push_back(-l);
    }
    return RationalCone::from_inequalities(C.ambient(), in);
  }
  // C given by inequalities: its dual is generated by them
  return RationalCone::from_generators(C.ambient(), C.inequalities());
}

DisjointnessReport cone_interior_disjoint(const RationalCone& a, const RationalCone& b) {
  if (a.ambient() != b.ambient()) throw Error("cone_interior_disjoint: ambient mismatch");
  DisjointnessReport r;
  r.first_full = a.interior_nonempty();
  r.second_full = b.interior_nonempty();
  std::vector<RatVector> strict;
  for (const auto& x : a.inequalities()) strict.push_back(to_rational(x));
  for (const auto& x : b.inequalities()) strict.push_back(to_rational(x));
  Feasibility f = rational_feasible(strict, {}, a.ambient());
  r.disjoint = !f.feasible;
  if (f.feasible) r.common_point = f.witness;
  return r;
}

}  // namespace toric
