#include "toric/io.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace toric;

namespace {

struct Options {
  std::string command, polytope, triangulation, dual_triangulation, rho, mu, output;
  std::string format = "machine";
  int apply = -1;
};

struct Context {
  const Options& opt;
  PolytopeInput in;
  Report rep;

  std::shared_ptr<const LatticePolytope> P() const { return in.polytope; }

  std::shared_ptr<const LatticePolytope> dual() const {
    return std::make_shared<const LatticePolytope>(dual_lattice_polytope(*in.polytope));
  }

  Triangulation primal() const {
    if (!opt.triangulation.empty()) return read_triangulation_file(opt.triangulation, P());
    return build_triangulation(P());
  }

  Triangulation mirror(std::shared_ptr<const LatticePolytope> Pd) const {
    if (!opt.dual_triangulation.empty()) return read_triangulation_file(opt.dual_triangulation, Pd);
    return build_triangulation(Pd);
  }

  void write_output(const std::string& body) const {
    if (opt.output.empty()) return;
    std::ofstream f(opt.output);
    if (!f) throw Error("cannot write " + opt.output);
    f << body;
  }
};

std::string to_text(const Triangulation& T) {
  std::ostringstream s;
  write_triangulation(s, T);
  return s.str();
}

Json cone_json(const KahlerCone& K) {
  Json j;
  const auto g = normalize_generators(K.generators);
  j["mode"] = K.mode == GeneratorMode::Walls ? "walls" : "all";
  j["pairs_examined"] = K.pairs_examined;
  j["generator_count"] = g.size();
  j["generators"] = vectors_json(g);
  j["interior_nonempty"] = K.cone.interior_nonempty();
  if (K.cone.interior_nonempty()) j["interior_point"] = vector_json(K.cone.interior_witness());
  return j;
}

void cmd_dual(Context& c) {
  const LatticePolytope& P = *c.P();
  auto& j = c.rep.payload;
  j["reflexive"] = is_reflexive(P);
  if (is_reflexive(P)) {
    const LatticePolytope Pd = dual_lattice_polytope(P);
    j["vertices"] = vectors_json(Pd.vertices());
    std::ostringstream s;
    write_polytope(s, Pd.vertices());
    c.write_output(s.str());
  } else {
    const RationalPolytope R = dual_polytope(P);
    Json v = Json::array();
    for (const auto& x : R.vertices) v.push_back(vector_json(x));
    j["vertices"] = v;
  }
}

void cmd_reflexive(Context& c) {
  const LatticePolytope& P = *c.P();
  auto& j = c.rep.payload;
  j["reflexive"] = is_reflexive(P);
  Json f = Json::array();
  for (const auto& x : P.facets())
    f.push_back({{"normal", vector_json(x.normal)}, {"offset", x.offset.str()}});
  j["facets"] = f;
}

void cmd_points(Context& c) {
  const LatticePolytope& P = *c.P();
  auto& j = c.rep.payload;
  const auto pts = lattice_points(P);
  std::vector<long> by_dim(P.rank() + 1, 0);
  Json list = Json::array();
  for (const auto& p : pts) {
    const int dim = p.interior() ? P.rank() : P.face(p.face).dim;
    ++by_dim[dim];
    list.push_back({{"point", vector_json(p.point)}, {"face_dim", dim}});
  }
  j["total"] = pts.size();
  j["interior"] = by_dim[P.rank()];
  j["in_face_interiors_by_dim"] = by_dim;
  j["skeleton_points"] = boundary_skeleton_points(P).size();
  j["points"] = list;
  if (is_reflexive(P)) j["dual_total"] = lattice_points(dual_lattice_polytope(P)).size();
}

void cmd_triangulate(Context& c) {
  const Triangulation T = c.primal();
  auto& j = c.rep.payload;
  j["points"] = T.points().size();
  j["simplices"] = T.maximal().size();
  j["normalized_volume"] = normalized_volume(T.host()).str();
  j["skeleton_condition"] = T.satisfies_skeleton_condition();
  j["lattice_index"] = check_spanning(T).str();
  j["triangulation"] = to_text(T);
  c.write_output(to_text(T));
}

void cmd_hodge(Context& c) {
  const LatticePolytope& P = *c.P();
  auto& j = c.rep.payload;
  HodgeReport pic;
  if (!c.opt.triangulation.empty()) {
    pic = picard_dim(P, c.primal());
  } else {
    pic = picard_dim(P);
  }
  const HodgeReport def = deformation_dim(P);
  j["pic"] = pic.total;
  j["def"] = def.total;
  j["picard"] = hodge_json(pic);
  j["deformation"] = hodge_json(def);
  for (const auto& w : pic.warnings) c.rep.warnings.push_back(w);
}

void cmd_kahler(Context& c) {
  const Triangulation T = c.primal();
  const DivisorLattice DL = build_divisor_lattice(T);
  c.rep.payload["rank"] = DL.rank();
  c.rep.payload["cone"] = cone_json(kahler_cone(T, DL));
}

void cmd_degeneration(Context& c) {
  const auto Pd = c.dual();
  const Triangulation Ts = c.mirror(Pd);
  const DivisorLattice DLs = build_divisor_lattice(Ts);
  const KahlerCone K = degeneration_cone(Ts, DLs);
  auto& j = c.rep.payload;
  j["dual_points"] = DLs.d;
  j["rank"] = DLs.rank();
  j["cone"] = cone_json(K);
  if (!c.opt.mu.empty()) {
    const auto f = classify_degeneration(parse_divisor(c.opt.mu, DLs), DLs, K);
    j["classification"] = to_string(f.classification);
    if (!f.limit.empty()) j["limit"] = f.limit;
  }
}

void cmd_mirror(Context& c) {
  const auto Pd = c.dual();
  const Triangulation T = c.primal(), Ts = c.mirror(Pd);
  const MirrorReport r = mirror_check(*c.P(), T, Ts);
  auto& j = c.rep.payload;
  j["triangulation_free"] = {{"pic_x", hodge_json(r.pic_x)},
                             {"def_x", hodge_json(r.def_x)},
                             {"pic_mirror", hodge_json(r.pic_mirror)},
                             {"def_mirror", hodge_json(r.def_mirror)},
                             {"pic_matches_mirror_def", r.pic_matches_mirror_def},
                             {"def_matches_mirror_pic", r.def_matches_mirror_pic},
                             {"corrections_swap", r.corrections_swap}};
  j["triangulation_dependent"] = {{"kahler_is_degeneration", r.kahler_is_degeneration},
                                  {"mirror_kahler_is_degeneration", r.mirror_kahler_is_degeneration},
                                  {"kahler_generators", r.kahler_generators},
                                  {"mirror_kahler_generators", r.mirror_kahler_generators}};
  if (r.k3)
    j["k3"] = {{"sum", r.k3_sum},
               {"sum_is_20", r.k3_sum_is_20},
               {"edge_correction", r.k3_edge_correction},
               {"sum_matches_corrected", r.k3_sum_matches_corrected}};
  c.rep.warnings.insert(c.rep.warnings.end(), r.warnings.begin(), r.warnings.end());
}

void cmd_flops(Context& c) {
  const Triangulation T = c.primal();
  const auto cands = flop_candidates(T);
  auto& j = c.rep.payload;
  Json list = Json::array();
  for (const auto& f : cands)
    list.push_back({{"s", f.s}, {"t", f.t}, {"d0", f.d0}, {"d1", f.d1}, {"d2", f.d2},
                    {"d3", f.d3}, {"d4", f.d4}, {"two_face", f.two_face}});
  j["count"] = cands.size();
  j["circuits"] = list;
  if (c.opt.apply < 0) return;
  if (c.opt.apply >= int(cands.size()))
    throw Error("--apply " + std::to_string(c.opt.apply) + " out of range");
  const Triangulation F = apply_flop(T, cands[c.opt.apply]);
  const FlopReport r = flop_mirror_report(T, F);
  j["flipped"] = to_text(F);
  j["pic_before"] = r.pic_before.total;
  j["pic_after"] = r.pic_after.total;
  j["pic_unchanged"] = r.pic_unchanged;
  j["cone_before"] = cone_json(r.before);
  j["cone_after"] = cone_json(r.after);
  j["interiors_disjoint"] = r.disjoint.disjoint;
  j["circuit_generator"] = vector_json(r.circuit_generator);
  j["circuit_separates"] = r.separates;
  c.write_output(to_text(F));
}

void cmd_sections(Context& c) {
  const Triangulation T = c.primal();
  const DivisorLattice DL = build_divisor_lattice(T);
  const Divisor rho = parse_divisor(c.opt.rho.empty() ? "anticanonical" : c.opt.rho, DL);
  const SectionSpace S = section_space(T, DL, rho);
  const CanonicalCount cc = canonical_section_count(T, DL, rho);
  auto& j = c.rep.payload;
  j["rho"] = vector_json(rho);
  j["count"] = S.sections.size();
  Json list = Json::array();
  for (const auto& s : S.sections)
    list.push_back({{"point", vector_json(s.point)}, {"exponents", vector_json(s.exponents)}});
  j["sections"] = list;
  j["interior_count"] = cc.count;
  j["lower_dimensional"] = cc.lower_dimensional;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric mirror data for lattice polytopes"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--triangulation", opt.triangulation, "triangulation of the polytope boundary");
  app.add_option("--dual-triangulation", opt.dual_triangulation,
                 "triangulation of the dual boundary");
  app.add_option("--rho", opt.rho, "c1,...,cd or anticanonical");
  app.add_option("--mu", opt.mu, "degeneration direction over the dual points");
  app.add_option("--apply", opt.apply, "flop index to apply");
  app.add_option("-o,--output", opt.output, "write the produced polytope or triangulation");

  const std::vector<std::pair<std::string, void (*)(Context&)>> cmds = {
      {"dual", cmd_dual},           {"reflexive", cmd_reflexive},
      {"points", cmd_points},       {"triangulate", cmd_triangulate},
      {"hodge", cmd_hodge},         {"kahler", cmd_kahler},
      {"degeneration", cmd_degeneration}, {"mirror", cmd_mirror},
      {"flops", cmd_flops},         {"sections", cmd_sections}};
  for (const auto& [name, fn] : cmds) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("polytope", opt.polytope, "polytope file")->required();
    sub->fallthrough();
    (void)fn;
  }
  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();

  try {
    Context c{opt, read_polytope_file(opt.polytope), {}};
    c.rep.command = opt.command;
    c.rep.digest = input_digest(read_file(opt.polytope));
    c.rep.warnings = c.in.warnings;
    for (const auto& [name, fn] : cmds)
      if (name == opt.command) fn(c);
    std::cout << (opt.format == "text" ? c.rep.text() : c.rep.machine());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
