#include "fixtures.hpp"
#include "toric/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;
using fx::iv;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TORICMIRROR_EXE) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

std::string data(const std::string& f) { return std::string(TORIC_DATA) + "/" + f; }

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("toricmirror_test_" + name)).string();
}

}  // namespace

TEST(Parse, Polytope) {
  std::istringstream in("# comment\n3 6\n1 0 0\n-1 0 0\n0 1 0\n\n0 -1 0\n0 0 1 # tail\n0 0 -1\n");
  auto p = parse_polytope(in);
  EXPECT_EQ(p.rows.size(), 6u);
  EXPECT_EQ(p.polytope->vertices().size(), 6u);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(Parse, DuplicateVertexWarns) {
  std::istringstream in("2 5\n1 0\n0 1\n-1 0\n0 -1\n1 0\n");
  auto p = parse_polytope(in);
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_EQ(p.polytope->vertices().size(), 4u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_polytope(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  EXPECT_EQ(line_of("2 3\n1 0\n0 x\n-1 -1\n"), 3);
  EXPECT_EQ(line_of("2 3\n1 0\n0 1 7\n-1 -1\n"), 3);
  EXPECT_EQ(line_of("# c\n2\n"), 2);
  EXPECT_EQ(line_of("2 3\n1 0\n0 1\n"), 3);
  EXPECT_EQ(line_of("2 3\n1 0\n0 1\n-1 -1\n5 5\n"), 5);
  std::istringstream flat("2 2\n1 0\n-1 0\n");
  EXPECT_THROW(parse_polytope(flat), Error);
}

TEST(Parse, TriangulationRoundTrip) {
  auto P = fx::poly(fx::cube(3));
  auto T = build_triangulation(P);
  std::stringstream s;
  write_triangulation(s, T);
  auto U = parse_triangulation(s, P);
  EXPECT_TRUE(U == T);
  std::istringstream bad("3 1 1\n1 1 1\n0 0 9\n");
  EXPECT_THROW(parse_triangulation(bad, P), Error);
}

TEST(Parse, Divisor) {
  auto T = build_triangulation(fx::poly(fx::diamond()));
  auto DL = build_divisor_lattice(T);
  EXPECT_EQ(parse_divisor("anticanonical", DL), anticanonical(DL));
  RatVector r = parse_divisor("1, -2/3,0,5", DL);
  EXPECT_EQ(r(1), Rational(-2, 3));
  EXPECT_THROW(parse_divisor("1,2,3", DL), Error);
  EXPECT_THROW(parse_divisor("1,2,3,q", DL), Error);
  EXPECT_THROW(parse_divisor("1,2,3,1/0", DL), Error);
}

TEST(Parse, Digest) {
  EXPECT_EQ(input_digest(""), "cbf29ce484222325");
  EXPECT_EQ(input_digest("a"), "af63dc4c8601ec8c");
}

TEST(Cli, HodgeQuintic) {
  auto r = run("hodge " + data("quintic.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["command"], "hodge");
  EXPECT_EQ(j["result"]["pic"], 1);
  EXPECT_EQ(j["result"]["def"], 101);
  EXPECT_EQ(j["digest"], input_digest(read_file(data("quintic.poly"))));
}

TEST(Cli, TextFormat) {
  auto r = run("--format text hodge " + data("quartic.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("hodge (" + input_digest(read_file(data("quartic.poly"))) + ")\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("\npic: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\ndef: 19\n"), std::string::npos) << r.out;
}

TEST(Cli, ReflexiveAndPoints) {
  auto r = run("reflexive " + data("diamond.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["reflexive"], true);
  auto p = run("points " + data("cube.poly"));
  ASSERT_EQ(p.status, 0);
  auto j = json_of(p)["result"];
  EXPECT_EQ(j["total"], 27);
  EXPECT_EQ(j["skeleton_points"], 20);
  EXPECT_EQ(j["dual_total"], 7);
}

TEST(Cli, FlopsOnProduct) {
  auto r = run("flops " + data("product4.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_GE(json_of(r)["result"]["count"].get<int>(), 1);
  const std::string out = tmp("flipped.tri");
  auto a = run("flops --apply 0 -o " + out + " " + data("product4.poly"));
  ASSERT_EQ(a.status, 0) << a.out;
  auto j = json_of(a)["result"];
  EXPECT_EQ(j["pic_unchanged"], true);
  EXPECT_EQ(j["interiors_disjoint"], true);
  // the written triangulation reads back unchanged
  auto t = run("triangulate --triangulation " + out + " " + data("product4.poly"));
  ASSERT_EQ(t.status, 0) << t.out;
  EXPECT_EQ(json_of(t)["result"]["simplices"], 96);
  EXPECT_EQ(json_of(t)["result"]["triangulation"], j["flipped"]);
  std::filesystem::remove(out);
}

TEST(Cli, DualRoundTrip) {
  const std::string out = tmp("dual.poly");
  auto r = run("dual -o " + out + " " + data("quartic.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string back = tmp("dual2.poly");
  auto s = run("dual -o " + back + " " + out);
  ASSERT_EQ(s.status, 0) << s.out;
  auto a = read_polytope_file(data("quartic.poly")), b = read_polytope_file(back);
  EXPECT_EQ(a.polytope->vertices(), b.polytope->vertices());
  auto h = run("hodge " + out);
  EXPECT_EQ(json_of(h)["result"]["pic"], 19);
  std::filesystem::remove(out);
  std::filesystem::remove(back);
}

TEST(Cli, SectionsAndDegeneration) {
  auto r = run("sections " + data("octahedron.poly"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["count"], 27);
  auto d = run("degeneration --mu anticanonical " + data("cube.poly"));
  ASSERT_EQ(d.status, 0) << d.out;
  auto j = json_of(d)["result"];
  EXPECT_EQ(j["dual_points"], 6);
  EXPECT_TRUE(j.contains("classification"));
}

TEST(Cli, ErrorsExitNonzero) {
  auto missing = run("hodge /nonexistent/file.poly");
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.out.find("error:"), std::string::npos);
  const std::string bad = tmp("bad.poly");
  {
    std::ofstream f(bad);
    f << "2 3\n1 0\n0 one\n-1 -1\n";
  }
  auto r = run("hodge " + bad);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
  {
    std::ofstream f(bad);
    f << "2 4\n2 0\n0 2\n-2 0\n0 -2\n";
  }
  EXPECT_EQ(run("hodge " + bad).status, 1);
  EXPECT_EQ(run("flops " + data("product4.poly") + " --apply 999").status, 1);
  EXPECT_NE(run("nosuchcommand x").status, 0);
  EXPECT_NE(run("--format yaml hodge " + data("quintic.poly")).status, 0);
  std::filesystem::remove(bad);
}

TEST(Cli, MachineOutputIsStable) {
  const std::string args = "kahler " + data("octahedron.poly");
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out).dump(1) + "\n", a.out);
  // generators come out primitive and sorted
  auto g = json_of(a)["result"]["cone"]["generators"];
  std::vector<IntVector> gens;
  for (const auto& v : g) {
    IntVector x(Eigen::Index(v.size()));
    for (size_t i = 0; i < v.size(); ++i) x(Eigen::Index(i)) = v[i].get<long>();
    gens.push_back(x);
  }
  EXPECT_EQ(normalize_generators(gens), gens);
}
