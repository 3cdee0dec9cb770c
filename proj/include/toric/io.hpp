#pragma once

#include "toric/mirror.hpp"

#include <iosfwd>
#include <json.hpp>

namespace toric {

struct ParseError : Error {
  int line;
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
};

struct PolytopeInput {
  std::vector<IntVector> rows;
  std::shared_ptr<const LatticePolytope> polytope;
  std::vector<std::string> warnings;
};

// "n d" then d rows of n integers; '#' lines are comments
PolytopeInput parse_polytope(std::istream& in);
PolytopeInput read_polytope_file(const std::string& path);
void write_polytope(std::ostream& out, const std::vector<IntVector>& vertices);

// "n p m", p point rows, m rows of n point indices
Triangulation parse_triangulation(std::istream& in, std::shared_ptr<const LatticePolytope> host);
Triangulation read_triangulation_file(const std::string& path,
                                      std::shared_ptr<const LatticePolytope> host);
void write_triangulation(std::ostream& out, const Triangulation& T);

// "anticanonical" or a comma separated list of rationals
Divisor parse_divisor(const std::string& text, const DivisorLattice& DL);

std::string input_digest(const std::string& bytes);  // FNV-1a 64, hex
std::string read_file(const std::string& path);

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  std::string digest;
  Json payload = Json::object();
  std::vector<std::string> warnings;

  Json to_json() const;
  std::string machine() const;  // one JSON document
  std::string text() const;     // key: value lines
};

Json vector_json(const IntVector& v);
Json vector_json(const RatVector& v);
Json vectors_json(const std::vector<IntVector>& vs);
Json hodge_json(const HodgeReport& h);

}  // namespace toric
