#ifndef RESINV_PROBLEM_HPP
#define RESINV_PROBLEM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "resinv/history.hpp"
#include "resinv/invariant.hpp"
#include "resinv/poly_text.hpp"
#include "resinv/polyhedron.hpp"

namespace resinv {

using Json = nlohmann::ordered_json;

struct Problem {
  Frame frame;
  ExceptionalData exceptional;
  Pair pair;
  int year = 0;
  std::vector<ScriptStep> script;
  InvariantOptions options;

  VariableTable variables() const;
  PairWithHistory with_history() const;
};

// Throws ParseError with a line/column or field path on malformed input and
// PreconditionError on semantic violations (undeclared variables, weights).
Problem parse_problem(const std::string& text);
Problem parse_problem(std::istream& in);
// "-" reads standard input.
Problem load_problem(const std::string& path);

Json problem_to_json(const Problem& p);
Problem problem_from(const PairWithHistory& h, const InvariantOptions& opts = {});

Json pair_to_json(const Pair& e, const std::vector<std::string>& names);
Pair pair_from_json(const Json& j, const VariableTable& vars, const std::string& where = "pair");

Json point_to_json(const Point& p);
Json polyhedron_to_json(const OrthantPolyhedron& p);
OrthantPolyhedron polyhedron_from_json(const Json& j);

Json invariant_to_json(const InvariantVector& v);
InvariantVector invariant_from_json(const Json& j);

Json exceptional_to_json(const ExceptionalData& ex, const std::vector<std::string>& names);
Json trace_to_json(const Trace& t);

}  // namespace resinv

#endif
