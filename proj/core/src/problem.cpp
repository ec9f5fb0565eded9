#include "resinv/problem.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "resinv/errors.hpp"

namespace resinv {

VariableTable Problem::variables() const {
  VariableTable t;
  t.names = frame.names;
  t.fractional_ok = exceptional.marked(frame.nvars());
  return t;
}

PairWithHistory Problem::with_history() const {
  PairWithHistory h{pair, frame, exceptional, year};
  h.validate();
  return h;
}

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
  throw ParseError("field '" + where + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) field_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(where + "." + key, "missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) field_error(where, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_rational(as_string(j, where));
  } catch (const ParseError& e) {
    field_error(where, e.what());
  }
}

std::vector<std::string> as_names(const Json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of variable names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) field_error(where, "expected an integer");
  return j.get<int>();
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int var_index(const Frame& f, const std::string& name, const std::string& where) {
  int i = f.index_of(name);
  if (i < 0) throw PreconditionError("field '" + where + "': undeclared variable '" + name + "'");
  return i;
}

}  // namespace

Pair pair_from_json(const Json& j, const VariableTable& vars, const std::string& where) {
  const Json& comps = require(j, "components", where);
  if (!comps.is_array()) field_error(where + ".components", "expected an array");
  Pair p;
  p.nvars = vars.size();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    std::string cw = where + ".components[" + std::to_string(ci) + "]";
    const Json& gens = require(comps[ci], "gens", cw);
    if (!gens.is_array()) field_error(cw + ".gens", "expected an array");
    if (gens.empty()) throw PreconditionError("field '" + cw + ".gens': empty generator list");
    Component c;
    c.weight = as_rational(require(comps[ci], "b", cw), cw + ".b");
    if (c.weight <= 0) throw PreconditionError("field '" + cw + ".b': weight must be positive");
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::string gw = cw + ".gens[" + std::to_string(gi) + "]";
      try {
        c.gens.push_back(parse_polynomial(as_string(gens[gi], gw), vars));
      } catch (const ParseError& e) {
        field_error(gw, e.what());
      }
    }
    bool nonzero = false;
    for (const auto& g : c.gens) nonzero = nonzero || !g.is_zero();
    if (!nonzero) throw PreconditionError("field '" + cw + ".gens': no nonzero generator");
    p.components.push_back(std::move(c));
  }
  return p;
}

Problem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!j.is_object()) field_error("$", "expected an object");
  Problem p;
  std::vector<std::string> names = as_names(require(j, "variables", "$"), "variables");
  std::vector<std::string> y_names = j.contains("y") ? as_names(j["y"], "y") : std::vector<std::string>{};
  std::vector<std::string> u_names;
  if (j.contains("u")) {
    u_names = as_names(j["u"], "u");
  } else {
    for (const auto& n : names)
      if (std::find(y_names.begin(), y_names.end(), n) == y_names.end()) u_names.push_back(n);
  }
  p.frame.names = names;
  for (const auto& n : u_names) p.frame.u.push_back(var_index(p.frame, n, "u"));
  for (const auto& n : y_names) p.frame.y.push_back(var_index(p.frame, n, "y"));
  p.frame.validate();

  if (j.contains("exceptional")) {
    const Json& ex = j["exceptional"];
    if (!ex.is_array()) field_error("exceptional", "expected an array");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      std::string w = "exceptional[" + std::to_string(i) + "]";
      ExceptionalEntry e;
      const Json& var = require(ex[i], "var", w);
      e.var = var.is_null() ? -1 : var_index(p.frame, as_string(var, w + ".var"), w + ".var");
      e.assigned = ex[i].contains("d") ? as_rational(ex[i]["d"], w + ".d") : Rational(0);
      e.id = ex[i].contains("id") ? as_int(ex[i]["id"], w + ".id") : static_cast<int>(i) + 1;
      e.birth_year = ex[i].contains("birth_year") ? as_int(ex[i]["birth_year"], w + ".birth_year") : 0;
      p.exceptional.entries.push_back(e);
    }
    p.exceptional.validate(p.frame.nvars());
  }
  if (j.contains("year")) p.year = as_int(j["year"], "year");

  p.pair = pair_from_json(require(j, "pair", "$"), p.variables());

  if (j.contains("script")) {
    const Json& steps = require(j["script"], "steps", "script");
    if (!steps.is_array()) field_error("script.steps", "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::string w = "script.steps[" + std::to_string(i) + "]";
      ScriptStep s;
      for (const auto& n : as_names(require(steps[i], "center", w), w + ".center"))
        s.center.push_back(var_index(p.frame, n, w + ".center"));
      s.chart = var_index(p.frame, as_string(require(steps[i], "chart", w), w + ".chart"), w + ".chart");
      p.script.push_back(std::move(s));
    }
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (o.contains("hs_cutoff")) p.options.hs_cutoff = as_int(o["hs_cutoff"], "options.hs_cutoff");
    if (o.contains("max_prep_iters")) p.options.max_prep_iters = as_int(o["max_prep_iters"], "options.max_prep_iters");
  }
  return p;
}

Problem parse_problem(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

Problem load_problem(const std::string& path) {
  if (path == "-") return parse_problem(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_problem(in);
}

Json pair_to_json(const Pair& e, const std::vector<std::string>& names) {
  Json comps = Json::array();
  for (const auto& c : e.components) {
    Json gens = Json::array();
    for (const auto& g : c.gens) gens.push_back(format_polynomial(g, names));
    comps.push_back(Json{{"gens", gens}, {"b", to_string(c.weight)}});
  }
  return Json{{"components", comps}};
}

Json exceptional_to_json(const ExceptionalData& ex, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& e : ex.entries) {
    Json o;
    o["id"] = e.id;
    o["var"] = e.present() ? Json(names[e.var]) : Json(nullptr);
    o["d"] = to_string(e.assigned);
    o["rederived"] = to_string(e.rederived);
    o["birth_year"] = e.birth_year;
    arr.push_back(o);
  }
  return arr;
}

Json problem_to_json(const Problem& p) {
  Json j;
  j["variables"] = p.frame.names;
  Json u = Json::array(), y = Json::array();
  for (int i : p.frame.u) u.push_back(p.frame.names[i]);
  for (int i : p.frame.y) y.push_back(p.frame.names[i]);
  j["u"] = u;
  j["y"] = y;
  j["exceptional"] = exceptional_to_json(p.exceptional, p.frame.names);
  j["year"] = p.year;
  j["pair"] = pair_to_json(p.pair, p.frame.names);
  if (!p.script.empty()) {
    Json steps = Json::array();
    for (const auto& s : p.script) {
      Json center = Json::array();
      for (int v : s.center) center.push_back(p.frame.names[v]);
      steps.push_back(Json{{"center", center}, {"chart", p.frame.names[s.chart]}});
    }
    j["script"] = Json{{"steps", steps}};
  }
  j["options"] = Json{{"hs_cutoff", p.options.hs_cutoff}, {"max_prep_iters", p.options.max_prep_iters}};
  return j;
}

Problem problem_from(const PairWithHistory& h, const InvariantOptions& opts) {
  Problem p;
  p.frame = h.frame;
  p.exceptional = h.exceptional;
  p.pair = h.pair;
  p.year = h.year;
  p.options = opts;
  return p;
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(to_string(c));
  return a;
}

Json polyhedron_to_json(const OrthantPolyhedron& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices) v.push_back(point_to_json(x));
  return Json{{"dim", p.dim}, {"vertices", v}};
}

OrthantPolyhedron polyhedron_from_json(const Json& j) {
  OrthantPolyhedron p;
  p.dim = as_int(require(j, "dim", "polyhedron"), "polyhedron.dim");
  for (const auto& v : require(j, "vertices", "polyhedron")) {
    Point q;
    for (const auto& c : v) q.push_back(as_rational(c, "polyhedron.vertices"));
    p.vertices.push_back(std::move(q));
  }
  return p;
}

Json invariant_to_json(const InvariantVector& v) {
  Json j;
  j["nu1"] = Json{{"dims", v.hs}, {"cutoff", v.cutoff}, {"s", v.s1}};
  Json entries = Json::array();
  for (const auto& e : v.entries) entries.push_back(Json{{"nu", to_string(e.nu)}, {"s", e.s}});
  j["entries"] = entries;
  if (!v.terminal)
    j["terminal"] = nullptr;
  else
    j["terminal"] = v.terminal->is_infinite() ? "inf" : to_string(*v.terminal);
  j["center"] = v.center;
  return j;
}

InvariantVector invariant_from_json(const Json& j) {
  InvariantVector v;
  const Json& nu1 = require(j, "nu1", "invariant");
  v.hs = require(nu1, "dims", "invariant.nu1").get<std::vector<long>>();
  v.cutoff = as_int(require(nu1, "cutoff", "invariant.nu1"), "invariant.nu1.cutoff");
  v.s1 = nu1.contains("s") ? as_int(nu1["s"], "invariant.nu1.s") : 0;
  for (const auto& e : require(j, "entries", "invariant"))
    v.entries.push_back({parse_ext_rational(as_string(require(e, "nu", "entries"), "entries.nu")),
                         as_int(require(e, "s", "entries"), "entries.s")});
  const Json& t = require(j, "terminal", "invariant");
  if (!t.is_null()) v.terminal = parse_ext_rational(as_string(t, "invariant.terminal"));
  if (j.contains("center")) v.center = as_names(j["center"], "invariant.center");
  return v;
}

Json trace_to_json(const Trace& t) {
  Json years = Json::array();
  for (const auto& y : t.years) {
    Json o;
    o["year"] = y.year;
    Json u = Json::array(), yy = Json::array();
    for (int i : y.frame.u) u.push_back(y.frame.names[i]);
    for (int i : y.frame.y) yy.push_back(y.frame.names[i]);
    o["u"] = u;
    o["y"] = yy;
    o["pair"] = pair_to_json(y.pair, y.frame.names);
    o["exceptional"] = exceptional_to_json(y.exceptional, y.frame.names);
    o["point"] = "origin";
    years.push_back(o);
  }
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& names = t.years[i].frame.names;
    Json center = Json::array();
    for (int v : t.steps[i].center) center.push_back(names[v]);
    steps.push_back(Json{{"center", center}, {"chart", names[t.steps[i].chart]}});
  }
  return Json{{"years", years}, {"steps", steps}};
}

}  // namespace resinv
