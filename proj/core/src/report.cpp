#include "resinv/report.hpp"

#include <algorithm>
#include <sstream>

#include "resinv/coeff_contact.hpp"
#include "resinv/cone_directrix.hpp"
#include "resinv/errors.hpp"

namespace resinv {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"order", "poly",      "newton",  "char-poly", "delta",
                                              "d-i",   "nu",        "directrix", "hs",      "coeff",
                                              "blowup", "run-lsb",  "invariant", "invariant-fast"};
  return names;
}

namespace {

std::vector<std::string> names_of(const Frame& f, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(f.names[i]);
  return out;
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

std::string polyhedron_text(const OrthantPolyhedron& p) {
  if (p.empty()) return "vertices: none (empty polyhedron)\n";
  std::string s = "vertices:\n";
  for (const auto& v : p.vertices) s += "  " + point_text(v) + "\n";
  return s;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string invariant_text(const InvariantVector& v) {
  std::string s = "nu1 (cutoff " + std::to_string(v.cutoff) + "):";
  for (long h : v.hs) s += " " + std::to_string(h);
  s += "\ninv: (nu1, " + std::to_string(v.s1);
  for (const auto& e : v.entries) s += "; " + to_string(e.nu) + ", " + std::to_string(e.s);
  if (v.terminal) s += "; " + to_string(*v.terminal);
  s += ")\n";
  if (!v.center.empty()) {
    s += "center: V(";
    for (std::size_t i = 0; i < v.center.size(); ++i) s += (i ? ", " : "") + v.center[i];
    s += ")\n";
  }
  return s;
}

Problem with_overrides(const Problem& p, const RunOptions& o) {
  Problem q = p;
  if (o.hs_cutoff) q.options.hs_cutoff = *o.hs_cutoff;
  if (o.max_prep_iters) q.options.max_prep_iters = *o.max_prep_iters;
  return q;
}

}  // namespace

Report run_command(const Problem& input, const std::string& command, const RunOptions& opts) {
  const Problem p = with_overrides(input, opts);
  const PairWithHistory h = p.with_history();
  const Frame& f = p.frame;
  Report r;
  r.command = command;
  Json& d = r.data;
  d["command"] = command;
  d["frame"] = Json{{"u", names_of(f, f.u)}, {"y", names_of(f, f.y)}};

  if (command == "order") {
    ExtRational o = pair_order(p.pair);
    bool sing = is_singular_at_origin(p.pair);
    d["order"] = to_string(o);
    d["singular"] = sing;
    r.text = "order: " + to_string(o) + "\nsingular: " + (sing ? "true" : "false") + "\n";
  } else if (command == "poly" || command == "newton") {
    OrthantPolyhedron poly = command == "poly" ? polyhedron_of_pair(p.pair, f) : newton_polyhedron(p.pair, f);
    r.axes = names_of(f, f.u);
    if (command == "newton") {
      auto ys = names_of(f, f.y);
      r.axes.insert(r.axes.end(), ys.begin(), ys.end());
    }
    d["axes"] = r.axes;
    d["polyhedron"] = polyhedron_to_json(poly);
    r.text = polyhedron_text(poly);
    r.polyhedron = poly;
  } else if (command == "char-poly") {
    Preparation prep = prepare_vertices(p.pair, f, p.options.max_prep_iters);
    r.axes = names_of(f, f.u);
    d["axes"] = r.axes;
    d["polyhedron"] = polyhedron_to_json(prep.polyhedron);
    d["prepared"] = prep.prepared;
    d["iterations"] = prep.iterations;
    Json steps = Json::array();
    for (const auto& s : prep.steps)
      steps.push_back(Json{{"var", f.names[s.var]},
                           {"add", format_polynomial(Polynomial::monomial(s.shift, s.coefficient), f.names)}});
    d["translations"] = steps;
    d["pair"] = pair_to_json(prep.pair, f.names);
    r.text = polyhedron_text(prep.polyhedron) + "prepared: " + (prep.prepared ? "true" : "false") +
             "\niterations: " + std::to_string(prep.iterations) + "\n";
    for (const auto& s : prep.steps)
      r.text += "  " + f.names[s.var] + " -> " + f.names[s.var] + " + " +
                format_polynomial(Polynomial::monomial(s.shift, s.coefficient), f.names) + "\n";
    r.polyhedron = prep.polyhedron;
  } else if (command == "delta") {
    ExtRational v = delta_invariant(p.pair, f, p.options.max_prep_iters);
    d["delta"] = to_string(v);
    r.text = to_string(v) + "\n";
  } else if (command == "d-i") {
    OrthantPolyhedron poly = polyhedron_of_pair(p.pair, f);
    Json rows = Json::array();
    std::string table = "var  d_i\n";
    for (std::size_t i = 0; i < f.u.size(); ++i) {
      Rational v = coordinate_min(poly, static_cast<int>(i));
      rows.push_back(Json{{"var", f.names[f.u[i]]}, {"d", to_string(v)}});
      table += pad(f.names[f.u[i]], 5) + to_string(v) + "\n";
    }
    d["d"] = rows;
    r.text = table;
  } else if (command == "nu") {
    ExtRational dl = delta_invariant(p.pair, f, p.options.max_prep_iters);
    ExtRational nu = exceptional_nu(p.pair, f, p.exceptional, p.options.max_prep_iters);
    OrthantPolyhedron poly = polyhedron_of_pair(p.pair, f);
    std::vector<int> marked_u;
    Json assigned = Json::array();
    for (const auto& e : p.exceptional.entries) {
      if (!e.present()) continue;
      assigned.push_back(Json{{"var", f.names[e.var]}, {"d", to_string(e.assigned)}});
      int pos = f.u_position(e.var);
      if (pos >= 0) marked_u.push_back(pos);
    }
    d["delta"] = to_string(dl);
    d["assigned"] = assigned;
    d["nu"] = to_string(nu);
    if (!poly.empty()) d["nu_polyhedral"] = to_string(nu_subset(poly, marked_u));
    r.text = "delta: " + to_string(dl) + "\nnu: " + to_string(nu) + "\n";
  } else if (command == "directrix") {
    DirectrixBasis dir = directrix(initial_ideal(p.pair));
    Json forms = Json::array();
    std::vector<std::string> upper;
    for (const auto& n : f.names) {
      std::string u = n;
      std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
      upper.push_back(u);
    }
    r.text = "directrix:";
    for (const auto& form : dir.forms) {
      forms.push_back(format_polynomial(form, upper));
      r.text += " " + format_polynomial(form, upper);
    }
    r.text += "\ndimension: " + std::to_string(dir.dimension()) + "\n";
    d["forms"] = forms;
    d["dimension"] = dir.dimension();
  } else if (command == "hs") {
    std::vector<Polynomial> all;
    for (const auto& c : p.pair.components) all.insert(all.end(), c.gens.begin(), c.gens.end());
    auto dims = hilbert_samuel_truncated(all, f.nvars(), p.options.hs_cutoff);
    d["dims"] = dims;
    d["cutoff"] = p.options.hs_cutoff;
    r.text = "k  dim\n";
    for (std::size_t k = 0; k < dims.size(); ++k) r.text += pad(std::to_string(k + 1), 3) + std::to_string(dims[k]) + "\n";
  } else if (command == "coeff") {
    Pair cp = coefficient_pair(p.pair, f.y);
    d["pair"] = pair_to_json(cp, f.names);
    r.text = "";
    for (const auto& c : cp.components) {
      r.text += "(";
      for (std::size_t i = 0; i < c.gens.size(); ++i) r.text += (i ? ", " : "") + format_polynomial(c.gens[i], f.names);
      r.text += "; " + to_string(c.weight) + ")\n";
    }
    if (cp.components.empty()) r.text = "empty\n";
  } else if (command == "blowup") {
    std::vector<ScriptStep> steps = p.script;
    if (steps.empty()) {
      if (!opts.chart) throw PreconditionError("blowup needs a script or --chart");
      ScriptStep s;
      for (int i = 0; i < f.nvars(); ++i) s.center.push_back(i);
      s.chart = f.index_of(*opts.chart);
      if (s.chart < 0) throw PreconditionError("unknown chart variable '" + *opts.chart + "'");
      steps.push_back(s);
    }
    Trace t = run_lsb(h, steps);
    Problem out = problem_from(t.years.back(), p.options);
    d = problem_to_json(out);
    r.text = "pair: ";
    for (std::size_t ci = 0; ci < out.pair.components.size(); ++ci) {
      const auto& c = out.pair.components[ci];
      r.text += (ci ? " & (" : "(");
      for (std::size_t i = 0; i < c.gens.size(); ++i) r.text += (i ? ", " : "") + format_polynomial(c.gens[i], f.names);
      r.text += "; " + to_string(c.weight) + ")";
    }
    r.text += "\nexceptional:";
    for (const auto& e : out.exceptional.entries)
      r.text += " (" + (e.present() ? f.names[e.var] : std::string("-")) + ", " + to_string(e.assigned) + ")";
    r.text += "\n";
  } else if (command == "run-lsb") {
    Trace t = run_lsb(h, p.script);
    d["trace"] = trace_to_json(t);
    r.text = "";
    for (const auto& y : t.years) {
      r.text += "year " + std::to_string(y.year) + ": ";
      for (std::size_t ci = 0; ci < y.pair.components.size(); ++ci) {
        const auto& c = y.pair.components[ci];
        r.text += (ci ? " & (" : "(");
        for (std::size_t i = 0; i < c.gens.size(); ++i) r.text += (i ? ", " : "") + format_polynomial(c.gens[i], f.names);
        r.text += "; " + to_string(c.weight) + ")";
      }
      r.text += "  E:";
      for (const auto& e : y.exceptional.entries)
        if (e.present()) r.text += " " + f.names[e.var] + "[" + to_string(e.assigned) + "]";
      r.text += "\n";
    }
  } else if (command == "invariant" || command == "invariant-fast") {
    Trace t = run_lsb(h, p.script);
    bool fast = opts.fast || command == "invariant-fast";
    InvariantVector v = fast ? fast_path_invariant(t, p.options) : compute_invariant(t, p.options);
    d["invariant"] = invariant_to_json(v);
    r.text = invariant_text(v);
  } else {
    throw PreconditionError("unknown command '" + command + "'");
  }
  return r;
}

std::string render_svg(const OrthantPolyhedron& p, const std::vector<std::string>& axes) {
  if (p.dim != 2) throw PreconditionError("svg output needs a 2-dimensional polyhedron");
  const double size = 400, margin = 40;
  double maxc = 1;
  for (const auto& v : p.vertices)
    for (const auto& c : v) maxc = std::max(maxc, c.get_d());
  const double scale = (size - 2 * margin) / (maxc * 1.5);
  auto px = [&](double x) { return margin + x * scale; };
  auto py = [&](double y) { return size - margin - y * scale; };
  const double far = maxc * 1.5;
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  o << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(far) << "\" y2=\"" << py(0)
    << "\" stroke=\"black\"/>\n";
  o << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(far)
    << "\" stroke=\"black\"/>\n";
  std::string xa = axes.size() > 0 ? axes[0] : "v1", ya = axes.size() > 1 ? axes[1] : "v2";
  o << "  <text x=\"" << px(far) << "\" y=\"" << py(0) + 16 << "\">" << xa << "</text>\n";
  o << "  <text x=\"" << px(0) - 16 << "\" y=\"" << py(far) << "\">" << ya << "</text>\n";
  if (!p.empty()) {
    // Vertices sorted by increasing first coordinate give the lower staircase.
    std::vector<Point> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    o << "  <polygon fill=\"#9ecae1\" stroke=\"#3182bd\" points=\"";
    o << px(vs.front()[0].get_d()) << "," << py(far) << " ";
    for (const auto& v : vs) o << px(v[0].get_d()) << "," << py(v[1].get_d()) << " ";
    o << px(far) << "," << py(vs.back()[1].get_d()) << " " << px(far) << "," << py(far) << "\"/>\n";
    for (const auto& v : vs) {
      o << "  <circle cx=\"" << px(v[0].get_d()) << "\" cy=\"" << py(v[1].get_d()) << "\" r=\"3\"/>\n";
      o << "  <text x=\"" << px(v[0].get_d()) + 5 << "\" y=\"" << py(v[1].get_d()) - 5 << "\">" << point_text(v)
        << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.data.dump(2) + "\n";
  if (format == "text") return report.text;
  if (format == "svg") {
    if (!report.polyhedron) throw PreconditionError("svg output needs a 2-dimensional polyhedron");
    return render_svg(*report.polyhedron, report.axes);
  }
  throw PreconditionError("unknown format '" + format + "'");
}

}  // namespace resinv
