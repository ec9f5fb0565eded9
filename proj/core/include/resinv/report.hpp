#ifndef RESINV_REPORT_HPP
#define RESINV_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "resinv/problem.hpp"

namespace resinv {

struct RunOptions {
  std::optional<int> hs_cutoff;
  std::optional<int> max_prep_iters;
  std::optional<std::string> chart;
  bool fast = false;
};

struct Report {
  std::string command;
  Json data;
  std::string text;
  // Present for commands whose result is a polyhedron; drives svg output.
  std::optional<OrthantPolyhedron> polyhedron;
  std::vector<std::string> axes;
};

const std::vector<std::string>& command_names();

// Dispatches to the module operation behind `command`; errors propagate.
Report run_command(const Problem& problem, const std::string& command, const RunOptions& opts = {});

// "text", "json" or "svg"; svg only for 2-dimensional polyhedra.
std::string render(const Report& report, const std::string& format);

std::string render_svg(const OrthantPolyhedron& p, const std::vector<std::string>& axes);

}  // namespace resinv

#endif
