#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resinv/errors.hpp"
#include "resinv/report.hpp"

namespace {

enum ExitCode { kOk = 0, kPrecondition = 2, kParse = 3, kInternal = 4 };

int run_one(const std::string& command, const std::string& path, const resinv::RunOptions& opts,
            const std::string& format, bool label) {
  try {
    resinv::Problem problem = resinv::load_problem(path);
    resinv::Report report = resinv::run_command(problem, command, opts);
    if (label) std::cout << "== " << path << "\n";
    std::cout << resinv::render(report, format);
    return kOk;
  } catch (const resinv::ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    return kParse;
  } catch (const resinv::PreconditionError& e) {
    std::cerr << path << ": precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const resinv::InternalError& e) {
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral invariants of pairs at a point, over exact rationals"};
  std::string command;
  std::vector<std::string> files;
  std::string format = "text";
  int hs_cutoff = 0;
  int max_prep_iters = 0;
  std::string chart;
  bool fast = false;

  app.add_option("command", command, "Operation to run")
      ->required()
      ->check(CLI::IsMember(resinv::command_names()));
  app.add_option("problem", files, "Problem files; '-' reads standard input")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "svg"}));
  auto* hs_opt = app.add_option("--hs-cutoff", hs_cutoff, "Hilbert-Samuel truncation")->check(CLI::PositiveNumber);
  auto* prep_opt =
      app.add_option("--max-prep-iters", max_prep_iters, "Vertex preparation cap")->check(CLI::NonNegativeNumber);
  auto* chart_opt = app.add_option("--chart", chart, "Chart variable for a point blow-up without a script");
  app.add_flag("--fast", fast, "Use the fast path for invariant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  resinv::RunOptions opts;
  if (*hs_opt) opts.hs_cutoff = hs_cutoff;
  if (*prep_opt) opts.max_prep_iters = max_prep_iters;
  if (*chart_opt) opts.chart = chart;
  opts.fast = fast;

  int status = kOk;
  for (const auto& path : files) {
    int rc = run_one(command, path, opts, format, files.size() > 1);
    if (status == kOk) status = rc;
  }
  return status;
}
