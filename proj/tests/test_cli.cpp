#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "resinv/errors.hpp"
#include "resinv/report.hpp"

using namespace th;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Outcome {
  int status;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  std::string cmd = std::string(RESINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST(ParseProblem, EncodedReferencePair) {
  Problem p = load("pair1_d3.json");
  ASSERT_EQ(p.pair.components.size(), 2u);
  EXPECT_EQ(p.pair.components[0].weight, Q("3"));
  EXPECT_EQ(p.frame.u, (std::vector<int>{0, 1}));
  EXPECT_EQ(p.frame.y, (std::vector<int>{2, 3}));
}

TEST(ParseProblem, Rejections) {
  const std::string no_gens = R"({"variables":["x"],"pair":{"components":[{"gens":[],"b":"1"}]}})";
  const std::string fractional = R"j({"variables":["x","y"],"pair":{"components":[{"gens":["x^(1/2)"],"b":"1"}]}})j";
  const std::string unknown_var = R"({"variables":["x"],"pair":{"components":[{"gens":["q"],"b":"1"}]}})";
  const std::string negative = R"({"variables":["x"],"pair":{"components":[{"gens":["x"],"b":"-1"}]}})";
  EXPECT_THROW(parse_problem(no_gens), PreconditionError);
  EXPECT_THROW(parse_problem(fractional), ParseError);
  EXPECT_THROW(parse_problem(unknown_var), ParseError);
  EXPECT_THROW(parse_problem(negative), PreconditionError);
  // Fractional exponents are fine on an exceptional variable.
  const std::string on_divisor =
      R"({"variables":["x","y"],"y":["y"],"exceptional":[{"var":"x","d":"0","id":1}],)"
      R"j("pair":{"components":[{"gens":["x^(1/2)*y^2"],"b":"2"}]}})j";
  EXPECT_NO_THROW(parse_problem(on_divisor));
}

TEST(ParseProblem, DiagnosticsNameLineAndField) {
  try {
    parse_problem("{\n  \"variables\": [\"x\",\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_problem(R"({"variables":["x"],"pair":{"components":[{"gens":["x"],"b":true}]}})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("pair.components[0].b"), std::string::npos) << e.what();
  }
}

TEST(ParseProblem, ProblemJsonRoundTrips) {
  for (const auto& path : corpus_files()) {
    Problem p = load_problem(path.string());
    Json j = problem_to_json(p);
    EXPECT_EQ(problem_to_json(parse_problem(j.dump())), j) << path;
  }
}

TEST(RunCommand, DeltaOnEquivalentPairs) {
  for (const char* name : {"pair1_d3.json", "pair2_d3.json"}) {
    Report r = run_command(load(name), "delta");
    EXPECT_EQ(r.text, "4/3\n");
    EXPECT_EQ(r.data["delta"], "4/3");
  }
}

TEST(RunCommand, InvariantOnCusp) {
  Report r = run_command(load("cusp.json"), "invariant");
  InvariantVector v = invariant_from_json(r.data["invariant"]);
  std::ifstream in(data_dir() + "/expected/cusp.json");
  EXPECT_EQ(v, invariant_from_json(Json::parse(in)));
}

TEST(RunCommand, BlowupEchoesTransformedProblem) {
  Report r = run_command(load("t2xyz_blowup.json"), "blowup");
  Problem echoed = parse_problem(r.data.dump());
  EXPECT_EQ(echoed.pair, load("t2xyz.json").pair);
  ASSERT_EQ(echoed.exceptional.entries.size(), 1u);
  EXPECT_EQ(echoed.frame.names[echoed.exceptional.entries[0].var], "x");
  EXPECT_EQ(echoed.exceptional.entries[0].assigned, Q("1/2"));

  RunOptions chart;
  chart.chart = "x";
  Report again = run_command(load("t2xyz.json"), "blowup", chart);
  EXPECT_EQ(again.data, r.data);
}

TEST(RunCommand, UnknownCommandAndMissingChart) {
  EXPECT_THROW(run_command(load("cusp.json"), "frobnicate"), PreconditionError);
  EXPECT_THROW(run_command(load("cusp.json"), "blowup"), PreconditionError);
}

TEST(Render, SvgShowsTheLabelledVertex) {
  Report r = run_command(load("pair1_d3.json"), "poly");
  std::string svg = render(r, "svg");
  EXPECT_NE(svg.find("(2/3, 2/3)"), std::string::npos);
  EXPECT_EQ(svg.find("<circle"), svg.rfind("<circle"));  // exactly one vertex marker
  Report three = run_command(load("t2xyz.json"), "poly");
  EXPECT_THROW(render(three, "svg"), PreconditionError);
  EXPECT_THROW(render(run_command(load("cusp.json"), "delta"), "svg"), PreconditionError);
}

TEST(Render, JsonRoundTripsForEveryCommand) {
  Problem p = load("pair1_d3.json");
  for (const auto& cmd : command_names()) {
    if (cmd == "blowup") continue;  // needs a script
    Report r = run_command(p, cmd);
    EXPECT_EQ(Json::parse(render(r, "json")), r.data) << cmd;
    EXPECT_EQ(render(r, "json"), render(run_command(p, cmd), "json")) << cmd;
  }
}

TEST(Render, TextTableOfCoordinateMinima) {
  EXPECT_EQ(render(run_command(load("pair2_d3.json"), "d-i"), "text"), "var  d_i\nx    1/2\ny    2/3\n");
}

TEST(Cli, ExitCodesAndDeterminism) {
  const std::string cusp = data_dir() + "/cusp.json";
  Outcome a = run_cli("invariant " + cusp + " --format json");
  Outcome b = run_cli("invariant " + cusp + " --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());

  EXPECT_EQ(run_cli("delta " + data_dir() + "/pair1_d3.json").out, "4/3\n");
  EXPECT_EQ(run_cli("hs " + cusp + " --hs-cutoff 3").out, "k  dim\n1  1\n2  3\n3  5\n");

  const std::string tmp = ::testing::TempDir() + "/resinv_cli_case.json";
  std::ofstream(tmp) << R"({"variables":["x","y"],"y":["y"],"pair":{"components":[{"gens":["y - x^3"],"b":"2"}]}})";
  EXPECT_EQ(run_cli("invariant " + tmp).status, 2);
  std::ofstream(tmp) << "{ not json";
  EXPECT_EQ(run_cli("order " + tmp).status, 3);
  EXPECT_EQ(run_cli("poly " + data_dir() + "/t2xyz.json --format svg").status, 2);
}

TEST(Cli, ReadsStandardInput) {
  const std::string cusp = data_dir() + "/cusp.json";
  std::string cmd = "cat " + cusp + " | " + std::string(RESINV_CLI_PATH) + " order -";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 256> buf{};
  std::string out;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_EQ(out, "order: 1\nsingular: true\n");
  EXPECT_FALSE(slurp(cusp).empty());
}
