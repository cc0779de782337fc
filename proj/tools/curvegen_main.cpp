#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvegen/dsl.hpp"
#include "curvegen/p1_oracle.hpp"
#include "curvegen/report.hpp"
#include "curvegen/testing/acceptance.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAnalysisError = 1;
constexpr int kParseError = 2;

int analyze(const std::string& path, bool json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    return kParseError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  curvegen::dsl::AnalysisRequest request;
  try {
    request = curvegen::dsl::parse(buf.str());
  } catch (const curvegen::dsl::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kParseError;
  }

  const curvegen::Report report = curvegen::run(request);
  std::cout << (json ? curvegen::render_json(report) : curvegen::render_text(report));
  return report.has_errors() ? kAnalysisError : kOk;
}

int oracle_p1(std::int64_t max_degree) {
  const auto check = curvegen::p1::euler_cross_check(max_degree);
  const auto pairs = curvegen::p1::semiorthogonal_pairs(max_degree);
  bool law = true;
  for (const auto& [a, b] : pairs) law = law && b == a - 1;
  // b = a - 1 stays in range for a in [-max_degree + 1, max_degree].
  law = law && static_cast<std::int64_t>(pairs.size()) == 2 * max_degree;

  nlohmann::ordered_json out;
  out["oracle"] = "p1";
  out["max_degree"] = max_degree;
  out["euler"] = {{"pairs", check.pairs}, {"failures", check.failures}, {"failing", check.failing}};
  out["semiorthogonal"] = {{"pairs", pairs}, {"offset_law", law}};
  out["passed"] = check.failures == 0 && law;
  std::cout << out.dump(2) << "\n";
  return check.failures == 0 && law ? kOk : kAnalysisError;
}

int selftest(std::uint64_t seed) {
  bool all = true;
  for (const auto& r : curvegen::testing::run_acceptance(seed)) {
    std::cout << curvegen::testing::format_line(r) << "\n";
    all = all && r.passed;
  }
  return all ? kOk : kAnalysisError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generation criteria for derived categories of curves"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a request file");
  analyze_cmd->add_option("file", path, "Request file")->required();
  analyze_cmd->add_flag("--json", json, "Emit the JSON report");

  auto* oracle_cmd = app.add_subcommand("oracle", "Independent cross-checks");
  oracle_cmd->require_subcommand(1);
  std::int64_t max_degree = 20;
  auto* p1_cmd = oracle_cmd->add_subcommand("p1", "Line bundles on the projective line");
  p1_cmd->add_option("--max-degree", max_degree, "Scan degrees in [-N, N]")->required()->check(CLI::PositiveNumber);

  std::uint64_t seed = curvegen::testing::kAcceptanceSeed;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest_cmd->add_option("--seed", seed, "Seed for the random corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*analyze_cmd) return analyze(path, json);
    if (*p1_cmd) return oracle_p1(max_degree);
    if (*selftest_cmd) return selftest(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAnalysisError;
  }
  return kOk;
}
