#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ssli/ssli.hpp"
#include "ssli_lab/commands.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ssli-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ssli::lab::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::path(::testing::TempDir()) / "ssli_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string write_instance(const std::string& name, const json& doc) { return write_file(name, doc.dump()); }

bool single_line(const std::string& s) {
  return !s.empty() && s.back() == '\n' && s.find('\n') == s.size() - 1;
}

const double kS3 = std::sqrt(3.0);

TEST(CliVerify, GoldenPairHolds) {
  const auto path = write_instance("golden.json", {{"x", {1, 2, 3}}, {"y", {3 + kS3, 3 - kS3, 1}}});
  const auto r = run_cli({"verify", "--instance", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["status"], "holds");
  EXPECT_NEAR(rep["values"]["f_x"].get<double>(), 1.6874019747, 1e-9);
  EXPECT_NEAR(rep["values"]["f_y"].get<double>(), 2.4723900489, 1e-9);
  EXPECT_TRUE(rep["verdict"]["dominated"].get<bool>());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliVerify, CoefficientForm) {
  const auto path = write_instance("coef.json", {{"e_x", {6, 11, 6}}, {"e_y", {7, 13, 6}}});
  const auto r = run_cli({"verify", "--instance", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["status"], "holds");
}

TEST(CliVerify, ToleranceLayering) {
  // Eight-digit y leaves an e_3 gap of about 2.6e-8.
  const json doc{{"x", {1, 2, 3}}, {"y", {4.7320508, 1.2679492, 1}}};
  const auto plain = write_instance("rounded.json", doc);
  EXPECT_EQ(run_cli({"verify", "--instance", plain}).report()["status"], "hypotheses_unmet");
  EXPECT_EQ(run_cli({"verify", "--instance", plain, "--tol-equality", "1e-8"}).report()["status"], "holds");

  json with_file_tol = doc;
  with_file_tol["tolerances"] = {{"equality_slack", 1e-8}};
  const auto from_file = write_instance("rounded_tol.json", with_file_tol);
  const auto r = run_cli({"verify", "--instance", from_file});
  EXPECT_EQ(r.report()["status"], "holds");
  EXPECT_DOUBLE_EQ(r.report()["tolerances"]["equality_slack"].get<double>(), 1e-8);
  const auto overridden = run_cli({"verify", "--instance", from_file, "--tol-equality", "1e-12"});
  EXPECT_EQ(overridden.report()["status"], "hypotheses_unmet");
  EXPECT_DOUBLE_EQ(overridden.report()["tolerances"]["equality_slack"].get<double>(), 1e-12);
}

TEST(CliVerify, CounterexampleIsNotAViolation) {
  const double ie = std::exp(-1.0);
  const auto path = write_instance("counter.json", {{"x", {ie, ie}}, {"y", {1, 1}}});
  const auto r = run_cli({"verify", "--instance", path});
  EXPECT_EQ(r.code, 0);
  const json rep = r.report();
  EXPECT_EQ(rep["status"], "hypotheses_unmet");
  EXPECT_FALSE(rep["values"]["inequality_holds"].get<bool>());
}

TEST(CliVerify, ViolationExitCode) {
  // A huge equality slack admits a pair the theorem does not cover.
  const auto path = write_instance("loose.json", {{"x", {0.25, 0.25}}, {"y", {1, 1}}});
  const auto r = run_cli({"verify", "--instance", path, "--tol-equality", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report()["status"], "violation");
}

TEST(CliVerify, EntropyAndBeckerModes) {
  const auto vec = write_instance("entropy.json", {{"x", {1, 3}}, {"y", {2, 2}}});
  const auto e = run_cli({"verify", "--instance", vec, "--mode", "entropy"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NEAR(e.report()["values"]["g_x"].get<double>(), -3 * std::log(3.0), 1e-12);
  EXPECT_EQ(e.report()["status"], "holds");

  const auto mat = write_instance("becker.json", {{"matrix_u", {{1, 0}, {0, 3}}}, {"matrix_v", {{2, 0}, {0, 2}}}});
  const auto b = run_cli({"verify", "--instance", mat, "--mode", "becker"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.report()["status"], "holds");
  EXPECT_NEAR(b.report()["values"]["w_v"].get<double>(), 4 * std::log(2.0) - 4, 1e-12);

  const auto golden = write_instance(
      "golden_mat.json", {{"matrix_u", {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}}, {"matrix_v", {{3 + kS3, 0, 0}, {0, 3 - kS3, 0}, {0, 0, 1}}}});
  const auto m = run_cli({"verify", "--instance", golden, "--mode", "matrix", "--mu", "1", "--lambda", "0"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.report()["status"], "holds");
  EXPECT_TRUE(m.report()["values"]["hencky"]["ordered"].get<bool>());
}

TEST(CliErrors, SingleLineAndExitOne) {
  const auto missing = run_cli({"verify", "--instance", "/nonexistent/instance.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_TRUE(single_line(missing.err)) << missing.err;
  EXPECT_EQ(missing.err.rfind("ssli-lab: error: ", 0), 0u);
  EXPECT_TRUE(missing.out.empty());

  const auto bad_json = write_file("bad.json", "{\"x\": [1, 2,");
  EXPECT_EQ(run_cli({"verify", "--instance", bad_json}).code, 1);

  const auto both = write_instance("both.json", {{"x", {1, 2}}, {"e_x", {3, 2}}});
  const auto r = run_cli({"verify", "--instance", both});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(single_line(r.err));

  const auto nonpos = write_instance("nonpos.json", {{"x", {1, -2}}, {"y", {1, 2}}});
  EXPECT_EQ(run_cli({"verify", "--instance", nonpos}).code, 1);

  const auto unknown_tol = write_instance("unknown.json", {{"x", {1, 2}}, {"y", {1, 2}}, {"tolerances", {{"bogus", 1}}}});
  EXPECT_EQ(run_cli({"verify", "--instance", unknown_tol}).code, 1);

  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"verify"}).code, 1);
  EXPECT_EQ(run_cli({"derivative", "--e", "3,2", "--k", "5"}).code, 1);
  EXPECT_EQ(run_cli({"derivative", "--e", "3,2", "--methods", "magic"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliDerivative, GoldenValues) {
  const auto r = run_cli({"derivative", "--e", "3,2", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.report()["derivatives"][0];
  const double expected = 2 * std::log(2.0);
  EXPECT_NEAR(d["closed"].get<double>(), expected, 1e-12);
  EXPECT_NEAR(d["integral"].get<double>(), expected, 1e-10);
  EXPECT_NEAR(d["finite_difference"].get<double>(), expected, 1e-5);
  EXPECT_NEAR(d["contour"].get<double>(), expected, 1e-8);
  EXPECT_EQ(r.report()["status"], "holds");

  const auto all = run_cli({"derivative", "--e", "6,11,6", "--methods", "closed,integral"});
  ASSERT_EQ(all.code, 0) << all.err;
  const json ds = all.report()["derivatives"];
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_FALSE(ds[0].contains("contour"));
  EXPECT_NEAR(ds[1]["closed"].get<double>(), 2 * std::log(2.0) - std::log(3.0), 1e-12);
}

TEST(CliDerivative, DuplicateRootsWarn) {
  const auto r = run_cli({"derivative", "--e", "2,1", "--methods", "closed,integral"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.report()["derivatives"][0];
  EXPECT_TRUE(d["closed_skipped_duplicate_roots"].get<bool>());
  EXPECT_FALSE(d.contains("closed"));
  EXPECT_NEAR(d["integral"].get<double>(), 2.0, 1e-7);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliPath, CsvRoundTrip) {
  const auto inst = write_instance("path.json", {{"x", {1, 2, 3}}, {"y", {3 + kS3, 3 - kS3, 1}}});
  const auto csv = (fs::path(::testing::TempDir()) / "ssli_cli_test" / "trace.csv").string();
  const auto r = run_cli({"path", "--instance", inst, "--samples", "11", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report()["values"]["monotone"].get<bool>());

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "s,e_1,e_2,e_3,f,discriminant");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_NEAR(cells[0], rows / 10.0, 1e-15);
    const auto z = ssli::phi(ssli::CoefficientVector({cells[1], cells[2], cells[3]}));
    EXPECT_NEAR(ssli::f_squared_log(z).value, cells[4], 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 11);
}

TEST(CliPath, RejectsNonDominatedPair) {
  const auto inst = write_instance("nondom.json", {{"x", {1, 1}}, {"y", {3, 0.5}}});
  const auto r = run_cli({"path", "--instance", inst});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(single_line(r.err));
}

TEST(CliRandom, DeterministicPerSeed) {
  const auto a = run_cli({"random", "--n", "4", "--count", "25", "--seed", "7"});
  const auto b = run_cli({"random", "--n", "4", "--count", "25", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json rep = a.report();
  EXPECT_EQ(rep["values"]["violations"], 0);
  EXPECT_EQ(rep["values"]["generated"].get<int>() + rep["values"]["generation_failures"].get<int>(), 25);
  EXPECT_GE(rep["values"]["min_margin"].get<double>(), 0.0);
}

TEST(CliRandom, SeedFromEnvironment) {
  ::setenv("SSLI_LAB_SEED", "7", 1);
  const auto env = run_cli({"random", "--n", "4", "--count", "25"});
  ::unsetenv("SSLI_LAB_SEED");
  EXPECT_EQ(env.out, run_cli({"random", "--n", "4", "--count", "25", "--seed", "7"}).out);
  EXPECT_EQ(env.report()["seed"], 7);
}

TEST(CliRandom, ZeroSpreadGivesZeroMargin) {
  const auto r = run_cli({"random", "--n", "3", "--count", "1", "--spread", "0", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.report()["values"]["min_margin"].get<double>(), 0.0, 1e-9);
  const auto e = run_cli({"random", "--n", "3", "--count", "20", "--mode", "entropy", "--seed", "3"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.report()["values"]["violations"], 0);
}

TEST(CliMatrix, Operations) {
  const auto diag = write_instance("diag.json", {{"matrix_u", {{2, 0}, {0, 0.5}}}});
  const double l2 = std::log(2.0);

  auto r = run_cli({"matrix", "--instance", diag, "--op", "hencky", "--mu", "1", "--kappa", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.report()["values"]["energy"].get<double>(), 2 * l2 * l2, 1e-13);

  r = run_cli({"matrix", "--instance", diag, "--op", "becker"});
  EXPECT_NEAR(r.report()["values"]["energy"].get<double>(), 1.5 * l2 - 2.5, 1e-13);

  r = run_cli({"matrix", "--instance", diag, "--op", "invariants"});
  EXPECT_NEAR(r.report()["values"]["invariants"][0].get<double>(), 2.5, 1e-14);
  EXPECT_NEAR(r.report()["values"]["invariants"][1].get<double>(), 1.0, 1e-14);

  r = run_cli({"matrix", "--instance", diag, "--op", "optimality"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.report()["values"]["gap"].get<double>(), 0.0, 1e-8);

  const auto rho = write_instance("rho.json", {{"matrix_u", {{0.5, 0}, {0, 0.5}}}});
  r = run_cli({"matrix", "--instance", rho, "--op", "entropy"});
  EXPECT_NEAR(r.report()["values"]["entropy"].get<double>(), l2, 1e-14);

  const auto pair = write_instance("pair.json", {{"matrix_u", {{1, 0}, {0, 1}}}, {"matrix_v", {{4, 0}, {0, 4}}}});
  r = run_cli({"matrix", "--instance", pair, "--op", "geodesic", "--t", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.report()["values"]["point"][0][0].get<double>(), 2.0, 1e-14);
  r = run_cli({"matrix", "--instance", pair, "--op", "distance"});
  EXPECT_NEAR(r.report()["values"]["geodesic"].get<double>(), std::sqrt(2.0) * std::log(4.0), 1e-13);

  const auto comp = write_instance("comp.json", {{"matrix_u", {{2, -2}, {1, 0}}}});
  r = run_cli({"matrix", "--instance", comp, "--op", "kellogg"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report()["values"]["all_in_sector"].get<bool>());

  const auto neg = write_instance("neg.json", {{"matrix_u", {{1, 0}, {0, -1}}}});
  EXPECT_EQ(run_cli({"matrix", "--instance", neg, "--op", "becker"}).code, 1);
  EXPECT_EQ(run_cli({"matrix", "--instance", pair, "--op", "geodesic", "--t", "2"}).code, 1);
  EXPECT_EQ(run_cli({"matrix", "--instance", diag, "--op", "entropy"}).code, 1);
}

TEST(CliProcess, SubprocessSplitsStreams) {
  const auto inst = write_instance("proc.json", {{"x", {1, 2, 3}}, {"y", {3 + kS3, 3 - kS3, 1}}});
  const fs::path dir = fs::path(::testing::TempDir()) / "ssli_cli_test";
  const std::string cmd = std::string(SSLI_LAB_EXE) + " verify --instance " + inst + " > " + (dir / "o.txt").string() +
                          " 2> " + (dir / "e.txt").string();
  const int status = std::system(cmd.c_str());
  ASSERT_NE(status, -1);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  std::ifstream out(dir / "o.txt");
  const json rep = json::parse(out);
  EXPECT_EQ(rep["status"], "holds");

  const std::string bad = std::string(SSLI_LAB_EXE) + " verify --instance /nonexistent 2> /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 1);
}

}  // namespace
