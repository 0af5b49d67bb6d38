#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "exactdual/cli/app.hpp"
#include "exactdual/cli/json_codec.hpp"

using namespace exactdual::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (fs::path(EXACTDUAL_FIXTURE_DIR) / name).string(); }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("duality report on the worked pair") {
  const Run r = run({"lp", "report", fixture("worked_pair.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "primal: 18"));
  CHECK(has_line(r.out, "dual: -18"));
  CHECK(has_line(r.out, "opposites: true"));
}

TEST_CASE("solve, dualize and maximize") {
  Run r = run({"lp", "solve", fixture("worked_pair.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "optimum: 18"));
  CHECK(has_line(r.out, "point: [1, 2]"));

  r = run({"lp", "solve", fixture("cheap_lunch.json")});
  CHECK(has_line(r.out, "optimum: 4093/5730 ~ 0.714311"));
  r = run({"--digits", "3", "lp", "solve", fixture("cheap_lunch.json")});
  CHECK(has_line(r.out, "optimum: 4093/5730 ~ 0.714"));

  // Maximizing 6 x0 + 6 x1 over an upward-unbounded region.
  r = run({"lp", "solve", "--max", fixture("worked_pair.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "sense: max"));
  CHECK(has_line(r.out, "optimum: top"));

  r = run({"lp", "dualize", fixture("worked_pair.json")});
  CHECK(r.code == kOk);
  CHECK(r.out.find("\"kind\": \"lp\"") != std::string::npos);
}

TEST_CASE("extended problems") {
  Run r = run({"elp", "validate", fixture("invalid_column_bot_top.json")});
  CHECK(r.code == kInvalidElp);
  CHECK(r.err.find("hAj") != std::string::npos);

  r = run({"elp", "solve", fixture("invalid_column_bot_top.json")});
  CHECK(r.code == kInvalidElp);
  r = run({"elp", "solve", "--allow-invalid", fixture("invalid_column_bot_top.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "optimum: 0"));

  r = run({"elp", "farkas", fixture("invalid_column_bot_top.json")});
  CHECK(r.code == kPrecondition);

  r = run({"elp", "report", fixture("cheap_lunch_no_lentils.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "primal: 46/45 ~ 1.022222"));
  CHECK(has_line(r.out, "opposites: true"));

  // Finite files are lifted into the extended solver.
  r = run({"elp", "solve", fixture("worked_pair.json")});
  CHECK(has_line(r.out, "optimum: 18"));
}

TEST_CASE("Farkas subcommands") {
  Run r = run({"farkas", "eq", fixture("farkas_eq_infeasible.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "side: dual"));
  r = run({"farkas", "ineq", fixture("farkas_ineq_feasible.json")});
  CHECK(has_line(r.out, "side: primal"));
  r = run({"farkas", "lin", fixture("farkas_lin_empty.json")});
  CHECK(has_line(r.out, "x: [0, 0, 0]"));
  r = run({"farkas", "eq", fixture("worked_pair.json")});
  CHECK(r.code == kParse);
}

TEST_CASE("valued CSP subcommands") {
  Run r = run({"vcsp", "eval", "--assign", "0,1", fixture("abs_instance.json")});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "value: 7/5 ~ 1.400000"));
  r = run({"vcsp", "eval", "--assign", "9/10,-1/2", fixture("abs_instance.json")});
  CHECK(has_line(r.out, "value: 7/5 ~ 1.400000"));
  r = run({"vcsp", "eval", "--assign", "0,7", fixture("abs_instance.json")});
  CHECK(r.code == kUsage);

  r = run({"vcsp", "opt", fixture("max_cut_triangle.json")});
  CHECK(has_line(r.out, "value: 1"));
  r = run({"vcsp", "blp", fixture("max_cut_triangle.json")});
  CHECK(has_line(r.out, "blp_minimum: 0"));

  r = run({"vcsp", "relax", fixture("abs_instance.json")});
  CHECK(r.code == kOk);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "canonical_lp");
  CHECK(j["legend"]["marginal_offset"] == 4);
  // The relaxation file is itself a solvable problem.
  const fs::path tmp = fs::temp_directory_path() / "exactdual_relax_test.json";
  std::ofstream(tmp) << r.out;
  r = run({"lp", "solve", tmp.string()});
  fs::remove(tmp);
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "optimum: 1"));
}

TEST_CASE("JSON output") {
  const Run r = run({"--format", "json", "lp", "report", fixture("worked_pair.json")});
  REQUIRE(r.code == kOk);
  const json j = json::parse(r.out);
  CHECK(j["primal"] == "18");
  CHECK(j["dual"] == "-18");
  CHECK(j["opposites"] == true);

  const Run s = run({"--format", "json", "lp", "solve", fixture("cheap_lunch.json")});
  const json k = json::parse(s.out);
  CHECK(k["optimum"] == "4093/5730");
  CHECK(k["optimum_decimal"] == "0.714311");
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"lp"}).code == kUsage);
  CHECK(run({"lp", "solve"}).code == kUsage);
  CHECK(run({"lp", "solve", "--bogus", fixture("worked_pair.json")}).code == kUsage);
  CHECK(run({"lp", "solve", fixture("no_such_file.json")}).code == kParse);
  const Run r = run({"lp", "solve", fixture("abs_instance.json")});
  CHECK(r.code == kParse);
  CHECK(r.err.find("vcsp") != std::string::npos);
}

TEST_CASE("batch mode") {
  const fs::path dir = fs::temp_directory_path() / "exactdual_batch_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(fixture("worked_pair.json"), dir / "a.json");
  fs::copy_file(fixture("cheap_lunch.json"), dir / "b.json");
  Run r = run({"lp", "solve", "--batch", dir.string()});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "optimum: 18"));
  CHECK(has_line(r.out, "optimum: 4093/5730 ~ 0.714311"));
  CHECK(r.out.find("a.json") < r.out.find("b.json"));

  // One unusable file makes the whole batch fail with its code.
  fs::copy_file(fixture("abs_instance.json"), dir / "c.json");
  r = run({"lp", "solve", "--batch", dir.string()});
  CHECK(r.code == kParse);
  CHECK(has_line(r.out, "optimum: 18"));

  CHECK(run({"lp", "solve", "--batch", dir.string(), fixture("worked_pair.json")}).code == kUsage);
  fs::remove_all(dir);
}
