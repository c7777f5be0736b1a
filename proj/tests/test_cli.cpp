#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "fixtures.hpp"
#include "wrp/io.hpp"

using namespace wrp;
using namespace wrpt;
namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "wrp_cli_work";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string binary() {
  const char* bin = std::getenv("WRP_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "WRP_BIN must point at the cli binary");
  return bin;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  fs::path err_file = work_dir() / "stderr.txt";
  std::string command = "\"" + binary() + "\" " + args + " > " +
                        out_file.string() + " 2> " + err_file.string();
  int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

bool mentions(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

fs::path trap_file() {
  fs::path path = work_dir() / "trap.wrp";
  spit(path, serialize_instance(greedy_trap_instance()));
  return path;
}

}  // namespace

TEST_CASE("solve reports the optimum and exits by status") {
  fs::path input = trap_file();

  RunResult plain = run("solve --input " + input.string());
  CHECK(plain.exit_code == 0);
  CHECK(mentions(plain.out, "status: optimal"));
  CHECK(mentions(plain.out, "cost: 6"));
  CHECK(mentions(plain.out, "solver: suurballe"));

  RunResult json = run("solve --input " + input.string() + " --json");
  CHECK(json.exit_code == 0);
  CHECK(mentions(json.out, "\"exact\": \"6\""));
  CHECK(mentions(json.out, "\"solver\": \"suurballe\""));

  RunResult forced = run("solve --input " + input.string() + " --algo oracle");
  CHECK(forced.exit_code == 0);
  CHECK(mentions(forced.out, "cost: 6"));
  CHECK(mentions(forced.out, "solver: oracle"));

  SUBCASE("an infeasible instance exits 2") {
    fs::path starved = work_dir() / "starved.wrp";
    spit(starved, serialize_instance(star_instance(2)));
    RunResult result = run("solve --input " + starved.string());
    CHECK(result.exit_code == 2);
    CHECK(mentions(result.out, "status: infeasible"));
  }

  SUBCASE("a strangled oracle budget exits 3") {
    RunResult result = run("solve --input " + input.string() +
                           " --algo oracle --oracle-budget 2");
    CHECK(result.exit_code == 3);
    CHECK(mentions(result.out, "status: budget exceeded"));
  }

  SUBCASE("parse failures exit 1 and point at the line") {
    fs::path broken = work_dir() / "broken.wrp";
    spit(broken, "graph undirected\nedge a\nroute a a\n");
    RunResult result = run("solve --input " + broken.string());
    CHECK(result.exit_code == 1);
    CHECK(mentions(result.err, "error:"));
    CHECK(mentions(result.err, "line 2"));
  }

  SUBCASE("a missing file exits 1") {
    RunResult result = run("solve --input " + (work_dir() / "nope.wrp").string());
    CHECK(result.exit_code == 1);
    CHECK(mentions(result.err, "error:"));
  }

  SUBCASE("an unknown algo is rejected at the flag level") {
    RunResult result =
        run("solve --input " + input.string() + " --algo greedy");
    CHECK(result.exit_code != 0);
  }
}

TEST_CASE("verify accepts the solver's own record and rejects tampering") {
  fs::path input = trap_file();
  fs::path record = work_dir() / "trap_solution.json";
  RunResult solved = run("solve --input " + input.string() + " --json");
  REQUIRE(solved.exit_code == 0);
  spit(record, solved.out);

  RunResult ok = run("verify --input " + input.string() + " --solution " +
                     record.string());
  CHECK(ok.exit_code == 0);
  CHECK(mentions(ok.out, "valid walk, cost 6"));

  SUBCASE("a doctored cost is called out") {
    std::string tampered = solved.out;
    size_t at = tampered.find("\"exact\": \"6\"");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 12, "\"exact\": \"5\"");
    fs::path bad = work_dir() / "tampered.json";
    spit(bad, tampered);
    RunResult result = run("verify --input " + input.string() +
                           " --solution " + bad.string());
    CHECK(result.exit_code == 2);
    CHECK(mentions(result.out, "violation:"));
  }

  SUBCASE("a record without a walk cannot be verified") {
    fs::path empty = work_dir() / "empty.json";
    spit(empty,
         "{\"status\": \"infeasible\", \"cost\": null, \"segments\": [], "
         "\"usage\": {}, \"solver\": \"oracle\", \"warnings\": []}\n");
    RunResult result = run("verify --input " + input.string() +
                           " --solution " + empty.string());
    CHECK(result.exit_code == 1);
  }
}

TEST_CASE("classify prints the structural summary") {
  fs::path input = trap_file();
  RunResult result = run("classify --input " + input.string());
  CHECK(result.exit_code == 0);
  CHECK(mentions(result.out, "nodes: "));
  CHECK(mentions(result.out, "directed: no"));
  CHECK(mentions(result.out, "structure: "));
  CHECK(mentions(result.out, "waypoints: 1"));
  CHECK(mentions(result.out, "demands: unit"));
  CHECK(mentions(result.out, "bounds: no"));
}

TEST_CASE("gen writes instances that parse, solve, and repeat byte-for-byte") {
  struct Recipe {
    const char* label;
    std::string flags;
  };
  const Recipe recipes[] = {
      {"2dp", "--gadget 2dp --seed 11 --nodes 5 --edges 9"},
      {"partition", "--gadget partition --integers 1,2,3,4"},
      {"partition_bounded", "--gadget partition --integers 2,3,3,4 --bounded"},
      {"tw3", "--gadget tw3 --seed 11 --nodes 6 --edges 8 --pairs 2"},
      {"eulerian", "--gadget eulerian --seed 11 --nodes 5 --edges 7 --pairs 2"},
      {"random", "--gadget random --seed 11 --nodes 8 --extra-edges 5"},
  };
  for (const Recipe& recipe : recipes) {
    CAPTURE(recipe.label);
    fs::path first = work_dir() / (std::string(recipe.label) + "_a.wrp");
    fs::path second = work_dir() / (std::string(recipe.label) + "_b.wrp");
    RunResult a = run("gen " + recipe.flags + " --out " + first.string());
    RunResult b = run("gen " + recipe.flags + " --out " + second.string());
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    std::string bytes = slurp(first);
    CHECK(bytes == slurp(second));
    CHECK_NOTHROW(parse_instance(bytes));
    RunResult solved = run("solve --input " + first.string());
    CHECK((solved.exit_code == 0 || solved.exit_code == 2 ||
           solved.exit_code == 3));
  }

  SUBCASE("gadget names outside the menu are refused") {
    RunResult result = run("gen --gadget maze --out " +
                           (work_dir() / "maze.wrp").string());
    CHECK(result.exit_code != 0);
  }
}

TEST_CASE("bench sweeps a directory and files a report") {
  fs::path dir = work_dir() / "bench_inputs";
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(dir)) fs::remove(entry);
  spit(dir / "a_trap.wrp", serialize_instance(greedy_trap_instance()));
  spit(dir / "b_star.wrp", serialize_instance(star_instance(3)));
  spit(dir / "notes.txt", "not an instance, not picked up");

  fs::path report = work_dir() / "bench_report.json";
  RunResult result = run("bench --dir " + dir.string() + " --report " +
                         report.string());
  CHECK(result.exit_code == 0);
  std::string body = slurp(report);
  CHECK(mentions(body, "a_trap.wrp"));
  CHECK(mentions(body, "b_star.wrp"));
  CHECK_FALSE(mentions(body, "notes.txt"));
  CHECK(mentions(body, "\"micros\""));
  CHECK(mentions(body, "\"cost\": \"6\""));

  SUBCASE("a broken input is reported and flips the exit code") {
    spit(dir / "c_broken.wrp", "graph undirected\nedge a\n");
    RunResult rerun = run("bench --dir " + dir.string() + " --report " +
                          report.string());
    CHECK(rerun.exit_code == 1);
    CHECK(mentions(slurp(report), "\"error\""));
  }
}
