#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FROBPOW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

const std::string kIdeal = "--ideal \"x^2*y^2, y^3*z^3\"";

}  // namespace

TEST_CASE("cli lce") {
  RunResult r = run("lce " + kIdeal + " -p 3");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "1/2");
  CHECK(r.out.find("expansion: 0.(bar)(1)_3") != std::string::npos);
  CHECK(r.out.find("witness: ") != std::string::npos);
}

TEST_CASE("cli lce json") {
  RunResult r = run("--json lce " + kIdeal + " -p 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda"] == "1/2");
  CHECK(j["expansion"] == "0.(bar)(1)_3");
  CHECK(j["witness"].is_array());
  CHECK(j["witness"].size() == 2);
}

TEST_CASE("cli lce trace") {
  RunResult r = run("lce " + kIdeal + " -p 3 --trace");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("e=1 lambda_e=1/3 candidates=1 cycles=0") != std::string::npos);
  CHECK(r.out.find("e=4 lambda_e=0/1 candidates=0 cycles=1") != std::string::npos);
}

TEST_CASE("cli crit") {
  RunResult r = run("crit " + kIdeal + " -p 5 --b 0,1,0");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "4/5");

  RunResult shifted = run("crit " + kIdeal + " -p 3 --b 2,2,0 --reduce");
  CHECK(shifted.exit_code == 0);
  CHECK(first_line(shifted.out) == "3/2");
  CHECK(shifted.out.find("skoda shifts: 1") != std::string::npos);

  // x^b inside the ideal is a domain error without --reduce
  CHECK(run("crit " + kIdeal + " -p 3 --b 2,2,0").exit_code == 1);
}

TEST_CASE("cli power") {
  RunResult r = run("power " + kIdeal + " -p 2 --t 1/2");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "x*y, y*z");

  RunResult j = run("--json power " + kIdeal + " -p 2 --t 3/4");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["vars"] == nlohmann::json({"x", "y", "z"}));
  CHECK(parsed["gens"] == nlohmann::json({{1, 1, 0}, {0, 2, 1}}));

  CHECK(run("power " + kIdeal + " -p 2 --t 1").exit_code == 2);
}

TEST_CASE("cli oracle-power and member") {
  RunResult r = run("oracle-power --ideal \"x^2\" -p 2 --k 3 --q 4");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "x");

  CHECK(first_line(run("member " + kIdeal + " -p 2 --b 0,1,0 --k 1 --q 4").out) ==
        "true");
  CHECK(first_line(run("member " + kIdeal + " -p 2 --b 0,1,0 --k 2 --q 4").out) ==
        "false");
  RunResult j = run("--json member " + kIdeal + " -p 2 --b 0,1,0 --k 1 --q 4");
  CHECK(nlohmann::json::parse(j.out)["member"] == true);
}

TEST_CASE("cli jumps") {
  RunResult r = run("jumps " + kIdeal + " -p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[0/1, 1/2): 1") != std::string::npos);
  CHECK(r.out.find("[1/2, 3/4): x*y, y*z") != std::string::npos);
  CHECK(r.out.find("[3/4, 1/1): x*y, y^2*z") != std::string::npos);

  RunResult j = run("--json jumps " + kIdeal + " -p 3");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["jumps"] == nlohmann::json({"1/2", "2/3", "5/6", "1/1"}));
  CHECK(parsed["ideals"].size() == 4);
}

TEST_CASE("cli scan") {
  RunResult r = run("scan " + kIdeal + " -p 3 -e 2");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "0/1: 1");
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count >= 2);
}

TEST_CASE("cli plot") {
  std::string path = "cli_plot_test.svg";
  RunResult r = run("plot " + kIdeal + " --q 12 -o " + path);
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().substr(0, 4) == "<svg");

  // repeated runs write identical bytes
  std::string path2 = "cli_plot_test2.svg";
  run("plot " + kIdeal + " --q 12 -o " + path2);
  std::ifstream in2(path2, std::ios::binary);
  std::stringstream content2;
  content2 << in2.rdbuf();
  CHECK(content.str() == content2.str());
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("cli fractal") {
  RunResult dim = run("fractal --p 2 --d 2 --dimension");
  CHECK(dim.exit_code == 0);
  CHECK(dim.out.find("log_2(3)") != std::string::npos);

  RunResult pts = run("fractal --p 2 --d 2 --depth 1 --points");
  CHECK(pts.exit_code == 0);
  std::istringstream lines(pts.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 3);

  RunResult j = run("--json fractal --p 2 --d 2 --dimension");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["count"] == 3);
}

TEST_CASE("cli error handling") {
  CHECK(run("lce " + kIdeal).exit_code == 2);         // missing -p
  CHECK(run("nonsense").exit_code == 2);              // unknown subcommand
  CHECK(run("lce --ideal \"x^\" -p 3").exit_code == 2);  // bad ideal text
  CHECK(run("lce " + kIdeal + " -p 6").exit_code == 2);  // composite p
  CHECK(run("--help").exit_code == 0);

  // blown enumeration budget is a runtime failure, not a usage error
  CHECK(run("--budget 4 oracle-power " + kIdeal + " -p 5 --k 24 --q 25").exit_code == 1);
}
