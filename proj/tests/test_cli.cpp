#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + std::string(RIESZDROP_CLI_PATH) + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string tmp(const std::string& name) { return std::string(RIESZDROP_TEST_TMP) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
  const Run ok = run("eval --alpha 0.034");
  REQUIRE(ok.code == 0);
  const json doc = json::parse(ok.out);
  CHECK(doc["m_c1"].get<double>() >= 2.007);
  CHECK(doc["m_c1"].get<double>() <= 2.087);
  for (const auto& [k, v] : doc.items()) CHECK(v.is_number());

  const json small = json::parse(run("eval --alpha 0.02").out);
  CHECK(small["m_2"].get<double>() < std::min(small["m_eps0"].get<double>(), small["m_eps1"].get<double>()));

  CHECK(run("eval --alpha 0.0").code == 1);
  CHECK(run("eval --alpha 0.7").code == 1);
  CHECK(run("eval").code == 1);
  CHECK(run("eval --alpha abc").code == 1);
}

TEST_CASE("usage") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("sweep --alpha-min 0 --alpha-max 0.1 --steps 3 --format xml").code == 1);
}

TEST_CASE("verify exit codes") {
  const Run pass = run("verify");
  CHECK(pass.code == 0);
  CHECK(json::parse(pass.out)["pass"].get<bool>());
  CHECK(run("verify --alpha-max 0.034 --grid 1000").code == 0);
  const Run fail = run("verify --alpha-max 0.05 --grid 1000");
  CHECK(fail.code == 2);
  CHECK_FALSE(json::parse(fail.out)["pass"].get<bool>());
  CHECK(run("verify --grid 1").code == 1);
}

TEST_CASE("alpha0") {
  const Run r = run("alpha0 --tol 1e-10");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["alpha0"].get<double>() - 0.04273) <= 0.0005);
  CHECK(doc["tol"].get<double>() > 0.0);
}

TEST_CASE("sweep to file is byte-identical across runs and thread counts") {
  const std::string a = tmp("sweep_a.csv");
  const std::string b = tmp("sweep_b.csv");
  std::remove(a.c_str());
  std::remove(b.c_str());
  const std::string args = "sweep --alpha-min 0.005 --alpha-max 0.045 --steps 81 --out ";
  CHECK(run(args + "\"" + a + "\"", "RIESZDROP_THREADS=1").code == 0);
  CHECK(run(args + "\"" + b + "\"", "RIESZDROP_THREADS=4").code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("alpha,m_c1,m_2,m_eps0,m_eps1\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 82);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(run(args + "\"" + a + "\"", "RIESZDROP_THREADS=0").code == 0);
  CHECK(slurp(a) == text);
}

TEST_CASE("sweep stdout matches file output") {
  const std::string f = tmp("sweep_c.csv");
  const Run r = run("sweep --alpha-min 0.01 --alpha-max 0.02 --steps 2");
  REQUIRE(r.code == 0);
  CHECK(run("sweep --alpha-min 0.01 --alpha-max 0.02 --steps 2 --out \"" + f + "\"").code == 0);
  CHECK(slurp(f) == r.out);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("sweep with a failing row exits 3 and writes nan") {
  // alpha = 0 has no nonexistence threshold; the row is written as nan
  const Run r = run("sweep --alpha-min 0 --alpha-max 0.02 --steps 3");
  CHECK(r.code == 3);
  CHECK(r.out.find("\n0,nan,nan,nan,nan\n") != std::string::npos);
  CHECK(r.out.find("\n0.02,") != std::string::npos);
}

TEST_CASE("sweep json") {
  const Run r = run("sweep --alpha-min 0.01 --alpha-max 0.02 --steps 3 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[1]["alpha"].get<double>() == 0.015);
}

TEST_CASE("envelope") {
  const Run r = run("envelope --alpha 0.1 --r-max 3 --steps 300");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("R,rho_1,rho_2,rho_3,rho_min,n_opt\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 301);
  CHECK(run("envelope --alpha 1.5 --r-max 3 --steps 10").code == 1);
  CHECK(run("envelope --alpha 0.1 --r-max 3 --steps 10 --format json").code == 0);
}

TEST_CASE("unwritable output path") {
  CHECK(run("eval --alpha 0.034 --out /nonexistent-dir/x.json").code == 1);
}
