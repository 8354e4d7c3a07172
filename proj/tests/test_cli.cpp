#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SUNSYS_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp(const char* name) {
  return std::string("cli_test_") + name + ".json";
}

}  // namespace

TEST_CASE("table lists minimum embedding orders") {
  auto r = run("table 25");
  CHECK(r.code == 0);
  CHECK(r.out.find("9  14  {0,3,4,7}") != std::string::npos);
  CHECK(r.out.find("12  18  {0,1,4,9}") != std::string::npos);
  CHECK(r.out.find("25  36") != std::string::npos);
}

TEST_CASE("embed rejects orders below the bound") {
  auto r = run("embed 9 12");
  CHECK(r.code == 3);
  CHECK(r.out.find("14") != std::string::npos);  // cites m >= 14
  CHECK(run("embed 9 13").code == 3);
}

TEST_CASE("generate emits a verified certificate") {
  auto path = tmp("gen16");
  auto r = run("generate 16 -o " + path);
  CHECK(r.code == 0);
  CHECK(run("verify " + path).code == 0);
  auto body = slurp(path);
  CHECK(body.find("\"blocks\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("generate is deterministic") {
  auto a = tmp("det_a"), b = tmp("det_b");
  CHECK(run("generate 21 -o " + a).code == 0);
  CHECK(run("generate 21 -o " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("inadmissible and nonexistent orders exit 2") {
  CHECK(run("generate 10").code == 2);
  CHECK(run("generate 4").code == 2);
}

TEST_CASE("verify rejects a tampered certificate") {
  auto path = tmp("tamper");
  REQUIRE(run("generate 13 -o " + path).code == 0);
  auto body = slurp(path);
  // duplicate the first block entry by swapping two distinct digits
  auto pos = body.find("\"blocks\"");
  REQUIRE(pos != std::string::npos);
  auto d = body.find_first_of("123456789", pos);
  REQUIRE(d != std::string::npos);
  body[d] = body[d] == '1' ? '2' : '1';
  std::ofstream(path, std::ios::binary) << body;
  CHECK(run("verify " + path).code != 0);
  std::remove(path.c_str());
}

TEST_CASE("embed writes an order-16 certificate containing 20 blocks") {
  auto path = tmp("embed16");
  auto r = run("embed 9 16 -o " + path);
  CHECK(r.code == 0);
  CHECK(run("verify " + path).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("lemma subcommand") {
  auto path = tmp("lemma");
  CHECK(run("lemma two_inf_diff2 8 -o " + path).code == 0);
  CHECK(run("verify " + path).code == 0);
  CHECK(run("lemma two_inf_diff2 6").code != 0);
  std::remove(path.c_str());
}
