#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + PPSP_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("census of a prime and its odd powers") {
  auto r5 = run("census 5");
  REQUIRE(r5.code == 0);
  auto j5 = nlohmann::ordered_json::parse(r5.out);
  CHECK(j5["h_pp"] == 2);

  auto r125 = run("census 125");
  REQUIRE(r125.code == 0);
  auto j125 = nlohmann::ordered_json::parse(r125.out);
  CHECK(j125["note"] == "PPSP(√q) ≅ PPAV(√p)");
  CHECK(j125["exponent"] == 3);
  for (const char* key : {"q", "exponent", "note"}) {
    j5.erase(key);
    j125.erase(key);
  }
  CHECK(j5 == j125);
}

TEST_CASE("census of an even power is the elliptic record") {
  auto r = run("census 25");
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["elliptic"]["h"] == 1);
  CHECK(run("census 25 --format csv").code == 0);
  CHECK(run("census 25 --format markdown").code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("census 12").code == 2);
  CHECK(run("census 1").code == 2);
  CHECK(run("census abc").code == 2);
  CHECK(run("census 5 --format xml").code == 2);
  CHECK(run("range 9 3").code == 2);
  CHECK(run("range 1 3").code == 2);
  CHECK(run("zeta 9").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify 100", "CENSUS_JOBS=zero").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("range record counts") {
  auto r = run("range 2 7");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out).size() == 4);
  auto r13 = nlohmann::ordered_json::parse(run("range 13 13").out);
  REQUIRE(r13.size() == 1);
  CHECK(r13[0]["h_pp"] == 3);
  CHECK(nlohmann::ordered_json::parse(run("range 14 16").out).empty());
  // comment line, header, one row per prime
  CHECK(count_lines(run("range 2 7 --format csv").out) == 6);
  CHECK(count_lines(run("range 14 16 --format csv").out) == 2);
  CHECK(count_lines(run("range 2 7 --format markdown").out) == 6);
}

TEST_CASE("range output is byte-identical across job counts and runs") {
  for (const char* fmt : {"json", "csv", "markdown"}) {
    std::string args = std::string("range 2 400 --format ") + fmt;
    auto a = run(args + " --jobs 1");
    auto b = run(args + " --jobs 4");
    auto c = run(args, "CENSUS_JOBS=3");
    auto d = run(args + " --jobs 4");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(b.out == d.out);
  }
}

TEST_CASE("verify") {
  auto ok = run("verify 100");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all identities hold") != std::string::npos);
  auto two = run("verify 2");
  CHECK(two.code == 0);
  CHECK(two.out.find("primes checked: 1 ") != std::string::npos);
  auto fault = run("verify 100 --inject-fault 1");
  CHECK(fault.code == 1);
  CHECK(fault.out.find("identity refined-sum") != std::string::npos);
  CHECK(run("verify 1").code == 2);
}

TEST_CASE("zeta prints both evaluations") {
  auto r = run("zeta 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("5\t5\t1/30\t1/30\tyes") != std::string::npos);
}

TEST_CASE("diagnostics flag") {
  auto j = nlohmann::ordered_json::parse(run("census 13 --diagnostics").out);
  CHECK(j["diagnostics"]["alternative_type_formula"] == "5/1");
  CHECK(j["t_pp"] == 3);
}
