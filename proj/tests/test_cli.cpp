#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DFDIO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("solve T1 emits 16 records at bound 10") {
  auto r = run("solve --family T1 --bound 10");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 16);
  CHECK(r.out.find("\"family\":\"T1\"") != std::string::npos);
  CHECK(r.out.find("\"k\":2,\"n\":3") != std::string::npos);
}

TEST_CASE("solve T2 is diagonal-only") {
  auto r = run("solve --family T2 --bound 10");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 10);
}

TEST_CASE("unknown family is a usage error") {
  auto r = run("solve --family T9 --bound 5");
  CHECK(r.exit_code == 64);
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = run("solve --family T3 --bound 8");
  auto b = run("solve --family T3 --bound 8");
  CHECK(a.out == b.out);
  auto c = run("abc --poly 1,0,-1 --b 1 --A 1 --n-bound 8 --x-bound 500");
  auto d = run("abc --poly 1,0,-1 --b 1 --A 1 --n-bound 8 --x-bound 500");
  CHECK(c.out == d.out);
}

TEST_CASE("construct fixture and rejection exit codes") {
  auto ok = run("construct --b 1 --A 1,1 --d 2 --t 1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"x\":\"4\"") != std::string::npos);
  CHECK(ok.out.find("\"checked\":true") != std::string::npos);

  auto rejected = run("construct --b -1 --A 1,1,1 --d 2 --t 1");
  CHECK(rejected.exit_code == 3);

  auto negative = run("construct --b -1 --A 1,1,1 --d 3 --t 1");
  CHECK(negative.exit_code == 0);
  CHECK(negative.out.find("\"x\":\"-") != std::string::npos);
  CHECK(negative.out.find("\"checked\":true") != std::string::npos);
}

TEST_CASE("obstruct fixture and routing") {
  auto r = run("obstruct --b 1 --A 1 --d 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"solutions\":[{\"n\":[1],\"x\":\"1\"}]") != std::string::npos);
  CHECK(r.out.find("\"certificates\"") != std::string::npos);

  auto routed = run("obstruct --b 1 --A 1,1 --d 2");
  CHECK(routed.exit_code == 3);

  auto b2 = run("obstruct --b 2 --A 1 --d 2");
  CHECK(b2.exit_code == 0);
  CHECK(b2.out.find("\"n\":[2],\"x\":\"2\"") != std::string::npos);
}

TEST_CASE("abc pipeline") {
  auto r = run("abc --poly 1,0,-1 --b 1 --A 1 --n-bound 10 --x-bound 1000");
  CHECK(r.exit_code == 0);
  // 8 solutions (4 n-values, +-x), 4 distinct triples
  CHECK(r.out.find("\"record\":\"summary\"") != std::string::npos);
  CHECK(r.out.find("\"solutions\":8") != std::string::npos);
  CHECK(r.out.find("\"triples\":4") != std::string::npos);
  CHECK(r.out.find("\"A\":\"9\",\"B\":\"-1\",\"C\":\"8\"") != std::string::npos);
  CHECK(r.out.find("\"max_quality\":\"1.226294385") != std::string::npos);

  auto monomial = run("abc --poly 1,0,0 --b 1 --A 1");
  CHECK(monomial.exit_code == 3);

  auto empty = run("abc --poly 1,0,-1 --b 1 --A 1 --n-bound 2 --x-bound 10");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("\"solutions\":0") != std::string::npos);
}

TEST_CASE("check command") {
  auto r = run("check --max-n 60");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"suite\":\"dfact_root_monotone\"") != std::string::npos);
  CHECK(r.out.find("\"failures\":0") != std::string::npos);
  CHECK(r.out.find("screen_consistency") != std::string::npos);

  auto bad = run("check --max-n 0");
  CHECK(bad.exit_code == 64);
}

TEST_CASE("budget exhaustion surfaces as exit 2") {
  auto r = run("solve --family T4 --bound 12 --no-prune");
  CHECK(r.exit_code == 2);
}

TEST_CASE("table mode renders summaries") {
  auto r = run("--table solve --family T1 --bound 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("solutions within bound") != std::string::npos);
}
