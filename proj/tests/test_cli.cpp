#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {
struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(INVMAJ_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) out += buffer.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}
}  // namespace

TEST_CASE("poly") {
  auto r = run_cli("poly 2 --content 1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + q\n");

  r = run_cli("poly 1,1 --content 1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + t\n");

  r = run_cli("poly 1 --content 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = run_cli("poly 1,1 --content 1,1 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[[0,0,1],[0,1,1]]\n");

  r = run_cli("poly 2,1 --content 1,1,1 --q0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 2*t\n");

  // usage errors exit 2
  CHECK(run_cli("poly 2 --content 1").exit_code == 2);
  CHECK(run_cli("poly 2,3 --content 1,1,1,1,1").exit_code == 2);
  CHECK(run_cli("poly 2").exit_code == 2);
}

TEST_CASE("poly output is deterministic") {
  auto a = run_cli("poly 2,2 --alphabet-size 2");
  auto b = run_cli("poly 2,2 --alphabet-size 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run_cli("poly 2,1 --alphabet-size 2 --q0");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "1,2: 1 + t\n2,1: 1 + t\n3: 1\n");

  auto d = run_cli("poly 2 --content 1,1 --q0 --json");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "[[0,0,1]]\n");
}

TEST_CASE("map") {
  auto r = run_cli("map carlitz 4,1,3,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3,2,4,1\n");

  r = run_cli("map reduce 1,5,2,2,1,4,3,2,3,1,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5,1,2,1,4,3,2,2,1,3  cc=12\n");

  r = run_cli("map cocharge 1,5,2,2,1,4,3,2,3,1,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,5,2,2,1,4,3,2,3,1,3  cc=12\n");

  r = run_cli("map zero-bump [[1,2,3],[2,1]]");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[[1,2],[2,1]]\ninv=0 maj=1 -> inv=0 maj=1\n");

  r = run_cli("map majcode 3,2,4,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 5) == "1210\n");

  r = run_cli("map invcode 4,1,3,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 5) == "1210\n");

  // a code plus an alphabet runs the inverse map
  r = run_cli("map majcode 1,2,1,0 --alphabet 1,2,3,4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3,2,4,1\nmaj=4\n");

  r = run_cli("map invcode 1,2,1,0 --alphabet 1,2,3,4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4,1,3,2\ninv=4\n");

  // a code outside the image reports the taxonomy and exits 2
  r = run_cli("map majcode 3,0,0 --alphabet 1,2,3");
  CHECK(r.exit_code == 2);

  r = run_cli("map hl-symmetry [[1,1,2]]");
  CHECK(r.exit_code == 0);

  // precondition violations exit 2 and name the problem
  r = run_cli("map zero-bump [[2,1]]");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("inversion-free") != std::string::npos);

  r = run_cli("map t1 [[1,1]]");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("distinct") != std::string::npos);

  CHECK(run_cli("map unknown 1,2").exit_code == 2);
}

TEST_CASE("verify") {
  auto r = run_cli("verify symmetry --max-n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("symmetry:") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run_cli("verify cocharge --max-n 4 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"suite\":\"cocharge\"") != std::string::npos);
  CHECK(r.out.find("\"failures\":[]") != std::string::npos);

  r = run_cli("verify all --max-n 3 --jobs 2");
  CHECK(r.exit_code == 0);

  CHECK(run_cli("verify bogus").exit_code == 2);
}
