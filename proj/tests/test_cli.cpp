#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(THOMPSON_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("element verbs") {
  CHECK(first_line(run("mul --n 2 \"x0 x1\" \"X1 X0\"").out) == "identity");
  CHECK(first_line(run("order --n 3 --elem c1").out) == "5");
  CHECK(first_line(run("order --n 2 x0").out) == "infinite");
  CHECK(first_line(run("plmap --n 2 c0").out) == "0/1:1/2; 1/2:0/1");
  CHECK(first_line(run("eval --n 2 \"(. .) (. .) @1\"").out) == "(. .) (. .) @1");
  CHECK(first_line(run("inv --n 2 c1").out) == first_line(run("eval --n 2 \"c1 c1\"").out));
  CHECK(first_line(run("reduce --n 2 \"((. .) (. .)) ((. .) (. .)) @0\"").out) == "identity");
  CHECK(first_line(run("embed --from 3 --to 2 c0").out) == first_line(run("eval --n 2 c1").out));
}

TEST_CASE("printed values parse back") {
  const std::string key = first_line(run("eval --n 3 \"x0 C1 X2 c0\"").out);
  CHECK(first_line(run("eval --n 3 \"" + key + "\"").out) == key);
  const Result f = run("factorize --n 3 \"x0 C1 X2 c0\"");
  CHECK(f.status == 0);
  CHECK(f.out.find("| k=") != std::string::npos);
}

TEST_CASE("errors") {
  CHECK(run("eval --n 2 \"x0 q1\"").status == 2);
  CHECK(run("eval --n 2 \"(. .) (. .) @5\"").status == 2);
  CHECK(run("embed --from 4 --to 3 x0").status == 2);
  CHECK(run("ball --n 2 --radius 8 --cap 100").status == 3);
  CHECK(run("frobnicate").status != 0);
}

TEST_CASE("checks and reports") {
  CHECK(run("relations --n 3 --bound 5").status == 0);
  CHECK(run("pump --n 3").status == 0);
  CHECK(run("pump --n 2 --k 4 --l 3").status == 0);
  CHECK(run("census --n 3 --radius 3").status == 0);
  CHECK(run("embed --from 3 --to 2 --scan --count 50").status == 0);
  const Result ball = run("ball --n 2 --radius 2");
  CHECK(ball.out == "radius,count\n0,1\n1,5\n2,20\n");

  const std::string csv = "cli_bounds.csv";
  const Result b = run("bounds --n 2 --radius 3 --csv " + csv);
  CHECK(b.status == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "element_key,n,N_sigma,D_n,len_exact,len_upper,lb,ub,pass");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "pass");
  }
  CHECK(rows == 104);
  std::remove(csv.c_str());

  // Seeded output is reproducible.
  const Result d1 = run("distortion --n 3 --count 10 --seed 4 --tn-radius 2 --t2-radius 5");
  const Result d2 = run("distortion --n 3 --count 10 --seed 4 --tn-radius 2 --t2-radius 5");
  CHECK(d1.out == d2.out);
  CHECK(d1.status == 0);
}
