#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "suptrop/checks.hpp"
#include "suptrop/io.hpp"
#include "testutil.hpp"

using namespace suptrop;
using tu::mat;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SUPTROP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/suptrop_test_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("stm parsing") {
  Matrix a = parse_stm("0 0\n1 2\n");
  CHECK(a.rows() == 2);
  CHECK(a.at(1, 0).str() == "1");

  Matrix b = parse_stm("# comment line\n\n 3g  -4/3 \n-inf 0.5\n");
  CHECK(b == mat("3g -4/3\n-inf 1/2\n"));

  CHECK_THROWS_AS(parse_stm(""), ParseError);
  CHECK_THROWS_AS(parse_stm("0 1\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_stm("0 x\n"), ParseError);
  try {
    parse_stm("0 1\n2 oops\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("print-then-parse round trip on random matrices") {
  Rng rng(157);
  GenCfg cfg;
  for (int c = 0; c < 300; ++c) {
    int n = rng.uniform(1, 6);
    Matrix a = random_matrix(rng, n, cfg);
    CHECK(parse_stm(format_stm(a)) == a);
  }
}

TEST_CASE("vector files accept one row or one column") {
  CHECK(parse_stm_vector("0 4\n") == parse_stm_vector("0\n4\n"));
  CHECK_THROWS_AS(parse_stm_vector("0 1\n2 3\n"), ParseError);
}

TEST_CASE("cli: det, classify, errors") {
  std::string anomaly = write_tmp("anomaly.stm", "0 0\n1 2\n");
  RunResult det = run_cli("det " + anomaly);
  CHECK(det.exit_code == 0);
  CHECK(det.out.substr(0, det.out.find('\n')) == "2 (nonsingular)");

  RunResult cls = run_cli("classify " + anomaly);
  CHECK(cls.out == "nonsingular\n");

  std::string rect = write_tmp("rect.stm", "0\n1\n");
  RunResult bad = run_cli("det " + rect);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("determinant requires square matrix") != std::string::npos);

  std::string garbled = write_tmp("garbled.stm", "0 zz\n");
  RunResult parse = run_cli("det " + garbled);
  CHECK(parse.exit_code == 2);

  std::string strict = write_tmp("strict.stm", "-inf 0\n-inf 1\n");
  RunResult qinv = run_cli("qinv " + strict);
  CHECK(qinv.exit_code == 1);
}

TEST_CASE("cli: eigen output on a two-cycle matrix") {
  std::string twocycles = write_tmp("twocycles.stm", "-inf 14 8\n0 -inf -inf\n0 1 -inf\n");
  RunResult r = run_cli("eigen " + twocycles);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7 : (7, 0, 0) exact\n-5 : (0, 5, 11)\n");
}

TEST_CASE("cli: oracle agreement and json stability") {
  std::string twocycles = write_tmp("twocycles_b.stm", "-inf 14 8\n0 -inf -inf\n0 1 -inf\n");
  RunResult r = run_cli("det --oracle " + twocycles);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("oracle: agree") != std::string::npos);

  RunResult j1 = run_cli("charpoly --json " + twocycles);
  RunResult j2 = run_cli("charpoly --json " + twocycles);
  CHECK(j1.exit_code == 0);
  CHECK(j1.out == j2.out);
  CHECK(j1.out.find("\"text\": \"l^3 + 14 l + 9\"") != std::string::npos);

  RunResult jd = run_cli("det --json " + twocycles);
  CHECK(jd.out.find("\"value\": \"9\"") != std::string::npos);
  CHECK(jd.out.find("\"layer\": \"tangible\"") != std::string::npos);

  // byte stability across reruns for every verb on the fixture matrices
  std::string spectral = write_tmp("stable_a.stm", "4 0\n0 1\n");
  std::string onecycle =
      write_tmp("stable_b.stm", "-inf -inf 7\n4 -inf -inf\n3 5 -inf\n");
  for (const char* verb :
       {"det", "classify", "adj", "qinv", "qid", "vnreg", "charpoly",
        "essential", "roots", "eigen", "dep", "diag", "graph"}) {
    for (const std::string& f : {spectral, onecycle, twocycles}) {
      RunResult first = run_cli(std::string(verb) + " --json " + f);
      RunResult again = run_cli(std::string(verb) + " --json " + f);
      CHECK(first.out == again.out);
    }
  }
}

TEST_CASE("cli: check suite runs") {
  RunResult r = run_cli("check detmul --cases 40 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("40 cases, 0 failures") != std::string::npos);

  RunResult bad = run_cli("check nosuch");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("cli: every verb answers") {
  std::string a = write_tmp("verbs_a.stm", "4 0\n0 1\n");
  std::string b = write_tmp("verbs_b.stm", "0 0\n1 2\n");
  std::string v = write_tmp("verbs_v.stm", "0 0\n");

  CHECK(run_cli("adj " + a).out == "1 0\n0 4\n");
  CHECK(run_cli("qinv " + a).out == "-4 -5\n-5 -1\n");
  RunResult qid = run_cli("qid " + a);
  CHECK(qid.exit_code == 0);
  CHECK(qid.out.find("left:") != std::string::npos);
  CHECK(run_cli("vnreg " + a).out == "regular\n");
  RunResult vn = run_cli("vnreg " + write_tmp("verbs_vncounter.stm",
                                              "10 0 10\n0 10 0\n0 10 1\n"));
  CHECK(vn.out == "not regular; mismatches: (1,2)\n");
  CHECK(run_cli("charpoly " + a).out == "l^2 + 4 l + 5\n");
  CHECK(run_cli("essential " + a).out == "l^2 + 4 l + 5\n");
  CHECK(run_cli("roots " + a).out == "corner roots: 4 1\n");
  RunResult dep = run_cli("dep " + b);
  CHECK(dep.out == "independent (nonsingular)\n");
  RunResult dep2 = run_cli("dep " + write_tmp("verbs_dep.stm", "0 1\n2 3\n"));
  CHECK(dep2.out == "gamma: (3, 1)\ncombination: (3g, 4g)\n");
  RunResult diag = run_cli("diag " + a);
  CHECK(diag.out == "U:\n4 0\n0 4\nD:\n4 -inf\n-inf 1\n");
  RunResult graph = run_cli("graph " + b);
  CHECK(graph.exit_code == 0);
  CHECK(graph.out.find("cyclic cover: yes") != std::string::npos);
  CHECK(run_cli("mul " + b + " " + b).out == "1 2\n3 4\n");
  CHECK(run_cli("add " + b + " " + b).out == "0g 0g\n1g 2g\n");
  CHECK(run_cli("pow " + b + " 4").out == "5 6\n7 8\n");
  CHECK(run_cli("solve " + b + " " + v).out == "w: (0, -1)\nA*w: (0, 1g)\n");
}
