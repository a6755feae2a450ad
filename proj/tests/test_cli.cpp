// Drives the installed binary through its subcommands and exit codes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "catch2/catch_amalgamated.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp_out = std::string(PIVD_CLI_PATH) + ".out.tmp";
  std::string cmd = std::string(PIVD_CLI_PATH) + " " + args + " > " + tmp_out + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp_out);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::remove(tmp_out.c_str());
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string(PIVD_CLI_PATH) + "." + name + ".tmp";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path);
  out << bytes;
}

}  // namespace

TEST_CASE("gen then recognize and solve") {
  std::string instance = tmp_path("gen1");
  CHECK(run("gen --n 20 -k 0 --seed 3 --output " + instance).code == 0);
  CHECK(run("recognize --input " + instance).code == 0);  // proper interval
  CHECK(run("solve --input " + instance + " -k 0").code == 0);

  std::string noisy = tmp_path("gen2");
  CHECK(run("gen --n 25 -k 2 --seed 7 --output " + noisy).code == 0);
  RunResult solve = run("solve --input " + noisy);  // budget from the k= header
  CHECK(solve.code == 0);
  CHECK(solve.out.find("feasible") == 0);
  std::remove(instance.c_str());
  std::remove(noisy.c_str());
}

TEST_CASE("recognize rejects a claw with a witness") {
  std::string claw = tmp_path("claw");
  write_file(claw, "0 1\n0 2\n0 3\n");
  RunResult r = run("recognize --input " + claw);
  CHECK(r.code == 1);
  CHECK(r.out.find("proper-interval no") != std::string::npos);
  CHECK(r.out.find("witness claw 0 1 2 3") != std::string::npos);
  std::remove(claw.c_str());
}

TEST_CASE("solve exit codes and the brute oracle") {
  std::string c9 = tmp_path("c9");
  write_file(c9, "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n0 8\n");
  CHECK(run("solve --input " + c9 + " -k 1").code == 0);
  CHECK(run("solve --input " + c9 + " -k 0").code == 1);
  CHECK(run("solve --input " + c9 + " -k 1 --oracle brute").code == 0);
  RunResult min = run("solve --input " + c9 + " --budget-cap 3");
  CHECK(min.code == 0);
  CHECK(min.out.find("minimum-deletion 1") == 0);
  std::remove(c9.c_str());
}

TEST_CASE("kernelize writes a kernel and a trace; verify agrees") {
  std::string noisy = tmp_path("gen3");
  std::string kernel = tmp_path("kernel");
  std::string trace = tmp_path("trace");
  CHECK(run("gen --n 40 -k 2 --seed 11 --output " + noisy).code == 0);
  CHECK(run("kernelize --input " + noisy + " --output " + kernel + " --trace " + trace).code == 0);
  std::ifstream tf(trace);
  std::string first_line;
  std::getline(tf, first_line);
  CHECK(first_line == "pivd-trace v1");
  CHECK(run("verify --input " + noisy + " -k 2").code == 0);
  std::remove(noisy.c_str());
  std::remove(kernel.c_str());
  std::remove(trace.c_str());
}

TEST_CASE("kernelize reports NO with exit 1") {
  std::string claws = tmp_path("claws");
  write_file(claws, "0 1\n0 2\n0 3\n4 5\n4 6\n4 7\n");  // two claws, k = 1
  CHECK(run("kernelize --input " + claws + " -k 1").code == 1);
  CHECK(run("kernelize --input " + claws + " -k 2").code == 0);
  std::remove(claws.c_str());
}

TEST_CASE("input errors exit with 2, resource limits with 3") {
  std::string bad = tmp_path("bad");
  write_file(bad, "0 x\n");
  CHECK(run("recognize --input " + bad).code == 2);
  CHECK(run("recognize --input /nonexistent/file").code == 2);
  CHECK(run("solve --input " + bad + " -k 1").code == 2);
  CHECK(run("nonsense-subcommand").code == 2);

  std::string big = tmp_path("big");
  CHECK(run("gen --n 30 -k 0 --seed 1 --output " + big).code == 0);
  CHECK(run("solve --input " + big + " -k 1 --oracle brute").code == 3);
  std::remove(bad.c_str());
  std::remove(big.c_str());
}

TEST_CASE("formats round-trip through the CLI") {
  std::string g6 = tmp_path("g6");
  CHECK(run("gen --n 12 -k 0 --seed 5 --format graph6 --output " + g6).code == 0);
  CHECK(run("recognize --format graph6 --input " + g6).code == 0);
  std::string dimacs = tmp_path("dimacs");
  CHECK(run("gen --n 12 -k 1 --seed 5 --format dimacs --output " + dimacs).code == 0);
  RunResult r = run("solve --format dimacs --input " + dimacs);  // k from "c k 1"
  CHECK(r.code == 0);
  std::remove(g6.c_str());
  std::remove(dimacs.c_str());
}
