#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "baxterlab/cli.hpp"

using namespace baxterlab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--family", "quarter", "--n", "13", "--method", "formula"}).out == "40\n");
  CHECK(run({"count", "--family", "baxter", "--n", "4", "--method", "brute"}).out == "22\n");
  const Outcome all = run({"count", "--family", "baxter", "--n", "1..5", "--method", "all"});
  CHECK(all.code == cli::kExitOk);
  CHECK(all.out.find("5\t92\tformula\n5\t92\ttree\n5\t92\tbrute\n") != std::string::npos);
  const Outcome csv = run({"count", "--family", "fpf-involution", "--n", "4", "--method", "formula", "--format", "csv"});
  CHECK(csv.out == "n,count,method\n4,3,formula\n");
  const Outcome half = run({"count", "--family", "half", "--n", "4..5", "--method", "all"});
  CHECK(half.code == cli::kExitOk);
  CHECK(half.out.find("4\t6\tbrute") != std::string::npos);
  CHECK(half.out.find("5\t8\ttree") != std::string::npos);
}

TEST_CASE("count usage errors") {
  CHECK(run({"count", "--family", "octagon", "--n", "4"}).code == cli::kExitUsage);
  CHECK(run({"count", "--family", "baxter", "--n", "x"}).code == cli::kExitUsage);
  CHECK(run({"count", "--family", "baxter", "--n", "5..3"}).code == cli::kExitUsage);
  CHECK(run({"count", "--family", "baxter", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"count", "--family", "baxter"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
}

TEST_CASE("count reports limit errors as failures") {
  const Outcome r = run({"count", "--family", "baxter", "--n", "9", "--method", "brute", "--brute-limit", "8"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("limited to n <= 8") != std::string::npos);
}

TEST_CASE("check") {
  const Outcome r = run({"check", "2413"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("2413: not Baxter\n", 0) == 0);
  CHECK(r.out.find("occurrence\t2-41-3\t(1,2,3,4)") != std::string::npos);
  const Outcome ok = run({"check", "41352"});
  CHECK(ok.out.rfind("41352: Baxter\n", 0) == 0);
  CHECK(ok.out.find("rotate90cw") != std::string::npos);
  CHECK(run({"check", "1224"}).code == cli::kExitUsage);
  CHECK(run({"check", "41352", "--format", "json"}).out.find("\"baxter\":true") != std::string::npos);
}

TEST_CASE("tree") {
  const Outcome r = run({"tree", "--rule", "quarter", "--depth", "2", "--explicit"});
  CHECK(r.code == cli::kExitOk);
  CHECK(count_lines(r.out) == 11);
  CHECK(r.out.find("25314") != std::string::npos);
  CHECK(r.out.find("816357492") != std::string::npos);
  CHECK(run({"tree", "--rule", "quarter", "--depth", "4"}).out == "0\t1\n1\t2\n2\t8\n3\t40\n4\t224\n");
  CHECK(run({"tree", "--rule", "catalan", "--depth", "2", "--explicit"}).code == cli::kExitUsage);
  CHECK(run({"tree", "--rule", "baxter", "--depth", "9", "--explicit", "--budget", "100"}).code ==
        cli::kExitFailure);
}

TEST_CASE("list and stats") {
  CHECK(run({"list", "--family", "quarter", "--n", "5"}).out == "25314\n41352\n");
  CHECK(run({"stats", "--family", "baxter", "--n", "3"}).out == "0\t0\t1\n1\t1\t4\n2\t2\t1\n");
}

TEST_CASE("verify") {
  const Outcome r = run({"verify", "--suite", "formulas", "--max-n", "6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.rfind("PASS\t", 0) == 0);
  CHECK(run({"verify", "--suite", "everything"}).code == cli::kExitUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"count", "--family", "half", "--n", "1..8", "--method", "all", "--jobs", "3"};
  CHECK(run(args).out == run(args).out);
}
