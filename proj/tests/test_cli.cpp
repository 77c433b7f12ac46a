#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "isk4/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = isk4::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

const std::string kFixtures = ISK4_FIXTURES;

}  // namespace

TEST_CASE("detect: K4+ graph6 on stdin gives a 5-vertex witness") {
  const Run r = run({"detect", "--format", "graph6", "-"}, "D^o\n");
  CHECK(r.code == isk4::cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 1);
  CHECK(out[0]["input_index"] == 0);
  CHECK(out[0]["verdict"] == "found");
  CHECK(out[0]["witness"]["vertices"].size() == 5);
  CHECK(out[0]["witness"]["paths"].size() == 6);
}

TEST_CASE("detect: one line per graph, verdicts in input order") {
  const Run r = run({"detect"}, "D^o\nC~\nE}lw\n");
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0]["verdict"] == "found");
  CHECK(out[1]["verdict"] == "none");
  CHECK_FALSE(out[1].contains("witness"));
  CHECK(out[2]["verdict"] == "none");
  CHECK(out[2]["input_index"] == 2);

  const Run k4 = run({"detect", "--variant", "isk4"}, "C~\n");
  CHECK(lines(k4.out)[0]["verdict"] == "found");
  const Run oracle = run({"detect", "--oracle"}, "D^o\nC~\n");
  CHECK(lines(oracle.out)[0]["verdict"] == "found");
  CHECK(lines(oracle.out)[1]["verdict"] == "none");
}

TEST_CASE("detect: budget outcome and exit code 3") {
  const Run r = run({"detect", "--budget", "1"}, "IheA@GUAo\n");
  CHECK(r.code == isk4::cli::kExitBudget);
  CHECK(lines(r.out)[0]["verdict"] == "budget");
}

TEST_CASE("color: two K4s edge list, verified, 4 colors") {
  const Run r = run({"color", "--format", "edgelist", kFixtures + "/two_k4s.txt", "--verify", "--exact"});
  CHECK(r.code == isk4::cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 1);
  CHECK(out[0]["status"] == "ok");
  CHECK(out[0]["palette_size"] == 4);
  CHECK(out[0]["proper"] == true);
  CHECK(out[0]["chi"] == 4);
  CHECK(out[0]["fallbacks"] == 0);
  CHECK(out[0]["trace"]["step"] == "low-degree");
}

TEST_CASE("color: lines output, DIMACS input, Ramsey route") {
  const Run r = run({"color", "--format", "dimacs", kFixtures + "/two_triangles.col", "--emit", "lines"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 0\n1 1\n2 2\n3 0\n4 1\n5 2\n");

  const Run ramsey = run({"color", "--via-ramsey", "--k", "2"}, "G?~vf_\n");
  CHECK(ramsey.code == 0);
  CHECK(lines(ramsey.out)[0]["trace"]["step"] == "multipartite-direct");
  CHECK(run({"color", "--via-ramsey"}, "G?~vf_\n").code == isk4::cli::kExitUsage);
  CHECK(run({"color", "--via-ramsey", "--k", "6"}, "G?~vf_\n").code == isk4::cli::kExitUsage);
  CHECK(run({"color", "--k", "1"}, "C~\n").code == isk4::cli::kExitUsage);
}

TEST_CASE("survey: --max-n 5 --filter isk4p-free has an omega = 2 row with max chi 3") {
  const Run r = run({"survey", "--max-n", "5", "--filter", "isk4p-free"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,omega,max_chi_observed,count_graphs,example_graph6\n", 0) == 0);
  CHECK(r.out.find("\n5,2,3,") != std::string::npos);
  CHECK(r.err.find("seed 20160101") != std::string::npos);
}

TEST_CASE("campaign subcommands read graph6 streams when given an input") {
  const Run r = run({"check-bounds", "-", "--filter", "isk4-free"}, "Dhc\nIheA@GUAo\n");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["triangle_free_isk4_free"]["max_chi"] == 3);
  CHECK(j["violations"].empty());

  const Run c = run({"verify-claims", "-"}, "G?~vf_\nH?~vf_B\n");
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["with_k44"] == 2);
}

TEST_CASE("exit codes: usage 64, data error 65 with line number, budget 3") {
  const Run unknown = run({"detect", "--no-such-flag"});
  CHECK(unknown.code == isk4::cli::kExitUsage);
  CHECK(unknown.err.find("detect") != std::string::npos);
  CHECK(run({}).code == isk4::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == isk4::cli::kExitUsage);
  CHECK(run({"survey", "--max-n", "9"}).code == isk4::cli::kExitUsage);
  CHECK(run({"survey", "--filter", "bogus"}).code == isk4::cli::kExitUsage);

  const Run bad = run({"detect"}, "D^o\nD?\n");
  CHECK(bad.code == isk4::cli::kExitDataErr);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(lines(bad.out).empty());

  const Run edge = run({"color", "--format", "edgelist", "-"}, "3 1\n0 5\n");
  CHECK(edge.code == isk4::cli::kExitDataErr);
  CHECK(edge.err.find("line 2") != std::string::npos);

  const Run missing = run({"color", "--format", "edgelist", "/nonexistent/file"});
  CHECK(missing.code == isk4::cli::kExitDataErr);

  const Run budget = run({"survey", "--max-n", "6", "--budget", "1"});
  CHECK(budget.code == isk4::cli::kExitBudget);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism: same flags and seed give byte-identical stdout, across --jobs") {
  const std::vector<std::string> base{"verify-claims", "--source", "planted", "--min-n", "8", "--max-n", "13",
                                      "--count", "600", "--seed", "7"};
  const Run a = run(base);
  const Run b = run(base);
  auto par = base;
  par.insert(par.end(), {"--jobs", "4"});
  const Run c = run(par);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const Run d1 = run({"color", "--jobs", "1"}, "D^o\nG?~vf_\nIheA@GUAo\nC~\n");
  const Run d4 = run({"color", "--jobs", "4"}, "D^o\nG?~vf_\nIheA@GUAo\nC~\n");
  CHECK(d1.out == d4.out);
}
