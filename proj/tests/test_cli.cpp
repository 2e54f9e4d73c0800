#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "ncg/cli.hpp"
#include "ncg/constructions.hpp"
#include "ncg/graph_io.hpp"

using namespace ncg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ncg_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("construct emits parseable edge lists") {
  const Result torus = run({"construct", "torus", "--d", "2", "--ell", "2", "--delta", "3,4"});
  REQUIRE(torus.code == 0);
  std::istringstream in(torus.out);
  const OwnedGraph g = read_graph(in);
  CHECK(g.order() == 72);
  CHECK(g == build_torus({2, 2, {3, 4}}).graph);

  const Result derived = run({"--alpha", "2", "--k", "4", "construct", "torus", "--delta-d", "4"});
  REQUIRE(derived.code == 0);
  CHECK(derived.out == torus.out);

  const Result heawood_out = run({"construct", "heawood"});
  CHECK(heawood_out.out == to_edge_list(heawood()));

  const Result labels = run({"construct", "open-torus", "--delta", "2,2", "--labels"});
  REQUIRE(labels.code == 0);
  CHECK(labels.err.find(" I\n") != std::string::npos);
}

TEST_CASE("construct then verify round trip") {
  const Result c10 = run({"construct", "cycle", "--n", "10"});
  REQUIRE(c10.code == 0);
  const Result ok = run({"verify", "--alpha", "2", "--k", "2", "--variant", "max", "-"}, c10.out);
  CHECK(ok.code == 0);
  CHECK(ok.out == "EQUILIBRIUM\n");

  const Result bad = run({"--alpha", "0.5", "--k", "3", "verify"}, c10.out);
  CHECK(bad.code == 0);
  std::istringstream lines(bad.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first == "NOT_EQUILIBRIUM");
  const auto w = nlohmann::json::parse(second);
  CHECK(w.at("delta").get<double>() < 0);
  CHECK(w.at("endpoints").size() >= 2);
}

TEST_CASE("best response JSON") {
  const Result r = run({"--alpha", "0.5", "--k", "2", "--variant", "sum", "best-response",
                        "--player", "0"},
                       "ncg n=3\n0 1 0\n1 2 1\n");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("player") == 0);
  CHECK(j.at("endpoints") == nlohmann::json::array({1, 2}));
  CHECK(j.at("cost").get<double>() == doctest::Approx(3.0));
  CHECK(j.at("improving") == true);
  CHECK(j.at("heuristic") == false);
}

TEST_CASE("generate is deterministic in the seed") {
  const Result a = run({"--seed", "5", "generate", "tree", "--n", "30"});
  const Result b = run({"generate", "tree", "--n", "30", "--seed", "5"});
  const Result c = run({"--seed", "6", "generate", "tree", "--n", "30"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const Result gnp = run({"--seed", "5", "generate", "gnp", "--n", "20", "--p", "0.3"});
  CHECK(gnp.code == 0);
  CHECK(run({"generate", "gnp", "--n", "2", "--p", "0"}).code == 1);
}

TEST_CASE("simulate writes the final graph and a summary") {
  const auto trace = scratch("trace.jsonl");
  const Result r = run({"--alpha", "0.5", "--k", "3", "simulate", "--trace", trace.string()},
                       "ncg n=5\n0 1 0\n1 2 1\n2 3 2\n3 4 3\n");
  REQUIRE(r.code == 0);
  const auto summary = nlohmann::json::parse(r.err);
  CHECK(summary.at("status") == "equilibrium");
  std::istringstream in(r.out);
  CHECK(read_graph(in).order() == 5);
  std::ifstream jsonl(trace);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(jsonl, line)) ++lines;
  CHECK(lines == summary.at("rounds").get<std::size_t>() + 1);
}

TEST_CASE("sweep to a file") {
  const auto config = scratch("grid.json");
  const auto csv = scratch("results.csv");
  std::ofstream(config) << R"({"classes": [{"type": "tree", "n": 20}],
    "alpha": [1, 2], "k": [2, 1000], "repetitions": 20, "seed": 1})";
  const Result r = run({"sweep", "--config", config.string(), "--out", csv.string(), "--jobs", "2"});
  REQUIRE(r.code == 0);
  std::ifstream in(csv);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 81);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate", "tree"}).code == 2);
  CHECK(run({"generate", "forest", "--n", "4"}).code == 2);
  CHECK(run({"construct", "cycle", "--n", "2"}).code == 1);
  CHECK(run({"--alpha", "5", "--k", "4", "construct", "torus"}).code == 1);
  CHECK(run({"verify"}, "garbage").code == 1);
  CHECK(run({"verify", "/nonexistent/graph.ncg"}).code == 1);
  CHECK(run({"--variant", "avg", "verify"}, "ncg n=2\n0 1 0\n").code == 1);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);
}

TEST_CASE("binary pipes construct into verify") {
  const std::string cmd = std::string("\"") + NCG_CLI_PATH + "\" construct cycle --n 10 | \"" +
                          NCG_CLI_PATH + "\" verify --alpha 2 --k 2";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[64] = {};
  const std::size_t got = fread(buf, 1, sizeof buf - 1, pipe);
  const int status = pclose(pipe);
  CHECK(std::string(buf, got) == "EQUILIBRIUM\n");
  CHECK(WEXITSTATUS(status) == 0);

  const int usage = std::system((std::string("\"") + NCG_CLI_PATH + "\" bogus 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(usage) == 2);
}
