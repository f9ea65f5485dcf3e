#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stpef/corpus.hpp"
#include "stpef/jsonio.hpp"
#include "stpef/verify.hpp"

using namespace stpef;
using nlohmann::json;

namespace {

int run(const std::string& args, const std::string& stdout_path = "cli_stdout.txt") {
  std::string cmd = std::string(STPEF_BIN) + " " + args + " > " + stdout_path + " 2> cli_stderr.txt";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_graph(const std::string& path, const std::string& name) {
  write_json_file(path, graph_to_json(corpus_get(name).graph));
}

}  // namespace

TEST_CASE("cli builds martin and reports the size breakdown") {
  write_graph("cli_c4.json", "c4");
  REQUIRE(run("build --input cli_c4.json --method martin --out cli_c4_ef.json") == 0);
  auto ef = ef_from_json(read_json_file("cli_c4_ef.json"));
  CHECK(ef.ef.size() == 32);  // 2*4*4
  CHECK(ef.provenance == "martin(n=4,m=4)");
  auto rep = json::parse(slurp("cli_stdout.txt"));
  CHECK(rep.at("schema") == kSizeSchema);
  CHECK(rep.at("final_size") == 32);
  CHECK(rep.at("stages")[0].at("formula") == "2nm");
  CHECK(rep.at("apex_k") == -1);
}

TEST_CASE("cli round trip: build then verify exactly") {
  write_graph("cli_k4.json", "k4");
  REQUIRE(run("build --input cli_k4.json --method kapex --apex-set 3 --out cli_k4_ef.json") == 0);
  auto size_rep = json::parse(slurp("cli_stdout.txt"));
  CHECK(size_rep.at("apex_k") == 1);
  CHECK(size_rep.at("deleted_vertices") == json::array({3}));
  CHECK(size_rep.at("edge_bound_ok") == true);

  REQUIRE(run("verify --ef cli_k4_ef.json --graph cli_k4.json --mode exact --out cli_rep.json") ==
          0);
  auto rep = json::parse(slurp("cli_rep.json"));
  CHECK(rep.at("schema") == kVerifySchema);
  CHECK(rep.at("pass") == true);
  CHECK(rep.at("graph_id") == "cli_k4");
  CHECK(rep.at("mode") == "exact");
  CHECK(rep.at("subtour_lps") == 15);
  CHECK(rep.at("construction").get<std::string>().find("stp_from_nesubp") == 0);
}

TEST_CASE("cli verify fails on a corrupted formulation with exit 1") {
  write_graph("cli_c3.json", "c3");
  REQUIRE(run("build --input cli_c3.json --method martin --out cli_c3_ef.json") == 0);
  auto j = read_json_file("cli_c3_ef.json");
  j["eqs"][0]["rhs"] = "3";  // degree-sum row now demands one edge too many
  write_json_file("cli_c3_ef.json", j);
  CHECK(run("verify --ef cli_c3_ef.json --graph cli_c3.json --mode exact --out cli_rep.json") ==
        1);
  auto rep = json::parse(slurp("cli_rep.json"));
  CHECK(rep.at("pass") == false);
}

TEST_CASE("cli builds williams from a stored rotation and rejects bad ones") {
  auto named = corpus_get("c3");
  auto pr = is_planar(named.graph);
  REQUIRE(pr.planar);
  write_json_file("cli_c3_rot.json", graph_to_json(named.graph, pr.rotation));
  REQUIRE(run("build --input cli_c3_rot.json --method williams --out cli_c3_w.json") == 0);
  auto ef = ef_from_json(read_json_file("cli_c3_w.json"));
  CHECK(ef.ef.size() == 12);

  // torus rotation has genus 1: williams must refuse, builder exits 2
  auto t3 = torus_grid(3);
  write_json_file("cli_t3.json", graph_to_json(t3.graph, t3.rotation));
  CHECK(run("build --input cli_t3.json --method williams --out cli_t3_w.json") == 2);
  CHECK(slurp("cli_stderr.txt").find("error:") == 0);
}

TEST_CASE("cli verify supports sampled and nesubp modes") {
  write_graph("cli_p3.json", "p3");
  REQUIRE(run("build --input cli_p3.json --method nesubp --out cli_p3_ef.json") == 0);
  REQUIRE(run("verify --ef cli_p3_ef.json --graph cli_p3.json --mode nesubp --seed 5 "
              "--out cli_rep.json") == 0);
  auto rep = json::parse(slurp("cli_rep.json"));
  CHECK(rep.at("mode") == "nesubp");
  CHECK(rep.at("seed") == 5);

  REQUIRE(run("build --input cli_p3.json --method williams --out cli_p3_w.json") == 0);
  REQUIRE(run("verify --ef cli_p3_w.json --graph cli_p3.json --mode sampled --trials 25 "
              "--id path3 --out cli_rep.json") == 0);
  rep = json::parse(slurp("cli_rep.json"));
  CHECK(rep.at("trials") == 25);
  CHECK(rep.at("graph_id") == "path3");
}

TEST_CASE("cli verify reports are byte-identical across runs") {
  write_graph("cli_k4.json", "k4");
  REQUIRE(run("build --input cli_k4.json --method martin --out cli_k4_ef.json") == 0);
  REQUIRE(run("verify --ef cli_k4_ef.json --graph cli_k4.json --mode sampled --trials 40 "
              "--seed 11 --out cli_rep1.json") == 0);
  REQUIRE(run("verify --ef cli_k4_ef.json --graph cli_k4.json --mode sampled --trials 40 "
              "--seed 11 --out cli_rep2.json") == 0);
  CHECK(slurp("cli_rep1.json") == slurp("cli_rep2.json"));
  CHECK_FALSE(slurp("cli_rep1.json").empty());
}

TEST_CASE("cli bench emits csv and honors --no-timing") {
  REQUIRE(run("bench --family complete --kmin 3 --kmax 4 --methods subp,martin --no-timing") ==
          0);
  CHECK(slurp("cli_stdout.txt") == bench_family("complete", 3, 4, {"subp", "martin"}, false));
  REQUIRE(run("bench --family planar-grid --kmin 2 --kmax 2 --methods williams "
              "--no-timing --out cli_bench.csv") == 0);
  CHECK(slurp("cli_bench.csv").find("planar-grid,2,4,4,0,-,16,0") != std::string::npos);
}

TEST_CASE("cli rejects bad invocations") {
  write_graph("cli_c3.json", "c3");
  CHECK(run("build --input cli_c3.json --method simplex --out cli_x.json") == 2);
  CHECK(run("build --input cli_missing.json --method martin --out cli_x.json") == 2);
  CHECK(run("verify --ef cli_missing.json --graph cli_c3.json") == 2);
  CHECK(run("bench --family complete --kmin 1 --kmax 2 --methods warp") == 2);
  CHECK(run("build --input cli_c3.json") != 0);  // CLI11 usage error
  CHECK(run("frobnicate") != 0);
}

TEST_CASE("cli build of the genus pipeline prints stage provenance") {
  write_graph("cli_k5.json", "k5");
  REQUIRE(run("build --input cli_k5.json --method genus --genus 1 --planarizer greedy-degree "
              "--out cli_k5_ef.json") == 0);
  auto rep = json::parse(slurp("cli_stdout.txt"));
  CHECK(rep.at("genus_hint") == 1);
  CHECK(rep.at("apex_k") == 1);
  CHECK(rep.at("final_size") == 107);
  auto ef = ef_from_json(read_json_file("cli_k5_ef.json"));
  CHECK(ef.ef.size() == 107);
  CHECK(ef.provenance.find("stp_from_nesubp(balas(embed(") == 0);
}
