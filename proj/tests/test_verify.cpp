#include "stpef/verify.hpp"

#include <sstream>
#include <vector>

#include "doctest.h"
#include "stpef/corpus.hpp"
#include "stpef/extform.hpp"
#include "stpef/planar.hpp"

using namespace stpef;

namespace {

EfBundle without_lift(ExtForm ef, std::string provenance) {
  EfBundle b;
  b.ef = std::move(ef);
  b.provenance = std::move(provenance);
  return b;
}

std::vector<std::string> csv_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> csv_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("splitmix64 is the reference stream") {
  SplitMix64 rng{0};
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 again{0};
  CHECK(again.bounded(0, 999) == static_cast<long>(0xe220a8397b1dcdafULL % 1000));
}

TEST_CASE("exact verification passes martin on K4 with frozen LP counts") {
  auto k4 = corpus_get("k4").graph;
  auto rep = verify_stp_exact(martin_stp(k4), k4, "k4");
  CHECK(rep.pass);
  CHECK(rep.mode == "exact");
  CHECK(rep.graph_id == "k4");
  CHECK(rep.construction == "martin(n=4,m=6)");
  REQUIRE(rep.checks.size() == 4);
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    CHECK(c.counterexample.empty());
  }
  CHECK(rep.checks[0].name == "tree-feasibility");
  CHECK(rep.checks[1].name == "subtour");
  CHECK(rep.checks[2].name == "nonnegativity");
  CHECK(rep.checks[3].name == "degree-sum");
  CHECK(rep.subtour_lps == 15);
  CHECK(rep.lp_solves == 15 + 6 + 2);  // subtour + per-edge minima + degree pair
  CHECK(rep.lift_lp_solves == 0);      // the martin lift is combinatorial
  CHECK(rep.inequalities == 48);
  CHECK(rep.timing_ms == 0);
}

TEST_CASE("exact verification passes williams on C3") {
  auto c3 = corpus_get("c3").graph;
  auto pr = is_planar(c3);
  auto rep = verify_stp_exact(williams_stp({c3, pr.rotation}), c3, "c3");
  CHECK(rep.pass);
  CHECK(rep.subtour_lps == 7);
  CHECK(rep.lp_solves == 7 + 3 + 2);
}

TEST_CASE("exact verification passes the nesubp-based stp and counts lift LPs") {
  auto c4 = corpus_get("c4").graph;
  auto rep = verify_stp_exact(stp_from_nesubp(c4, nesubp_planar_ef(c4)), c4, "c4");
  CHECK(rep.pass);
  CHECK(rep.lift_lp_solves == 5);  // one dual LP per spanning tree of C4, one for the warm start
  CHECK(rep.pivots > 0);
}

TEST_CASE("exact verification rejects subp misread as stp") {
  auto k4 = corpus_get("k4").graph;
  auto rep = verify_stp_exact(subp_ef(k4), k4, "k4");
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.checks.size() == 4);
  CHECK(rep.checks[0].pass);  // every tree embeds with s = 1
  CHECK_FALSE(rep.checks[1].pass);
  CHECK(rep.checks[1].counterexample.find("S={0,1,2}") != std::string::npos);
  CHECK(rep.subtour_lps == 7);  // stops at the first violated subtour
  CHECK(rep.checks[2].pass);
  CHECK_FALSE(rep.checks[3].pass);
  CHECK(rep.checks[3].counterexample.find("x(E)") != std::string::npos);
}

TEST_CASE("exact verification guards its input") {
  auto c4x = corpus_get("c4xc4").graph;  // n = 16
  CHECK_THROWS_AS(verify_stp_exact(martin_stp(c4x), c4x, "c4xc4"), std::invalid_argument);
  Multigraph two = new_multigraph(4, {{0, 1}, {2, 3}}, true);
  EfBundle b = subp_ef(two);
  CHECK_THROWS_AS(verify_stp_exact(b, two, "two"), std::invalid_argument);
}

TEST_CASE("sampled verification matches kruskal on martin and williams") {
  auto c4 = corpus_get("c4").graph;
  auto rep = verify_stp_sampled(martin_stp(c4), c4, "c4", 50, 7);
  CHECK(rep.pass);
  CHECK(rep.mode == "sampled");
  CHECK(rep.trials == 50);
  CHECK(rep.seed == 7);
  CHECK(rep.lp_solves == 50);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "sampled-mst");

  auto g = corpus_get("triangle_pendant").graph;
  auto pr = is_planar(g);
  CHECK(verify_stp_sampled(williams_stp({g, pr.rotation}), g, "tp", 25, 0).pass);
}

TEST_CASE("sampled verification is deterministic in the seed") {
  auto k4 = corpus_get("k4").graph;
  auto a = verify_stp_sampled(martin_stp(k4), k4, "k4", 20, 3);
  auto b2 = verify_stp_sampled(martin_stp(k4), k4, "k4", 20, 3);
  CHECK(a.pass == b2.pass);
  CHECK(a.lp_solves == b2.lp_solves);
  CHECK(a.pivots == b2.pivots);
  CHECK(a.checks[0].detail == b2.checks[0].detail);
}

TEST_CASE("sampled verification rejects subp misread as stp") {
  auto k4 = corpus_get("k4").graph;
  auto rep = verify_stp_sampled(subp_ef(k4), k4, "k4", 50, 1);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.checks[0].counterexample.empty());
  CHECK(rep.checks[0].counterexample.find("weights") != std::string::npos);
}

TEST_CASE("single-coefficient mutants are caught by the stp oracles") {
  auto k4 = corpus_get("k4").graph;
  auto base = martin_stp(k4).ef;
  int exact_fails = 0, sampled_fails = 0, distinct = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto mut = mutate_ef(base, seed);
    CHECK_FALSE(mut.description.empty());
    auto mb = without_lift(mut.ef, "mutant(" + mut.description + ")");
    auto er = verify_stp_exact(mb, k4, "k4");
    auto sr = verify_stp_sampled(mb, k4, "k4", 60, seed);
    if (!er.pass) {
      ++exact_fails;
      bool have_ce = false;
      for (const auto& c : er.checks) have_ce = have_ce || !c.counterexample.empty();
      CHECK(have_ce);
    }
    if (!sr.pass) ++sampled_fails;
    if (mut.description != mutate_ef(base, seed + 1000).description) ++distinct;
  }
  // most perturbations break the polytope; both oracles must notice
  CHECK(exact_fails >= 10);
  CHECK(sampled_fails >= 5);
  CHECK(distinct >= 20);
  // determinism: the same seed names the same mutation
  CHECK(mutate_ef(base, 5).description == mutate_ef(base, 5).description);
}

TEST_CASE("nesubp verification passes the planar construction on K2 and P3") {
  auto k2 = corpus_get("k2").graph;
  auto rep = verify_nesubp(nesubp_planar_ef(k2), k2, "k2", 0);
  CHECK(rep.pass);
  CHECK(rep.mode == "nesubp");
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].name == "vertex-feasibility");
  CHECK(rep.checks[0].detail.find("4 subgraph pairs") != std::string::npos);
  CHECK(rep.checks[1].name == "origin-excluded");
  CHECK(rep.checks[2].name == "random-directions");
  CHECK(rep.lp_solves == 1 + 200);
  CHECK(rep.lift_lp_solves == 4);

  auto p3 = corpus_get("p3").graph;
  CHECK(verify_nesubp(nesubp_planar_ef(p3), p3, "p3", 1).pass);
}

TEST_CASE("nesubp verification passes the deletion construction on C3") {
  auto c3 = corpus_get("c3").graph;
  Subgraph h = induced_subgraph(c3, {1, 2});
  EfBundle inner = nesubp_planar_ef(h.graph);
  inner.ef.x_labels = {"v1", "v2", "e1"};
  auto b = nesubp_deletion_ef(c3, {0}, inner);
  auto rep = verify_nesubp(b, c3, "c3", 0);
  CHECK(rep.pass);
  CHECK(rep.lift_lp_solves == 4);  // points avoiding vertex 0 use the inner lift
}

TEST_CASE("nesubp verification rejects subp misread as nesubp") {
  auto k2 = corpus_get("k2").graph;
  auto rep = verify_nesubp(subp_ef(k2), k2, "k2", 0);
  CHECK_FALSE(rep.pass);
  CHECK(rep.checks[0].pass);  // subp contains all nesubp vertices
  CHECK_FALSE(rep.checks[1].pass);
  CHECK(rep.checks[1].counterexample.find("empty subgraph") != std::string::npos);
  CHECK_FALSE(rep.checks[2].pass);  // all-negative directions expose the origin side
}

TEST_CASE("nesubp verification guards |V|") {
  auto k8 = corpus_get("k8").graph;
  CHECK_THROWS_AS(verify_nesubp(subp_ef(k8), k8, "k8", 0), std::invalid_argument);
}

TEST_CASE("nesubp mutants are caught") {
  auto k2 = corpus_get("k2").graph;
  auto base = nesubp_planar_ef(k2).ef;
  int fails = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto mut = mutate_ef(base, seed);
    if (!verify_nesubp(without_lift(mut.ef, "mutant"), k2, "k2", seed).pass) ++fails;
  }
  CHECK(fails >= 10);
}

TEST_CASE("bench emits the frozen torus-grid table") {
  auto csv = bench_family("torus-grid", 3, 4, {"martin", "genus"}, false);
  auto lines = csv_lines(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "family,k,n,m,g,x,martin,genus,build_ms");
  auto r3 = csv_cells(lines[1]);
  REQUIRE(r3.size() == 9);
  CHECK(r3[0] == "torus-grid");
  CHECK(r3[1] == "3");
  CHECK(r3[2] == "9");
  CHECK(r3[3] == "18");
  CHECK(r3[4] == "1");
  CHECK(r3[6] == "324");  // martin: 2nm = 4k^4
  CHECK(r3[8] == "0");    // no timing requested
  long x3 = std::stol(r3[5]);
  CHECK(x3 >= 1);
  CHECK(x3 <= 6);  // bfs-layers stays within 2k
  auto r4 = csv_cells(lines[2]);
  CHECK(r4[6] == "1024");
  CHECK(std::stol(r4[7]) > 0);
}

TEST_CASE("bench marks inapplicable methods and handles tiny instances") {
  auto csv = bench_family("complete", 1, 5, {"subp", "williams", "nesubp"}, false);
  auto lines = csv_lines(csv);
  REQUIRE(lines.size() == 6);
  auto r1 = csv_cells(lines[1]);  // K1
  CHECK(r1[7] == "0");            // williams of a single vertex
  auto r4 = csv_cells(lines[4]);  // K4
  CHECK(r4[6] == "22");
  CHECK(r4[7] == "24");
  CHECK(r4[8] == "59");
  CHECK(r4[5] == "-");            // genus did not run, so no apex count
  auto r5 = csv_cells(lines[5]);  // K5 is not planar
  CHECK(r5[7] == "-");
  CHECK(r5[8] == "-");
  CHECK(r5[2] == "5");
  CHECK(csv_cells(lines[3])[4] == "0");  // K3 genus 0
  CHECK(r5[4] == "1");                   // K5 genus 1
}

TEST_CASE("bench covers the planar grid with the genus pipeline") {
  auto csv = bench_family("planar-grid", 2, 3, {"williams", "genus"}, false);
  auto lines = csv_lines(csv);
  REQUIRE(lines.size() == 3);
  auto r2 = csv_cells(lines[1]);
  CHECK(r2[2] == "4");
  CHECK(r2[3] == "4");
  CHECK(r2[5] == "0");   // nothing deleted on a planar instance
  CHECK(r2[6] == "16");  // williams 4m
  CHECK(std::stol(r2[7]) > 0);
}

TEST_CASE("bench is deterministic without timing and validates its input") {
  CHECK(bench_family("torus-grid", 3, 3, {"martin"}, false) ==
        bench_family("torus-grid", 3, 3, {"martin"}, false));
  CHECK(csv_lines(bench_family("complete", 5, 4, {"subp"}, false)).size() == 1);
  CHECK_THROWS_AS(bench_family("hypercube", 1, 2, {"subp"}, false), std::invalid_argument);
  CHECK_THROWS_AS(bench_family("complete", 1, 2, {"simplex"}, false), std::invalid_argument);
}

TEST_CASE("mutating an empty formulation is rejected") {
  ExtForm empty;
  CHECK_THROWS_AS(mutate_ef(empty, 1), std::logic_error);
}
