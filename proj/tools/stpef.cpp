// stpef: build, verify, and benchmark extended formulations of spanning tree
// polytopes. Exit codes: 0 success (and verification passed), 1 verification
// ran and failed, 2 error.
#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stpef/jsonio.hpp"
#include "stpef/planar.hpp"

namespace {

using namespace stpef;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in vertex list \"" + s + "\"");
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad vertex \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open " + out_path + " for writing");
    f << text;
  }
}

struct BuildArgs {
  std::string input, method, out, apex;
  bool have_apex = false;
  std::string planarizer = "bfs-layers";
  int genus = 0;
  std::uint64_t seed = 0;
};

int run_build(const BuildArgs& a) {
  GraphFile gf = graph_from_json(read_json_file(a.input));
  const Multigraph& g = gf.graph;
  std::optional<std::vector<int>> apex;
  if (a.have_apex) apex = parse_int_list(a.apex);

  EfBundle bundle;
  SizeReport report;
  if (a.method == "martin") {
    bundle = martin_stp(g);
  } else if (a.method == "williams") {
    EmbeddedGraph h{g, {}};
    if (gf.rotation) {
      h.rotation = *gf.rotation;
    } else {
      auto pr = is_planar(g);
      if (!pr.planar)
        throw std::invalid_argument("williams needs a planar graph (" + pr.witness + ")");
      h.rotation = pr.rotation;
    }
    bundle = williams_stp(h);
  } else if (a.method == "subp") {
    bundle = subp_ef(g);
  } else if (a.method == "nesubp") {
    bundle = nesubp_planar_ef(g);
  } else if (a.method == "genus") {
    auto r = bounded_genus_stp(g, a.genus, apex, planarizer_from_name(a.planarizer), a.seed);
    bundle = std::move(r.bundle);
    report = std::move(r.report);
  } else if (a.method == "kapex") {
    auto r = kapex_stp(g, apex.value_or(std::vector<int>{}));
    bundle = std::move(r.bundle);
    report = std::move(r.report);
  } else {
    throw std::invalid_argument("unknown method \"" + a.method + "\"");
  }
  if (a.method != "genus" && a.method != "kapex") {
    report.stages = bundle.stages;
    report.warnings = bundle.warnings;
  }
  write_json_file(a.out, ef_to_json(bundle.ef, bundle.provenance));
  std::cout << canonical_dump(size_report_to_json(report));
  return 0;
}

struct VerifyArgs {
  std::string ef, graph, mode = "exact", out, id;
  long trials = 100;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
  EfFile ef = ef_from_json(read_json_file(a.ef));
  GraphFile gf = graph_from_json(read_json_file(a.graph));
  EfBundle b;
  b.ef = std::move(ef.ef);
  b.provenance = std::move(ef.provenance);  // no lift: the verifiers pin LPs
  std::string id = a.id.empty() ? std::filesystem::path(a.graph).stem().string() : a.id;

  VerificationReport rep;
  if (a.mode == "exact") {
    rep = verify_stp_exact(b, gf.graph, id);
  } else if (a.mode == "sampled") {
    rep = verify_stp_sampled(b, gf.graph, id, a.trials, a.seed);
  } else if (a.mode == "nesubp") {
    rep = verify_nesubp(b, gf.graph, id, a.seed);
  } else {
    throw std::invalid_argument("unknown mode \"" + a.mode + "\"");
  }
  emit(a.out, canonical_dump(report_to_json(rep)));
  return rep.pass ? 0 : 1;
}

struct BenchArgs {
  std::string family, methods = "subp,martin,williams,nesubp,genus", out;
  int kmin = 0, kmax = -1;
  bool no_timing = false;
};

int run_bench(const BenchArgs& a) {
  emit(a.out, bench_family(a.family, a.kmin, a.kmax, split_csv(a.methods), !a.no_timing));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended formulations of spanning tree polytopes"};
  app.require_subcommand(1);

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "construct a formulation and report its size");
  build->add_option("--input", ba.input, "graph json file")->required();
  build
      ->add_option("--method", ba.method,
                   "martin | williams | subp | nesubp | genus | kapex")
      ->required();
  build->add_option("--out", ba.out, "formulation json output path")->required();
  auto* apex_opt =
      build->add_option("--apex-set", ba.apex, "comma-separated vertices to delete");
  build->add_option("--planarizer", ba.planarizer, "greedy-degree | bfs-layers");
  build->add_option("--genus", ba.genus, "genus hint for the planarizer");
  build->add_option("--seed", ba.seed, "planarizer seed");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "certify a formulation against a graph");
  verify->add_option("--ef", va.ef, "formulation json file")->required();
  verify->add_option("--graph", va.graph, "graph json file")->required();
  verify->add_option("--mode", va.mode, "exact | sampled | nesubp");
  verify->add_option("--trials", va.trials, "sampled-mode trial count");
  verify->add_option("--seed", va.seed, "rng seed");
  verify->add_option("--out", va.out, "report json output path (default stdout)");
  verify->add_option("--id", va.id, "graph id for the report (default: input stem)");

  BenchArgs na;
  auto* bench = app.add_subcommand("bench", "size table over a graph family (csv)");
  bench->add_option("--family", na.family, "torus-grid | planar-grid | complete")->required();
  bench->add_option("--kmin", na.kmin, "first k")->required();
  bench->add_option("--kmax", na.kmax, "last k")->required();
  bench->add_option("--methods", na.methods, "comma-separated method columns");
  bench->add_option("--out", na.out, "csv output path (default stdout)");
  bench->add_flag("--no-timing", na.no_timing, "report build_ms as 0 (reproducible output)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (build->parsed()) {
      ba.have_apex = apex_opt->count() > 0;
      return run_build(ba);
    }
    if (verify->parsed()) return run_verify(va);
    return run_bench(na);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
