#include "stpef/jsonio.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace stpef {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("jsonio: " + what); }

void require_keys(const json& j, const char* where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) bad(std::string(where) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key()))
      bad(std::string("unknown field \"") + item.key() + "\" in " + where);
  }
  for (const auto& key : required)
    if (!j.contains(key)) bad(std::string("missing field \"") + key + "\" in " + where);
}

void require_schema(const json& j, const char* where, const char* tag) {
  if (!j.at("schema").is_string() || j.at("schema").get<std::string>() != tag)
    bad(std::string(where) + " must carry schema \"" + tag + "\"");
}

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string get_str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json row_to_json(const SparseRow& r) {
  json terms = json::array();
  for (const auto& [col, coef] : r.terms) terms.push_back(json::array({col, rat_str(coef)}));
  return json{{"terms", std::move(terms)}, {"rhs", rat_str(r.rhs)}};
}

SparseRow row_from_json(const json& j, const char* where) {
  require_keys(j, where, {"terms", "rhs"});
  if (!j.at("terms").is_array()) bad(std::string(where) + ".terms must be an array");
  std::vector<std::pair<int, Rat>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) bad(std::string(where) + " term must be [col, coeff]");
    terms.push_back({get_int(t[0], "term column"), rat_parse(get_str(t[1], "term coefficient"))});
  }
  return make_row(std::move(terms), rat_parse(get_str(j.at("rhs"), "rhs")));
}

}  // namespace

nlohmann::json graph_to_json(const Multigraph& g,
                             const std::optional<RotationSystem>& rotation) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  json j{{"schema", kGraphSchema}, {"n", g.n}, {"edges", std::move(edges)},
         {"simple", g.simple}};
  if (rotation) {
    validate_rotation(g, *rotation);
    j["rotation"] = rotation->rot;
  }
  return j;
}

GraphFile graph_from_json(const nlohmann::json& j) {
  require_keys(j, "graph", {"schema", "n", "edges", "simple"}, {"rotation"});
  require_schema(j, "graph", kGraphSchema);
  int n = get_int(j.at("n"), "n");
  if (!j.at("edges").is_array()) bad("edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be [u, v]");
    edges.push_back({get_int(e[0], "edge endpoint"), get_int(e[1], "edge endpoint")});
  }
  if (!j.at("simple").is_boolean()) bad("simple must be a boolean");
  GraphFile out;
  out.graph = new_multigraph(n, std::move(edges), j.at("simple").get<bool>());
  if (j.contains("rotation")) {
    if (!j.at("rotation").is_array()) bad("rotation must be an array of dart lists");
    RotationSystem r;
    for (const auto& at : j.at("rotation")) {
      if (!at.is_array()) bad("rotation entries must be arrays");
      std::vector<Dart> darts;
      for (const auto& d : at) darts.push_back(get_int(d, "dart"));
      r.rot.push_back(std::move(darts));
    }
    validate_rotation(out.graph, r);
    out.rotation = std::move(r);
  }
  return out;
}

nlohmann::json ef_to_json(const ExtForm& ef, const std::string& provenance) {
  json ineqs = json::array(), eqs = json::array();
  for (const auto& r : ef.ineqs) ineqs.push_back(row_to_json(r));
  for (const auto& r : ef.eqs) eqs.push_back(row_to_json(r));
  return json{{"schema", kEfSchema},    {"x_labels", ef.x_labels},
              {"aux_count", ef.aux_count}, {"ineqs", std::move(ineqs)},
              {"eqs", std::move(eqs)},  {"provenance", provenance}};
}

EfFile ef_from_json(const nlohmann::json& j) {
  require_keys(j, "formulation",
               {"schema", "x_labels", "aux_count", "ineqs", "eqs", "provenance"});
  require_schema(j, "formulation", kEfSchema);
  EfFile out;
  if (!j.at("x_labels").is_array()) bad("x_labels must be an array");
  for (const auto& l : j.at("x_labels")) out.ef.x_labels.push_back(get_str(l, "x label"));
  out.ef.aux_count = get_int(j.at("aux_count"), "aux_count");
  if (out.ef.aux_count < 0) bad("aux_count must be nonnegative");
  for (const char* family : {"ineqs", "eqs"}) {
    if (!j.at(family).is_array()) bad(std::string(family) + " must be an array");
    for (const auto& r : j.at(family))
      (family == std::string("ineqs") ? out.ef.ineqs : out.ef.eqs)
          .push_back(row_from_json(r, family));
  }
  out.provenance = get_str(j.at("provenance"), "provenance");
  validate_ef(out.ef);
  return out;
}

nlohmann::json report_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"detail", c.detail},
                          {"counterexample", c.counterexample}});
  return json{{"schema", kVerifySchema},
              {"graph_id", rep.graph_id},
              {"construction", rep.construction},
              {"mode", rep.mode},
              {"seed", rep.seed},
              {"trials", rep.trials},
              {"inequalities", rep.inequalities},
              {"equalities", rep.equalities},
              {"aux", rep.aux},
              {"checks", std::move(checks)},
              {"lp_solves", rep.lp_solves},
              {"lift_lp_solves", rep.lift_lp_solves},
              {"pivots", rep.pivots},
              {"subtour_lps", rep.subtour_lps},
              {"timing_ms", rep.timing_ms},
              {"pass", rep.pass}};
}

nlohmann::json size_report_to_json(const SizeReport& rep) {
  json stages = json::array();
  for (const auto& s : rep.stages)
    stages.push_back(json{{"name", s.name},
                          {"inequalities", s.inequalities},
                          {"equalities", s.equalities},
                          {"aux", s.aux},
                          {"formula", s.formula}});
  return json{{"schema", kSizeSchema},
              {"stages", std::move(stages)},
              {"deleted_vertices", rep.deleted_vertices},
              {"genus_hint", rep.genus_hint},
              {"apex_k", rep.apex_k},
              {"edge_bound_ok", rep.edge_bound_ok},
              {"warnings", rep.warnings},
              {"final_size", rep.final_size()}};
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot open " + path + " for writing");
  out << canonical_dump(j);
  if (!out) bad("write to " + path + " failed");
}

}  // namespace stpef
