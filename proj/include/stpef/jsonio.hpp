#ifndef STPEF_JSONIO_HPP
#define STPEF_JSONIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "stpef/extform.hpp"
#include "stpef/formulations.hpp"
#include "stpef/surface.hpp"
#include "stpef/verify.hpp"

namespace stpef {

// On-disk schemas. Every document carries a "schema" tag; loaders reject
// unknown tags, unknown fields, and malformed values with
// std::invalid_argument. Rationals travel as canonical "p" or "p/q" strings.
inline constexpr const char* kGraphSchema = "stpef-graph-v1";
inline constexpr const char* kEfSchema = "stpef-ef-v1";
inline constexpr const char* kVerifySchema = "stpef-verify-v1";
inline constexpr const char* kSizeSchema = "stpef-size-v1";

struct GraphFile {
  Multigraph graph;
  std::optional<RotationSystem> rotation;  // validated against the graph
};

nlohmann::json graph_to_json(const Multigraph& g,
                             const std::optional<RotationSystem>& rotation = std::nullopt);
GraphFile graph_from_json(const nlohmann::json& j);

struct EfFile {
  ExtForm ef;  // validated
  std::string provenance;
};

nlohmann::json ef_to_json(const ExtForm& ef, const std::string& provenance);
EfFile ef_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& rep);
nlohmann::json size_report_to_json(const SizeReport& rep);

// Canonical text form: two-space indent, keys in nlohmann's sorted order,
// trailing newline. Equal documents dump to identical bytes.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace stpef

#endif
