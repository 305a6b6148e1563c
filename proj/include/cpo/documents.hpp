#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "cpo/classifier.hpp"
#include "cpo/cohomology.hpp"
#include "cpo/exact_qix.hpp"

// JSON documents exchanged by the CLI and the C API, plus DOT and plain-text
// rendering. Documents are parsed into validated values before use.
namespace cpo::doc {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxGroupOrder = 64;

/// Parses JSON text; throws Error(Parse) on malformed input.
Json parse_json(std::string_view text);
/// Canonical text: objects one key per line, arrays without objects inline.
std::string to_text(const Json& j);

// Setup document: {"group": {"order", "names", "table"},
//                  "ideals": {"count", "action"}}
GaloisSetup parse_setup(const Json& j);
Json emit_setup(const GaloisSetup& setup);

// Cocycle documents: {"model": "valuation", "values": n x n x r integers}
// or {"model": "qix", "values": 2 x 2 strings}.
struct ParsedCocycle {
  ValCocycle valuation;
  std::optional<qix::ExactCocycle> exact;
};
ParsedCocycle parse_cocycle(const Json& j, const SetupPtr& setup);
Json emit_cocycle(const ValCocycle& f);
Json emit_exact_cocycle(const qix::ExactCocycle& f);

// Witness documents: {"model": "valuation-witness", "values": n x r} or
// {"model": "qix-witness", "values": [c_1, c_sigma] as strings}.
using Witness = std::variant<CoboundaryWitness, std::array<qix::QiRatFunc, 2>>;
Witness parse_witness(const Json& j, const GaloisSetup& setup);
Json emit_witness(const CoboundaryWitness& w);
Json emit_exact_witness(const std::array<qix::QiRatFunc, 2>& c);

Json emit_report(const ClassificationReport& rep);
std::string report_summary(const ClassificationReport& rep, const GaloisSetup& setup);

/// Hasse diagram of the graph of f; byte-stable for a fixed input.
std::string graph_dot(const GraphOfF& graph, const GaloisSetup& setup);

}  // namespace cpo::doc
