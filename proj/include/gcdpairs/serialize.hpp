#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcdpairs/graph.hpp"
#include "gcdpairs/pairs.hpp"
#include "gcdpairs/verify.hpp"

/// JSON documents emitted by the command-line tool. Every document carries
/// "schema_version"; readers reject any other version. Arrays are sorted, so
/// printing is deterministic and parse(print(x)) == x.
namespace gcdpairs::serialize {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Thrown when a document is malformed or has the wrong schema version.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const pairs::PairSet& set);
pairs::PairSet pair_set_from_json(const Json& doc);

Json to_json(const pairs::CountResult& result);
pairs::CountResult count_result_from_json(const Json& doc);

struct GraphDocument {
    Natural n = 1;
    std::vector<graph::Edge> edges;
    std::vector<graph::Vertex> loops;
    std::optional<graph::Analysis> invariants;

    static GraphDocument of(const graph::GcdGraph& g, std::optional<graph::Analysis> invariants = std::nullopt);
    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

Json to_json(const GraphDocument& doc);
GraphDocument graph_document_from_json(const Json& doc);

Json to_json(const verify::Report& report);
verify::Report report_from_json(const Json& doc);

/// Two-space indented text with a trailing newline.
std::string print(const Json& doc);
Json parse(const std::string& text);

}  // namespace gcdpairs::serialize
