#include "gcdpairs/serialize.hpp"

namespace gcdpairs::serialize {

namespace {

void check_version(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("expected a JSON object");
    if (!doc.contains("schema_version") || doc.at("schema_version") != kSchemaVersion)
        throw SchemaError("unsupported schema_version");
}

template <class T>
Json optional_value(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> read_optional(const Json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

Json analysis_json(const graph::Analysis& a) {
    Json inv = Json::object();
    inv["connected"] = a.connected;
    inv["gamma"] = optional_value(a.gamma);
    inv["triangle"] = optional_value(a.triangle);
    inv["traceable"] = a.traceable;
    inv["hamiltonian"] = a.hamiltonian;
    inv["clique_number"] = optional_value(a.clique_number);
    inv["chromatic_number"] = optional_value(a.chromatic_number);
    inv["planar"] = a.planar;
    return inv;
}

graph::Analysis analysis_from(const Json& inv, const Json& notes) {
    graph::Analysis a;
    a.connected = inv.at("connected").get<bool>();
    a.gamma = read_optional<Natural>(inv, "gamma");
    a.triangle = read_optional<std::vector<graph::Vertex>>(inv, "triangle");
    a.traceable = inv.at("traceable").get<bool>();
    a.hamiltonian = inv.at("hamiltonian").get<bool>();
    a.clique_number = read_optional<Natural>(inv, "clique_number");
    a.chromatic_number = read_optional<Natural>(inv, "chromatic_number");
    a.planar = inv.at("planar").get<bool>();
    a.notes = notes.get<std::vector<std::string>>();
    return a;
}

template <class F>
auto guarded(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Json::exception& e) {
        throw SchemaError(e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace

Json to_json(const pairs::PairSet& set) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = set.modulus();
    doc["label"] = set.label();
    if (set.subset()) doc["subset"] = *set.subset();
    Json list = Json::array();
    for (const auto& e : set.entries()) list.push_back({e.a, e.b});
    doc["pairs"] = std::move(list);
    doc["count"] = set.size();
    return doc;
}

pairs::PairSet pair_set_from_json(const Json& doc) {
    return guarded([&] {
        check_version(doc);
        std::vector<pairs::PairSet::Entry> entries;
        for (const auto& p : doc.at("pairs")) {
            if (!p.is_array() || p.size() != 2) throw SchemaError("pair must be [a, b]");
            entries.push_back({p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>()});
        }
        if (doc.at("count").get<std::size_t>() != entries.size()) throw SchemaError("count does not match pairs");
        std::optional<std::vector<Natural>> subset;
        if (doc.contains("subset")) subset = doc.at("subset").get<std::vector<Natural>>();
        return pairs::PairSet::from_entries(doc.at("n").get<Natural>(), doc.at("label").get<std::string>(),
                                            std::move(subset), std::move(entries));
    });
}

Json to_json(const pairs::CountResult& result) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["value"] = result.value;
    doc["kind"] = std::string(pairs::to_string(result.kind));
    doc["provenance"] = result.provenance;
    return doc;
}

pairs::CountResult count_result_from_json(const Json& doc) {
    return guarded([&] {
        check_version(doc);
        pairs::CountResult r;
        r.value = doc.at("value").get<Natural>();
        const auto kind = doc.at("kind").get<std::string>();
        bool known = false;
        for (auto k : {pairs::CountKind::Exact, pairs::CountKind::StrictLowerBound, pairs::CountKind::LowerBound})
            if (pairs::to_string(k) == kind) r.kind = k, known = true;
        if (!known) throw SchemaError("unknown count kind '" + kind + "'");
        r.provenance = doc.at("provenance").get<std::string>();
        return r;
    });
}

GraphDocument GraphDocument::of(const graph::GcdGraph& g, std::optional<graph::Analysis> invariants) {
    return {g.order(), g.simple_edges(), g.loops(), std::move(invariants)};
}

Json to_json(const GraphDocument& doc) {
    Json out = Json::object();
    out["schema_version"] = kSchemaVersion;
    out["n"] = doc.n;
    Json edges = Json::array();
    for (const auto& e : doc.edges) edges.push_back({e.a, e.b});
    out["edges"] = std::move(edges);
    out["loops"] = doc.loops;
    if (doc.invariants) {
        out["invariants"] = analysis_json(*doc.invariants);
        out["notes"] = doc.invariants->notes;
    }
    return out;
}

GraphDocument graph_document_from_json(const Json& doc) {
    return guarded([&] {
        check_version(doc);
        GraphDocument out;
        out.n = doc.at("n").get<Natural>();
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw SchemaError("edge must be [a, b]");
            out.edges.push_back({e[0].get<graph::Vertex>(), e[1].get<graph::Vertex>()});
        }
        out.loops = doc.at("loops").get<std::vector<graph::Vertex>>();
        if (doc.contains("invariants"))
            out.invariants = analysis_from(doc.at("invariants"), doc.value("notes", Json::array()));
        return out;
    });
}

Json to_json(const verify::Report& report) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json j = Json::object();
        j["id"] = e.id;
        j["statement"] = e.statement;
        j["range"] = e.range;
        j["status"] = std::string(verify::to_string(e.status));
        j["details"] = e.details;
        if (e.claimed) j["claimed"] = *e.claimed;
        if (e.observed) j["observed"] = *e.observed;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    doc["failures"] = report.has_failures();
    return doc;
}

verify::Report report_from_json(const Json& doc) {
    return guarded([&] {
        check_version(doc);
        verify::Report report;
        for (const auto& j : doc.at("entries")) {
            verify::Entry e;
            e.id = j.at("id").get<std::string>();
            e.statement = j.at("statement").get<std::string>();
            e.range = j.at("range").get<std::string>();
            auto status = verify::parse_status(j.at("status").get<std::string>());
            if (!status) throw SchemaError("unknown status");
            e.status = *status;
            e.details = j.at("details").get<std::string>();
            if (j.contains("claimed")) e.claimed = j.at("claimed").get<std::string>();
            if (j.contains("observed")) e.observed = j.at("observed").get<std::string>();
            report.entries.push_back(std::move(e));
        }
        return report;
    });
}

std::string print(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace gcdpairs::serialize
