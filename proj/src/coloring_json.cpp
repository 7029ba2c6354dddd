#include "acyclic/coloring_json.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <string>

namespace acyclic {

using nlohmann::json;

json coloring_to_json(const Graph& g, const PartialEdgeColoring& c)
{
    json edges = json::array();
    for (EdgeId e : g.edge_ids()) {
        const auto& [u, v] = g.endpoints(e);
        edges.push_back(json::array({u, v, e < c.num_edges() ? c.color(e) : kNoColor}));
    }
    return json{
        {"schema", kSchemaVersion},
        {"n", g.num_vertices()},
        {"palette", c.palette_size()},
        {"edges", std::move(edges)},
    };
}

namespace {

struct RawEntry {
    Vertex u;
    Vertex v;
    Color color;
};

std::vector<RawEntry> parse_entries(const json& j, int& palette, int& n)
{
    if (!j.is_object() || !j.contains("palette") || !j.contains("edges")) {
        throw Error(ErrorCode::ParseError, "coloring JSON needs \"palette\" and \"edges\"");
    }
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
        throw Error(ErrorCode::ParseError, "unsupported coloring schema");
    }
    const auto& jp = j.at("palette");
    if (!jp.is_number_integer() || jp.get<long long>() < 0 || jp.get<long long>() > 1'000'000) {
        throw Error(ErrorCode::ParseError, "palette must be a non-negative integer");
    }
    palette = jp.get<int>();
    std::vector<RawEntry> out;
    int max_id = -1;
    const auto& je = j.at("edges");
    if (!je.is_array()) {
        throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    }
    for (const auto& entry : je) {
        if (!entry.is_array() || entry.size() != 3
            || !std::all_of(entry.begin(), entry.end(),
                [](const json& x) { return x.is_number_integer() && x.get<long long>() >= 0; })) {
            throw Error(ErrorCode::ParseError, "edge entries must be [u, v, color] with u, v, color >= 0");
        }
        RawEntry r{entry[0].get<Vertex>(), entry[1].get<Vertex>(), entry[2].get<Color>()};
        if (r.color > palette) {
            throw Error(ErrorCode::ParseError,
                "color " + std::to_string(r.color) + " exceeds palette " + std::to_string(palette));
        }
        max_id = std::max({max_id, r.u, r.v});
        out.push_back(r);
    }
    n = max_id + 1;
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<int>() < n) {
            throw Error(ErrorCode::ParseError, "\"n\" smaller than the largest vertex id");
        }
        n = j.at("n").get<int>();
    }
    return out;
}

} // namespace

LoadedColoring coloring_from_json(const json& j)
{
    int palette = 0;
    int n = 0;
    const auto entries = parse_entries(j, palette, n);
    LoadedColoring out;
    try {
        out.graph = Graph(n);
        for (const auto& r : entries) {
            out.graph.add_edge(r.u, r.v);
        }
    } catch (const Error& err) {
        throw Error(ErrorCode::ParseError, err.what());
    }
    out.coloring = PartialEdgeColoring(out.graph, palette);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        out.coloring.force_color(static_cast<EdgeId>(e), entries[e].color);
    }
    return out;
}

PartialEdgeColoring coloring_from_json(const json& j, const Graph& g)
{
    int palette = 0;
    int n = 0;
    const auto entries = parse_entries(j, palette, n);
    PartialEdgeColoring c(g, palette);
    for (const auto& r : entries) {
        const auto e = g.find_edge(r.u, r.v);
        if (!e) {
            throw Error(ErrorCode::ParseError,
                "coloring names (" + std::to_string(r.u) + ", " + std::to_string(r.v)
                    + ") which is not an edge of the graph");
        }
        c.force_color(*e, r.color);
    }
    return c;
}

json report_to_json(const ColoringReport& r)
{
    json j{
        {"schema", kSchemaVersion},
        {"edges", r.num_edges},
        {"colored", r.colored_edges},
        {"total", r.total},
        {"proper", r.proper},
        {"acyclic", r.acyclic},
        {"max_bicolored_degree", r.max_bicolored_degree},
        {"palette", r.palette},
        {"colors_used", r.colors_used},
        {"within_bound", r.within_bound},
        {"ok", r.ok()},
    };
    j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    if (r.witness) {
        j["witness"] = {
            {"colors", {r.witness->alpha, r.witness->beta}},
            {"vertices", r.witness->vertices},
            {"edges", r.witness->edges},
        };
    }
    if (r.conflict) {
        j["conflict"] = {{"vertex", r.conflict->first}, {"color", r.conflict->second}};
    }
    return j;
}

} // namespace acyclic
