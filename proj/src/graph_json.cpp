#include "neron/graph_json.hpp"

#include "neron/errors.hpp"
#include "neron/report_json.hpp"

#include <json.hpp>

#include <initializer_list>
#include <limits>
#include <map>

namespace neron {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InvalidGraph("graph format: " + msg); }

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || key == a;
        if (!ok)
            fail("unknown key '" + key + "' in " + where);
    }
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("missing key '" + std::string(key) + "' in " + where);
    return *it;
}

std::uint32_t non_negative(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        fail(what + " must be an integer");
    if (v.is_number_unsigned()) {
        auto u = v.get<std::uint64_t>();
        if (u > std::numeric_limits<std::uint32_t>::max())
            fail(what + " is too large");
        return static_cast<std::uint32_t>(u);
    }
    auto s = v.get<std::int64_t>();
    if (s < 0)
        fail(what + " must be non-negative");
    if (s > std::numeric_limits<std::uint32_t>::max())
        fail(what + " is too large");
    return static_cast<std::uint32_t>(s);
}

std::string string_id(const json& v, const std::string& what) {
    if (!v.is_string())
        fail(what + " must be a string");
    return v.get<std::string>();
}

} // namespace

LabelledGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("top level must be an object");
    reject_unknown_keys(doc, {"num_params", "vertices", "edges", "trace"}, "graph");

    LabelledGraph g;
    const json& np = require_key(doc, "num_params", "graph");
    g.num_params = non_negative(np, "num_params");
    if (g.num_params == 0)
        fail("num_params must be at least 1");

    const json& vertices = require_key(doc, "vertices", "graph");
    if (!vertices.is_array())
        fail("'vertices' must be an array");
    std::map<std::string, std::size_t> index;
    for (const json& v : vertices) {
        if (!v.is_object())
            fail("vertex entries must be objects");
        reject_unknown_keys(v, {"id", "genus"}, "vertex");
        Vertex vx;
        vx.id = string_id(require_key(v, "id", "vertex"), "vertex id");
        if (auto it = v.find("genus"); it != v.end())
            vx.genus = non_negative(*it, "genus of vertex '" + vx.id + "'");
        if (!index.emplace(vx.id, g.vertices.size()).second)
            fail("duplicate vertex id '" + vx.id + "'");
        g.vertices.push_back(std::move(vx));
    }

    const json& edges = require_key(doc, "edges", "graph");
    if (!edges.is_array())
        fail("'edges' must be an array");
    for (const json& e : edges) {
        if (!e.is_object())
            fail("edge entries must be objects");
        reject_unknown_keys(e, {"id", "ends", "label"}, "edge");
        Edge ed;
        ed.id = string_id(require_key(e, "id", "edge"), "edge id");
        const json& ends = require_key(e, "ends", "edge '" + ed.id + "'");
        if (!ends.is_array() || ends.size() != 2)
            fail("'ends' of edge '" + ed.id + "' must be a pair");
        for (int k = 0; k < 2; ++k) {
            const std::string vid = string_id(ends[k], "endpoint of edge '" + ed.id + "'");
            auto it = index.find(vid);
            if (it == index.end())
                fail("edge '" + ed.id + "' refers to unknown vertex '" + vid + "'");
            (k == 0 ? ed.tail : ed.head) = it->second;
        }
        const json& label = require_key(e, "label", "edge '" + ed.id + "'");
        if (!label.is_array())
            fail("label of edge '" + ed.id + "' must be an array");
        std::vector<std::uint32_t> entries;
        for (const json& m : label)
            entries.push_back(non_negative(m, "label entry of edge '" + ed.id + "'"));
        ed.label = ExponentVector(std::move(entries));
        g.edges.push_back(std::move(ed));
    }
    return g;
}

LabelledGraph load_graph(std::string_view text) {
    LabelledGraph g = parse_graph(text);
    require_valid(g);
    return g;
}

std::string print_graph(const LabelledGraph& graph) { return to_json(graph).dump(2) + "\n"; }

} // namespace neron
