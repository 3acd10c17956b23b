#include "ramsey/coloring_json.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace ramsey {

namespace {

constexpr std::array<std::string_view, 5> header_fields = {"theorem", "params", "targets", "claimed_value",
                                                          "verification"};

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ParseError("field '" + field + "': " + what);
}

int require_int(const ordered_json& obj, const std::string& key, const std::string& path)
{
    if (!obj.contains(key)) {
        fail(path + key, "missing");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        fail(path + key, "expected an integer");
    }
    return v.get<int>();
}

Host parse_host(const ordered_json& h)
{
    if (!h.is_object()) {
        fail("host", "expected an object");
    }
    if (!h.contains("kind") || !h.at("kind").is_string()) {
        fail("host.kind", "expected \"complete\" or \"bipartite\"");
    }
    const auto kind = h.at("kind").get<std::string>();
    try {
        if (kind == "complete") {
            for (const auto& [key, _] : h.items()) {
                if (key != "kind" && key != "n") {
                    fail("host." + key, "unexpected for a complete host");
                }
            }
            return Host::complete(require_int(h, "n", "host."));
        }
        if (kind == "bipartite") {
            for (const auto& [key, _] : h.items()) {
                if (key != "kind" && key != "a" && key != "b") {
                    fail("host." + key, "unexpected for a bipartite host");
                }
            }
            return Host::complete_bipartite(require_int(h, "a", "host."), require_int(h, "b", "host."));
        }
    } catch (const InvalidInput& e) {
        fail("host", e.what());
    }
    fail("host.kind", "unknown kind \"" + kind + "\"");
}

} // namespace

ordered_json coloring_to_json(const EdgeColoring& coloring)
{
    const Host& host = coloring.host();
    ordered_json h;
    if (host.kind() == HostKind::Complete) {
        h["kind"] = "complete";
        h["n"] = host.left();
    } else {
        h["kind"] = "bipartite";
        h["a"] = host.left();
        h["b"] = host.right();
    }
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < host.edge_count(); ++i) {
        const Edge& e = host.edges()[i];
        edges.push_back({e.u, e.v, coloring.color_at(i)});
    }
    ordered_json doc;
    doc["host"] = std::move(h);
    doc["k"] = coloring.colors();
    doc["edges"] = std::move(edges);
    return doc;
}

std::string coloring_to_text(const EdgeColoring& coloring)
{
    return coloring_to_json(coloring).dump();
}

EdgeColoring coloring_from_json(const ordered_json& doc)
{
    if (!doc.is_object()) {
        throw ParseError("document: expected a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        const bool known = key == "host" || key == "k" || key == "edges" ||
                           std::find(header_fields.begin(), header_fields.end(), key) != header_fields.end();
        if (!known) {
            fail(key, "unexpected field");
        }
    }
    if (!doc.contains("host")) {
        fail("host", "missing");
    }
    Host host = parse_host(doc.at("host"));
    const int k = require_int(doc, "k", "");
    if (k < 1) {
        fail("k", "must be at least 1");
    }
    if (!doc.contains("edges") || !doc.at("edges").is_array()) {
        fail("edges", "expected an array");
    }
    const auto& edges = doc.at("edges");
    if (edges.size() != host.edge_count()) {
        fail("edges", "host " + host.name() + " has " + std::to_string(host.edge_count()) + " edges, found " +
                          std::to_string(edges.size()));
    }
    std::vector<Color> colors;
    colors.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        const auto& item = edges[i];
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
            !item[2].is_number_integer()) {
            fail(path, "expected [u,v,color] integers");
        }
        const Edge& expected = host.edges()[i];
        const int u = item[0].get<int>();
        const int v = item[1].get<int>();
        if (u != expected.u || v != expected.v) {
            fail(path, "expected edge [" + std::to_string(expected.u) + "," + std::to_string(expected.v) +
                           "] in canonical order, found [" + std::to_string(u) + "," + std::to_string(v) + "]");
        }
        const int c = item[2].get<int>();
        if (c < 1 || c > k) {
            fail(path, "color " + std::to_string(c) + " outside 1.." + std::to_string(k));
        }
        colors.push_back(c);
    }
    return EdgeColoring(std::move(host), k, std::move(colors));
}

ordered_json parse_json_text(std::string_view text)
{
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": malformed JSON");
    }
}

EdgeColoring coloring_from_text(std::string_view text)
{
    return coloring_from_json(parse_json_text(text));
}

} // namespace ramsey
