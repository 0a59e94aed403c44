#include "prismcolor/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "prismcolor/dimacs.hpp"

namespace prismcolor {

namespace {

VertexSet set_at(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ParseError(std::string("missing array \"") + key + "\"", 0);
    }
    return VertexSet(j.at(key).get<std::vector<Vertex>>());
}

std::optional<Vertex> pivot_at(const nlohmann::json& j, const char* key) {
    auto ids = set_at(j, key);
    if (ids.size() > 1) throw ParseError(std::string("\"") + key + "\" holds more than one vertex", 0);
    if (ids.empty()) return std::nullopt;
    return ids.front();
}

nlohmann::json pivot_json(const std::optional<Vertex>& v) {
    return v ? nlohmann::json::array({*v}) : nlohmann::json::array();
}

}  // namespace

nlohmann::json to_json(const GoodPartition& p) {
    return {{"K1", p.k1.items()}, {"K2", p.k2.items()}, {"K3", p.k3.items()}, {"L", p.l.items()}, {"R", p.r.items()}};
}

nlohmann::json to_json(const Frame& f) {
    return {{"Q1", f.q1.items()}, {"Q3", f.q3.items()}, {"x", f.x},
            {"y", f.y},           {"C1", pivot_json(f.c1)}, {"C3", pivot_json(f.c3)}};
}

GoodPartition partition_from_json(const nlohmann::json& j) {
    try {
        return {set_at(j, "K1"), set_at(j, "K2"), set_at(j, "K3"), set_at(j, "L"), set_at(j, "R")};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition JSON: ") + e.what(), 0);
    }
}

Frame frame_from_json(const nlohmann::json& j) {
    try {
        return {set_at(j, "Q1"), set_at(j, "Q3"), j.at("x").get<Vertex>(), j.at("y").get<Vertex>(),
                pivot_at(j, "C1"), pivot_at(j, "C3")};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("frame JSON: ") + e.what(), 0);
    }
}

void write_coloring(std::ostream& out, const PartialColoring& c) {
    for (Vertex v = 0; v < c.size(); ++v) {
        if (c.has(v)) out << "v " << v + 1 << ' ' << c.at(v) << '\n';
    }
}

std::string coloring_to_text(const PartialColoring& c) {
    std::ostringstream os;
    write_coloring(os, c);
    return os.str();
}

PartialColoring read_coloring(std::istream& in, int n) {
    PartialColoring c(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        long v = 0;
        long col = 0;
        if (tag != "v" || !(ls >> v >> col)) throw ParseError("expected 'v <vertex> <color>'", lineno);
        if (v < 1 || v > n) throw ParseError("vertex out of range 1.." + std::to_string(n), lineno);
        if (col < 1) throw ParseError("colors start at 1", lineno);
        if (c.has(static_cast<Vertex>(v - 1))) throw ParseError("vertex " + std::to_string(v) + " colored twice", lineno);
        c.set(static_cast<Vertex>(v - 1), static_cast<Color>(col));
    }
    return c;
}

nlohmann::json coloring_to_json(const PartialColoring& c) { return {{"colors", c.raw()}}; }

PartialColoring coloring_from_json(const nlohmann::json& j) {
    try {
        return PartialColoring(j.at("colors").get<std::vector<Color>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring JSON: ") + e.what(), 0);
    }
}

}  // namespace prismcolor
