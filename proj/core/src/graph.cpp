#include "tsep/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tsep/error.hpp"

namespace tsep {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool has_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Accumulates names/edges before the universe size is known.
struct builder {
    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> index;
    std::vector<std::pair<std::size_t, std::size_t>> edge_pairs;

    std::size_t declare(std::string_view name) {
        if (auto it = index.find(name); it != index.end()) return it->second;
        names.emplace_back(name);
        index.emplace(names.back(), names.size() - 1);
        return names.size() - 1;
    }

    graph finish(const char* empty_what) const {
        if (names.empty()) throw parse_error(0, empty_what);
        graph g{names, relation(names.size())};
        for (auto [a, b] : edge_pairs) g.edges.insert(a, b);
        return g;
    }
};

} // namespace

std::optional<std::size_t> graph::find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

std::size_t graph::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw unknown_vertex_error(std::string(name));
}

graph parse_edge_list(std::string_view text) {
    builder b;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (std::size_t arrow = line.find("->"); arrow != std::string_view::npos) {
            std::string_view tail = trim(line.substr(0, arrow));
            std::string_view head = trim(line.substr(arrow + 2));
            if (tail.empty() || head.empty())
                throw parse_error(line_no, "expected 'u -> v', got '" + std::string(line) + "'");
            if (has_space(tail) || has_space(head) ||
                head.find("->") != std::string_view::npos)
                throw parse_error(line_no,
                                  "vertex names must be single tokens in '" + std::string(line) +
                                      "'");
            std::size_t u = b.declare(tail);
            std::size_t v = b.declare(head);
            b.edge_pairs.emplace_back(u, v);
        } else if (line.substr(0, 4) == "node" &&
                   (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
            std::string_view name = trim(line.substr(4));
            if (name.empty() || has_space(name))
                throw parse_error(line_no, "expected 'node u', got '" + std::string(line) + "'");
            b.declare(name);
        } else {
            throw parse_error(line_no, "expected 'u -> v' or 'node u', got '" +
                                           std::string(line) + "'");
        }
    }
    return b.finish("graph has no vertices");
}

std::string render_edge_list(const graph& g) {
    std::ostringstream os;
    for (const auto& name : g.names) os << "node " << name << '\n';
    for (auto [a, b] : g.edges.pairs()) os << g.names[a] << " -> " << g.names[b] << '\n';
    return os.str();
}

nlohmann::json graph_to_json(const graph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& name : g.names) nodes.push_back(name);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges.pairs())
        edges.push_back(nlohmann::json::array({g.names[a], g.names[b]}));
    return nlohmann::json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error(0, "graph JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "nodes" && key != "edges")
            throw parse_error(0, "unknown field '" + key + "' in graph JSON");
    }
    if (j.contains("nodes") && !j["nodes"].is_array())
        throw parse_error(0, "'nodes' must be an array");
    if (j.contains("edges") && !j["edges"].is_array())
        throw parse_error(0, "'edges' must be an array");

    builder b;
    if (j.contains("nodes"))
        for (const auto& node : j["nodes"]) {
            if (!node.is_string() || node.get<std::string>().empty())
                throw parse_error(0, "'nodes' entries must be non-empty strings");
            b.declare(node.get<std::string>());
        }
    if (j.contains("edges"))
        for (const auto& edge : j["edges"]) {
            if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
                !edge[1].is_string())
                throw parse_error(0, "'edges' entries must be [\"u\", \"v\"] pairs");
            std::size_t u = b.declare(edge[0].get<std::string>());
            std::size_t v = b.declare(edge[1].get<std::string>());
            b.edge_pairs.emplace_back(u, v);
        }
    return b.finish("graph JSON declares no vertices");
}

relation parent_relation(const graph& g) { return g.edges; }

cond_context::cond_context(graph g_, vertex_set w_) : g(std::move(g_)), w(std::move(w_)) {
    if (w.universe_size() != g.size())
        throw universe_mismatch_error("conditioning set over universe of size " +
                                      std::to_string(w.universe_size()) + " for a graph with " +
                                      std::to_string(g.size()) + " vertices");
}

} // namespace tsep
