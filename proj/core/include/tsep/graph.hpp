#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tsep/relation.hpp"

namespace tsep {

/// Finite directed graph with named vertices. Cycles and self-loops are
/// allowed; vertex indices follow first appearance in the source text.
struct graph {
    std::vector<std::string> names;
    relation edges;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Index of `name`; throws unknown_vertex_error if absent.
    std::size_t index_of(std::string_view name) const;

    bool operator==(const graph&) const = default;
};

/// Edge-list text: one "u -> v" per line, whitespace-tolerant; '#' starts a
/// comment; blank lines are skipped; "node u" declares an isolated vertex.
/// Duplicate edges collapse. Throws parse_error (with 1-based line number)
/// on malformed lines and on a graph with no vertices at all.
graph parse_edge_list(std::string_view text);

/// Canonical edge-list text: a "node" line per vertex in index order, then
/// edges sorted by (tail, head) index. parse_edge_list(render_edge_list(g))
/// reproduces g exactly.
std::string render_edge_list(const graph& g);

/// {"nodes": [names in index order], "edges": [["u","v"], ...] sorted}.
nlohmann::json graph_to_json(const graph& g);

/// Inverse of graph_to_json. Unknown top-level fields are rejected; edge
/// endpoints not listed under "nodes" are declared in first-appearance order
/// after the declared ones.
graph graph_from_json(const nlohmann::json& j);

/// The parental relation the separation machinery conditions: (b, c) present
/// iff the graph has edge b -> c, i.e. b is a parent of c.
relation parent_relation(const graph& g);

/// A graph together with the conditioning set W (a subset of its vertices).
struct cond_context {
    graph g;
    vertex_set w;

    cond_context(graph g_, vertex_set w_);
};

} // namespace tsep
