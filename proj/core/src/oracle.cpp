#include "tsep/oracle.hpp"

#include <string>
#include <vector>

#include "tsep/error.hpp"

namespace tsep::oracle {

namespace {

struct adjacency {
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::vector<std::size_t>> parents;

    explicit adjacency(const graph& g)
        : children(g.size()), parents(g.size()) {
        for (auto [u, v] : g.edges.pairs()) {
            children[u].push_back(v);
            parents[v].push_back(u);
        }
    }
};

bool cyclic_from(const adjacency& adj, std::size_t u, std::vector<char>& color) {
    color[u] = 1; // on stack
    for (std::size_t v : adj.children[u]) {
        if (color[v] == 1) return true;
        if (color[v] == 0 && cyclic_from(adj, v, color)) return true;
    }
    color[u] = 2;
    return false;
}

std::vector<char> descendants_of(const adjacency& adj, std::size_t v) {
    std::vector<char> seen(adj.children.size(), 0);
    std::vector<std::size_t> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : adj.children[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return seen;
}

struct path_search {
    const adjacency& adj;
    const vertex_set& w;
    std::size_t target;
    std::vector<char> on_path;
    std::vector<std::size_t> verts;
    std::vector<char> dirs; // dirs[i]: edge between verts[i], verts[i+1] points forward
    std::vector<std::vector<char>> desc_cache;

    path_search(const adjacency& a, const vertex_set& w_, std::size_t target_)
        : adj(a), w(w_), target(target_), on_path(a.children.size(), 0),
          desc_cache(a.children.size()) {}

    bool collider_escapes(std::size_t v) {
        if (desc_cache[v].empty()) desc_cache[v] = descendants_of(adj, v);
        const auto& seen = desc_cache[v];
        for (std::size_t u = 0; u < seen.size(); ++u)
            if (seen[u] && w.contains(u)) return true;
        return false;
    }

    bool blocked() {
        for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
            bool collider = dirs[i - 1] && !dirs[i];
            if (collider ? !collider_escapes(verts[i]) : w.contains(verts[i])) return true;
        }
        return false;
    }

    // True iff some extension of the current path reaches the target unblocked.
    bool find_open_path(std::size_t u) {
        if (u == target) return !blocked();
        auto step = [&](std::size_t v, bool forward) {
            if (on_path[v]) return false;
            on_path[v] = 1;
            verts.push_back(v);
            dirs.push_back(forward);
            bool found = find_open_path(v);
            dirs.pop_back();
            verts.pop_back();
            on_path[v] = 0;
            return found;
        };
        for (std::size_t v : adj.children[u])
            if (step(v, true)) return true;
        for (std::size_t v : adj.parents[u])
            if (step(v, false)) return true;
        return false;
    }
};

void require_disjoint(const vertex_set& x, const vertex_set& y, const char* what) {
    if (x.intersects(y)) {
        vertex_set common = x & y;
        throw precondition_error(std::string(what) + " must be disjoint; both contain vertex " +
                                 std::to_string(common.members().front()));
    }
}

// Everything reaching into `seed` through chains whose step sources avoid W.
std::vector<char> naive_closure(const adjacency& adj, const vertex_set& w,
                                const vertex_set& seed) {
    std::vector<char> in(adj.children.size(), 0);
    std::vector<std::size_t> stack;
    seed.for_each([&](std::size_t v) {
        in[v] = 1;
        stack.push_back(v);
    });
    while (!stack.empty()) {
        std::size_t y = stack.back();
        stack.pop_back();
        for (std::size_t u : adj.parents[y])
            if (!in[u] && !w.contains(u)) {
                in[u] = 1;
                stack.push_back(u);
            }
    }
    return in;
}

} // namespace

bool is_dag(const graph& g) {
    adjacency adj(g);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.edges.contains(v, v)) return false;
    std::vector<char> color(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (color[v] == 0 && cyclic_from(adj, v, color)) return false;
    return true;
}

bool pearl_d_separated(const graph& g, const vertex_set& w, std::size_t b, std::size_t c) {
    if (b >= g.size() || c >= g.size())
        throw std::out_of_range("query vertex outside universe");
    if (!is_dag(g))
        throw scope_error("classical d-separation oracle only answers on acyclic graphs");
    if (b == c) throw precondition_error("classical oracle needs two distinct endpoints");
    if (w.contains(b) || w.contains(c))
        throw precondition_error("classical oracle needs endpoints outside W");

    adjacency adj(g);
    path_search search(adj, w, c);
    search.on_path[b] = 1;
    search.verts.push_back(b);
    return !search.find_open_path(b);
}

std::optional<split_certificate> brute_force_splitting(const cond_context& ctx,
                                                       const vertex_set& bs,
                                                       const vertex_set& cs) {
    require_disjoint(bs, cs, "the two query sets");
    require_disjoint(bs, ctx.w, "the left query set and W");
    require_disjoint(cs, ctx.w, "the right query set and W");
    std::vector<std::size_t> w_members = ctx.w.members();
    if (w_members.size() > 20)
        throw scope_error("brute-force splitting is limited to |W| <= 20");

    adjacency adj(ctx.g);
    const std::size_t n = ctx.g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w_members.size()); ++mask) {
        vertex_set w_b(n), w_c(n);
        for (std::size_t i = 0; i < w_members.size(); ++i) {
            if (mask >> i & 1)
                w_b.insert(w_members[i]);
            else
                w_c.insert(w_members[i]);
        }
        std::vector<char> left = naive_closure(adj, ctx.w, bs | w_b);
        std::vector<char> right = naive_closure(adj, ctx.w, cs | w_c);
        bool disjoint = true;
        for (std::size_t v = 0; v < n && disjoint; ++v) disjoint = !(left[v] && right[v]);
        if (disjoint) return split_certificate{std::move(w_b), std::move(w_c)};
    }
    return std::nullopt;
}

} // namespace tsep::oracle
