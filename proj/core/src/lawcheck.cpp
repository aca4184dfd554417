#include "tsep/lawcheck.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "tsep/error.hpp"
#include "tsep/topology.hpp"

namespace tsep::laws {

namespace {

// Every relation a law mentions, rebuilt from primitives. Where the source
// material offers two routes to the same relation, this takes the one the
// separation bundle does *not* use (squaring instead of Warshall closures,
// b_m from the converse-star product instead of a converse, k from the
// transitive-closure product, r_m spelled out instead of transposed).
struct terms {
    std::size_t n;
    relation diag, dw, dwc;
    relation p, p_w, p_m;
    relation s, s_m;     // reflexive-transitive closures of p_w / p_m
    relation plus, plus_m;
    relation b_w, b_m;
    relation k, kv;
    relation c;
    relation a;
    relation r_w, r_m;
    relation aa;         // s_m . s

    explicit terms(const cond_context& ctx)
        : n(ctx.g.size()),
          diag(relation::diagonal(n)),
          dw(relation::subdiagonal(ctx.w)),
          dwc(relation::subdiagonal(ctx.w.complement())),
          p(ctx.g.edges),
          p_w(compose(dwc, p)),
          p_m(p_w.converse()),
          s(p_w.transitive_closure_by_squaring() | diag),
          s_m(p_m.transitive_closure_by_squaring() | diag),
          plus(p_w.transitive_closure_by_squaring()),
          plus_m(p_m.transitive_closure_by_squaring()),
          b_w(compose(p, s)),
          b_m(compose(s_m, p.converse())),
          k(compose(plus_m, plus)),
          kv(k.converse()),
          c(compose(compose(dw, k), dw).transitive_closure_by_squaring() | dw),
          a(diag | b_w | b_m | k | compose(compose(b_w | k, c), b_m | kv)),
          r_w(diag | compose(c, b_m | kv)),
          r_m(diag | compose(b_w | kv, c)),
          aa(compose(s_m, s)) {}

    vertex_set cl(const vertex_set& x) const { return foreset(s, x); }
    vertex_set cl1(std::size_t v) const { return s.foreset_of(v); }
};

using offending = std::optional<std::pair<std::size_t, std::size_t>>;

offending first_diff(const relation& lhs, const relation& rhs) {
    if (lhs == rhs) return std::nullopt;
    for (std::size_t a = 0; a < lhs.universe_size(); ++a)
        for (std::size_t b = 0; b < lhs.universe_size(); ++b)
            if (lhs.contains(a, b) != rhs.contains(a, b)) return {{a, b}};
    return std::nullopt; // unreachable
}

offending law_l1(const terms& t) {
    return first_diff(t.aa, t.diag | compose(t.dwc, t.b_w) | compose(t.b_m, t.dwc) | t.k);
}

offending law_l2(const terms& t) {
    return first_diff(compose(t.c, t.aa), compose(t.c, t.diag | compose(t.b_m, t.dwc) | t.k));
}

offending law_l3(const terms& t) { return first_diff(compose(compose(t.c, t.aa), t.c), t.c); }

offending law_l4(const terms& t) {
    return first_diff(compose(compose(t.c, t.aa), t.dwc),
                      compose(compose(t.c, t.b_m | t.k), t.dwc));
}

offending law_l5(const terms& t) {
    return first_diff(compose(t.dwc, compose(t.aa, t.c)),
                      compose(compose(t.dwc, t.b_w | t.k), t.c));
}

offending law_l6(const terms& t) {
    relation lhs = compose(
        compose(compose(compose(t.dwc, t.diag | compose(t.b_w | t.kv, t.c)), t.aa),
                compose(compose(t.c, t.aa), t.diag | compose(t.c, t.b_m | t.kv))),
        t.dwc);
    relation rhs =
        compose(compose(compose(compose(t.dwc, t.b_w | t.kv), t.c), t.b_m | t.kv), t.dwc);
    return first_diff(lhs, rhs);
}

offending law_l7(const terms& t) {
    relation lhs = compose(compose(compose(compose(t.dwc, t.r_m), t.aa), t.r_w), t.dwc);
    relation rhs = compose(compose(t.dwc, t.a), t.dwc);
    return first_diff(lhs, rhs);
}

offending law_l8(const terms& t) {
    relation lhs = compose(compose(t.r_m, t.aa), t.r_w) |
                   compose(compose(t.r_m, t.b_m), t.dw) | compose(t.dw, compose(t.b_w, t.r_w));
    return first_diff(lhs, t.a | t.r_m | t.r_w);
}

// Closure of a union is the union of closures: binary unions of singletons
// cover every finite family, plus the empty family.
offending law_l9(const terms& t) {
    if (!t.cl(vertex_set(t.n)).empty()) return {{0, 0}};
    for (std::size_t u = 0; u < t.n; ++u)
        for (std::size_t v = 0; v < t.n; ++v)
            if (t.cl(vertex_set::of(t.n, {u, v})) != (t.cl1(u) | t.cl1(v))) return {{u, v}};
    return std::nullopt;
}

// Closure equals the downset in the specialization preorder: the saturation
// route and the star-foreset route must agree, subset by subset.
offending law_l10(const terms& t) {
    auto check = [&](const vertex_set& b_set) -> offending {
        vertex_set lhs = saturate_closure(t.p_w, b_set);
        vertex_set rhs = t.cl(b_set);
        if (lhs == rhs) return std::nullopt;
        vertex_set diff = (lhs - rhs) | (rhs - lhs);
        std::size_t v = diff.members().front();
        return {{v, v}};
    };
    if (t.n <= 10) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.n); ++mask) {
            vertex_set b_set(t.n);
            for (std::size_t v = 0; v < t.n; ++v)
                if (mask >> v & 1) b_set.insert(v);
            if (auto bad = check(b_set)) return bad;
        }
        return std::nullopt;
    }
    std::vector<vertex_set> family{vertex_set(t.n), vertex_set::full(t.n)};
    for (std::size_t u = 0; u < t.n; ++u)
        for (std::size_t v = u; v < t.n; ++v) family.push_back(vertex_set::of(t.n, {u, v}));
    for (const auto& b_set : family)
        if (auto bad = check(b_set)) return bad;
    return std::nullopt;
}

// Whenever two vertices outside W are conditionally connected but have
// disjoint conditional closures, some cousinhood-related pair of W-vertices
// witnesses the connection from both sides.
offending lemma_witness(const terms& t, const cond_context& ctx) {
    std::vector<vertex_set> cl1(t.n, vertex_set(t.n));
    for (std::size_t v = 0; v < t.n; ++v) cl1[v] = t.cl1(v);
    std::vector<std::size_t> w_members = ctx.w.members();
    for (std::size_t b = 0; b < t.n; ++b) {
        if (ctx.w.contains(b)) continue;
        for (std::size_t c_ = 0; c_ < t.n; ++c_) {
            if (c_ == b || ctx.w.contains(c_) || !t.a.contains(b, c_)) continue;
            if (cl1[b].intersects(cl1[c_])) continue;
            bool found = false;
            for (std::size_t wb : w_members) {
                if (found) break;
                if (!cl1[wb].intersects(cl1[b])) continue;
                for (std::size_t wc : w_members) {
                    if (t.c.contains(wb, wc) && cl1[wc].intersects(cl1[c_])) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) return {{b, c_}};
        }
    }
    return std::nullopt;
}

// Distinct cousinhood classes have disjoint closures, and any closure-
// disjoint splitting of W never puts two cousins on opposite sides.
offending lemma_cousinhood(const terms& t, const cond_context& ctx) {
    std::vector<vertex_set> classes;
    vertex_set rest = ctx.w;
    ctx.w.for_each([&](std::size_t v) {
        if (!rest.contains(v)) return;
        vertex_set cls = t.c.afterset_of(v) & ctx.w;
        rest -= cls;
        classes.push_back(std::move(cls));
    });
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (t.cl(classes[i]).intersects(t.cl(classes[j])))
                return {{classes[i].members().front(), classes[j].members().front()}};

    std::vector<std::size_t> w_members = ctx.w.members();
    if (w_members.size() > 16) return std::nullopt; // converse check bounded
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w_members.size()); ++mask) {
        vertex_set w1(t.n), w2(t.n);
        for (std::size_t i = 0; i < w_members.size(); ++i)
            (mask >> i & 1 ? w1 : w2).insert(w_members[i]);
        if (t.cl(w1).intersects(t.cl(w2))) continue;
        bool cousins_split = false;
        std::pair<std::size_t, std::size_t> bad{0, 0};
        w1.for_each([&](std::size_t x) {
            w2.for_each([&](std::size_t y) {
                if (!cousins_split && t.c.contains(x, y)) {
                    cousins_split = true;
                    bad = {x, y};
                }
            });
        });
        if (cousins_split) return {bad};
    }
    return std::nullopt;
}

offending run_law(const cond_context& ctx, std::string_view id) {
    terms t(ctx);
    if (id == "L1") return law_l1(t);
    if (id == "L2") return law_l2(t);
    if (id == "L3") return law_l3(t);
    if (id == "L4") return law_l4(t);
    if (id == "L5") return law_l5(t);
    if (id == "L6") return law_l6(t);
    if (id == "L7") return law_l7(t);
    if (id == "L8") return law_l8(t);
    if (id == "L9") return law_l9(t);
    if (id == "L10") return law_l10(t);
    if (id == "lemma-witness") return lemma_witness(t, ctx);
    if (id == "lemma-cousinhood") return lemma_cousinhood(t, ctx);
    throw precondition_error("unknown law id '" + std::string(id) + "'");
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_generator_bounds(std::size_t n, double p) {
    if (n < 1 || n > 16)
        throw precondition_error("generator needs 1 <= n <= 16, got n = " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw precondition_error("generator needs 0 <= p <= 1, got p = " + std::to_string(p));
}

} // namespace

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids{"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8",
                                              "L9", "L10", "lemma-witness", "lemma-cousinhood"};
    return ids;
}

report check_law(const cond_context& ctx, std::string_view id) {
    report rep;
    rep.law = std::string(id);
    rep.extended = (id == "L8");
    offending bad = run_law(ctx, id);
    if (!bad) return rep;

    rep.holds = false;
    cond_context small = shrink_instance(
        ctx, [&](const cond_context& sub) { return run_law(sub, id).has_value(); });
    offending small_bad = run_law(small, id);
    rep.witness = counterexample{small.g, small.w, small_bad->first, small_bad->second};
    return rep;
}

std::vector<report> check_all(const cond_context& ctx) {
    std::vector<report> out;
    out.reserve(law_ids().size());
    for (const auto& id : law_ids()) out.push_back(check_law(ctx, id));
    return out;
}

graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    check_generator_bounds(n, p);
    std::mt19937_64 rng(seed);
    graph g;
    for (std::size_t v = 0; v < n; ++v) g.names.push_back("v" + std::to_string(v));
    g.edges = relation(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (unit_draw(rng) < p) g.edges.insert(a, b);
    return g;
}

vertex_set random_vertex_subset(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw precondition_error("generator needs 0 <= p <= 1, got p = " + std::to_string(p));
    std::mt19937_64 rng(seed);
    vertex_set s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (unit_draw(rng) < p) s.insert(v);
    return s;
}

graph random_dag(std::size_t n, double p, std::uint64_t seed) {
    check_generator_bounds(n, p);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);
    graph g;
    for (std::size_t v = 0; v < n; ++v) g.names.push_back("v" + std::to_string(v));
    g.edges = relation(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p) g.edges.insert(order[i], order[j]);
    return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

graph induced_subgraph(const graph& g, const vertex_set& keep) {
    if (keep.universe_size() != g.size())
        throw universe_mismatch_error("keep-set universe does not match the graph");
    std::vector<std::size_t> old_of = keep.members();
    graph out;
    out.edges = relation(old_of.size());
    std::vector<std::size_t> new_of(g.size(), g.size());
    for (std::size_t i = 0; i < old_of.size(); ++i) {
        new_of[old_of[i]] = i;
        out.names.push_back(g.names[old_of[i]]);
    }
    for (auto [a, b] : g.edges.pairs())
        if (keep.contains(a) && keep.contains(b)) out.edges.insert(new_of[a], new_of[b]);
    return out;
}

cond_context restrict_context(const cond_context& ctx, const vertex_set& keep) {
    graph g = induced_subgraph(ctx.g, keep);
    vertex_set w(g.size());
    std::size_t next = 0;
    keep.for_each([&](std::size_t old) {
        if (ctx.w.contains(old)) w.insert(next);
        ++next;
    });
    return cond_context{std::move(g), std::move(w)};
}

cond_context shrink_instance(cond_context ctx,
                             const std::function<bool(const cond_context&)>& fails) {
    bool progress = true;
    while (progress && ctx.g.size() > 1) {
        progress = false;
        for (std::size_t v = 0; v < ctx.g.size(); ++v) {
            vertex_set keep = vertex_set::full(ctx.g.size());
            keep.erase(v);
            cond_context sub = restrict_context(ctx, keep);
            if (fails(sub)) {
                ctx = std::move(sub);
                progress = true;
                break;
            }
        }
    }
    return ctx;
}

nlohmann::json report_to_json(const report& r, std::uint64_t seed) {
    nlohmann::json j{{"law", r.law}, {"holds", r.holds}, {"extended", r.extended}, {"seed", seed}};
    if (r.witness) {
        nlohmann::json w_labels = nlohmann::json::array();
        r.witness->w.for_each([&](std::size_t v) { w_labels.push_back(r.witness->g.names[v]); });
        j["counterexample"] =
            nlohmann::json{{"graph", graph_to_json(r.witness->g)},
                           {"w", std::move(w_labels)},
                           {"pair", nlohmann::json::array({r.witness->g.names[r.witness->a],
                                                           r.witness->g.names[r.witness->b]})}};
    }
    return j;
}

} // namespace tsep::laws
