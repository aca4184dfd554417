#include "tsep/separation.hpp"

#include <nlohmann/json.hpp>

#include "tsep/error.hpp"
#include "tsep/topology.hpp"

namespace tsep {

namespace {

// p with every row inside W zeroed: parental steps must start outside W.
relation conditional_parental(const relation& p, const vertex_set& w) {
    return compose(relation::subdiagonal(w.complement()), p);
}

void require_disjoint(const vertex_set& x, const vertex_set& y, const char* what) {
    if (x.intersects(y)) {
        vertex_set common = x & y;
        throw precondition_error(std::string(what) + " must be disjoint; both contain vertex " +
                                 std::to_string(common.members().front()));
    }
}

} // namespace

conditional_relations build_conditional(const cond_context& ctx) {
    const std::size_t n = ctx.g.size();
    const relation diag = relation::diagonal(n);
    const relation diag_w = relation::subdiagonal(ctx.w);
    const relation diag_wc = relation::subdiagonal(ctx.w.complement());

    conditional_relations cr;
    cr.w = ctx.w;
    cr.p = parent_relation(ctx.g);
    cr.p_w = conditional_parental(cr.p, ctx.w);
    cr.star = cr.p_w.reflexive_transitive_closure();
    cr.star_m = cr.star.converse();
    cr.b_w = compose(cr.p, cr.star);
    cr.b_m = cr.b_w.converse();
    cr.k_w = compose(compose(cr.b_m, diag_wc), cr.b_w);
    cr.c_w = compose(compose(diag_w, cr.k_w), diag_w).transitive_closure() | diag_w;

    relation bk_right = cr.b_m | cr.k_w.converse();
    relation bk_left = cr.b_w | cr.k_w;
    cr.a_w = diag | cr.b_w | cr.b_m | cr.k_w | compose(compose(bk_left, cr.c_w), bk_right);
    cr.r_w = diag | compose(cr.c_w, bk_right);
    cr.r_m = cr.r_w.converse();
    cr.t_reach = compose(cr.star, cr.r_w).converse();
    return cr;
}

bool d_separated(const conditional_relations& cr, std::size_t b, std::size_t c) {
    if (b >= cr.universe_size() || c >= cr.universe_size())
        throw std::out_of_range("query vertex outside universe");
    return !cr.a_w.contains(b, c);
}

bool t_separated(const conditional_relations& cr, std::size_t b, std::size_t c) {
    if (b >= cr.universe_size() || c >= cr.universe_size())
        throw std::out_of_range("query vertex outside universe");
    const std::uint64_t* rb = cr.t_reach.row_ptr(b);
    const std::uint64_t* rc = cr.t_reach.row_ptr(c);
    for (std::size_t i = 0; i < cr.t_reach.words_per_row(); ++i)
        if (rb[i] & rc[i]) return false;
    return true;
}

bool t_separated_sets(const conditional_relations& cr, const vertex_set& bs,
                      const vertex_set& cs) {
    require_disjoint(bs, cs, "the two query sets");
    require_disjoint(bs, cr.w, "the left query set and W");
    require_disjoint(cs, cr.w, "the right query set and W");
    bool sep = true;
    bs.for_each([&](std::size_t b) {
        cs.for_each([&](std::size_t c) { sep = sep && t_separated(cr, b, c); });
    });
    return sep;
}

vertex_set conditional_closure(const conditional_relations& cr, const vertex_set& b) {
    return foreset(cr.star, b);
}

std::optional<split_certificate> find_splitting(const conditional_relations& cr,
                                                const vertex_set& bs, const vertex_set& cs) {
    require_disjoint(bs, cs, "the two query sets");
    require_disjoint(bs, cr.w, "the left query set and W");
    require_disjoint(cs, cr.w, "the right query set and W");

    const std::size_t n = cr.universe_size();
    if (bs.empty()) return split_certificate{vertex_set(n), cr.w};
    if (cs.empty()) return split_certificate{cr.w, vertex_set(n)};
    if (!t_separated_sets(cr, bs, cs)) return std::nullopt;

    // Mediators each side drags into W for sure: r_w without its diagonal part.
    relation mediators = compose(cr.c_w, cr.b_m | cr.k_w.converse());
    vertex_set w_b = foreset(mediators, bs);
    vertex_set w_c = foreset(mediators, cs);

    // Whatever W-vertices remain get assigned whole cousinhood classes at a
    // time: a class joins the B side iff its closure misses the C side's.
    vertex_set c_side_closure = conditional_closure(cr, cs | w_c);
    vertex_set rest = cr.w - (w_b | w_c);
    vertex_set pending = rest;
    pending.for_each([&](std::size_t v) {
        if (!rest.contains(v)) return; // class already consumed
        vertex_set cls = cr.c_w.afterset_of(v) & rest;
        rest -= cls;
        if (!conditional_closure(cr, cls).intersects(c_side_closure))
            w_b |= cls;
        else
            w_c |= cls;
    });
    return split_certificate{std::move(w_b), std::move(w_c)};
}

bool verify_splitting(const cond_context& ctx, const vertex_set& bs, const vertex_set& cs,
                      const split_certificate& cert) {
    if (cert.w_b.universe_size() != ctx.g.size() || cert.w_c.universe_size() != ctx.g.size())
        throw invalid_certificate_error("certificate sets live on the wrong universe");
    if (cert.w_b.intersects(cert.w_c))
        throw invalid_certificate_error("w_b and w_c overlap");
    if ((cert.w_b | cert.w_c) != ctx.w)
        throw invalid_certificate_error("w_b and w_c do not cover W exactly");
    require_disjoint(bs, cs, "the two query sets");
    require_disjoint(bs, ctx.w, "the left query set and W");
    require_disjoint(cs, ctx.w, "the right query set and W");

    relation p_w = conditional_parental(parent_relation(ctx.g), ctx.w);
    vertex_set left = saturate_closure(p_w, bs | cert.w_b);
    vertex_set right = saturate_closure(p_w, cs | cert.w_c);
    return !left.intersects(right);
}

std::vector<vertex_set> cousinhood_classes(const conditional_relations& cr) {
    std::vector<vertex_set> out;
    vertex_set rest = cr.w;
    cr.w.for_each([&](std::size_t v) {
        if (!rest.contains(v)) return;
        vertex_set cls = cr.c_w.afterset_of(v) & cr.w;
        rest -= cls;
        out.push_back(std::move(cls));
    });
    return out;
}

nlohmann::json certificate_to_json(const graph& g, const split_certificate& cert) {
    auto labels = [&](const vertex_set& s) {
        nlohmann::json arr = nlohmann::json::array();
        s.for_each([&](std::size_t v) { arr.push_back(g.names[v]); });
        return arr;
    };
    return nlohmann::json{{"w_b", labels(cert.w_b)}, {"w_c", labels(cert.w_c)}};
}

split_certificate certificate_from_json(const graph& g, const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error(0, "certificate JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "w_b" && key != "w_c")
            throw parse_error(0, "unknown field '" + key + "' in certificate JSON");
    }
    auto side = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array())
            throw parse_error(0, std::string("certificate JSON needs a '") + key + "' array");
        vertex_set s(g.size());
        for (const auto& label : j[key]) {
            if (!label.is_string())
                throw parse_error(0, std::string("'") + key + "' entries must be strings");
            s.insert(g.index_of(label.get<std::string>()));
        }
        return s;
    };
    // named locals so a throw from the second side still destroys the first
    vertex_set w_b = side("w_b");
    vertex_set w_c = side("w_c");
    return split_certificate{std::move(w_b), std::move(w_c)};
}

} // namespace tsep
