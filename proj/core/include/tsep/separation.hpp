#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tsep/graph.hpp"

namespace tsep {

/// Everything conditioning a graph on W produces, built once per (graph, W)
/// and shared by all queries. Naming: p is the parental relation (edge tails
/// on the left), the _m variants are converses ("minus" direction), wc is the
/// complement of W.
///
///   p_w       parental steps that start outside W
///   star      (p_w)*            w-avoiding ancestry, reflexive
///   star_m    converse(star)
///   b_w       p . star          ancestors through W-avoiding chains
///   b_m       converse(b_w)
///   k_w       pairs sharing a W-avoiding common ancestor outside W
///             (b_m . diag(wc) . b_w); always symmetric
///   c_w       cousinhood: transitive chains of k_w inside W, plus diag(W);
///             a partial equivalence, and an equivalence when restricted to W
///   a_w       conditional connectedness: the d-connection relation
///   r_w       diag u c_w.(b_m u k_w) — the W-mediators a query point drags in
///   r_m       converse(r_w)
///   t_reach   row b = conditional closure of (foreset of b under r_w);
///             two vertices are t-separated iff their t_reach rows miss
struct conditional_relations {
    vertex_set w;
    relation p;
    relation p_w;
    relation star;
    relation star_m;
    relation b_w;
    relation b_m;
    relation k_w;
    relation c_w;
    relation a_w;
    relation r_w;
    relation r_m;
    relation t_reach;

    std::size_t universe_size() const { return p.universe_size(); }
};

conditional_relations build_conditional(const cond_context& ctx);

/// No d-connecting walk between b and c given W. False whenever b == c.
bool d_separated(const conditional_relations& cr, std::size_t b, std::size_t c);

/// The conditional closures of the r_w-foresets of b and c are disjoint.
/// Equivalent to d_separated for b, c outside W.
bool t_separated(const conditional_relations& cr, std::size_t b, std::size_t c);

/// Pairwise t-separation of every (b, c) in bs x cs. Vacuously true when a
/// side is empty. Requires bs, cs and W pairwise disjoint (precondition_error
/// names the offending intersection).
bool t_separated_sets(const conditional_relations& cr, const vertex_set& bs,
                      const vertex_set& cs);

/// Conditional closure: smallest set containing `b` that is closed under
/// W-avoiding parental steps (closure in the topology generated by p_w).
vertex_set conditional_closure(const conditional_relations& cr, const vertex_set& b);

/// A splitting of W witnessing separation of two vertex sets: w_b and w_c
/// partition W, and the conditional closures of bs u w_b and cs u w_c are
/// disjoint.
struct split_certificate {
    vertex_set w_b;
    vertex_set w_c;

    bool operator==(const split_certificate&) const = default;
};

/// Constructive search for a splitting certificate. Same preconditions as
/// t_separated_sets; returns nullopt exactly when some pair fails
/// t-separation. When bs is empty the trivial (empty, W) splitting is
/// returned, when cs is empty (W, empty).
std::optional<split_certificate> find_splitting(const conditional_relations& cr,
                                                const vertex_set& bs, const vertex_set& cs);

/// Check a certificate: throws invalid_certificate_error unless w_b, w_c
/// partition W; returns whether the closures of bs u w_b and cs u w_c are
/// disjoint. Deliberately cheap: builds only p_w and two saturation closures,
/// never the full bundle.
bool verify_splitting(const cond_context& ctx, const vertex_set& bs, const vertex_set& cs,
                      const split_certificate& cert);

/// The c_w-equivalence classes of W, ascending by minimum member. Empty W
/// gives an empty partition.
std::vector<vertex_set> cousinhood_classes(const conditional_relations& cr);

/// {"w_b": [labels], "w_c": [labels]}, labels in index order.
nlohmann::json certificate_to_json(const graph& g, const split_certificate& cert);
/// Inverse; rejects unknown fields and unknown labels.
split_certificate certificate_from_json(const graph& g, const nlohmann::json& j);

} // namespace tsep
