#pragma once

#include <vector>

#include "tsep/relation.hpp"

namespace tsep {

/// The topology a relation E generates on its universe: O is open iff E-steps
/// out of O stay in O, closed iff E-steps into C start in C. Every union and
/// every intersection of opens is open, so closures of points determine
/// everything; closure(B) is the E*-foreset of B and the specialization
/// preorder is E* itself. E, its transitive closure and its reflexive-
/// transitive closure all generate the same topology.
class generated_topology {
public:
    explicit generated_topology(relation generator);

    const relation& generator() const { return generator_; }
    /// Reflexive-transitive closure of the generator (cached).
    const relation& star() const { return star_; }
    std::size_t universe_size() const { return generator_.universe_size(); }

    bool is_open(const vertex_set& o) const;
    bool is_closed(const vertex_set& c) const;

    /// Smallest closed superset: foreset(E*, b).
    vertex_set closure(const vertex_set& b) const;

    /// x <= y iff x is in the closure of {y}; equals star().
    const relation& specialization_preorder() const { return star_; }

    /// Classes of (E u converse(E))*, ascending by minimum member.
    std::vector<vertex_set> connected_components() const;

private:
    relation generator_;
    relation star_;
};

/// Closure of `seed` in the topology generated by `generator`, computed by
/// saturation (keep adding foreset steps until fixed). Same value as
/// generated_topology::closure but needs no precomputed star, which makes it
/// the cheap route when only one or two closures are wanted.
vertex_set saturate_closure(const relation& generator, vertex_set seed);

/// Closure of `rel` (a set of pairs) in the product of the topologies
/// generated by e1 and e2: star(e1) . rel . converse(star(e2)).
relation product_closure(const generated_topology& t1, const generated_topology& t2,
                         const relation& rel);

} // namespace tsep
