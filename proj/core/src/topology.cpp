#include "tsep/topology.hpp"

namespace tsep {

generated_topology::generated_topology(relation generator)
    : generator_(std::move(generator)), star_(generator_.reflexive_transitive_closure()) {}

bool generated_topology::is_open(const vertex_set& o) const {
    return afterset(generator_, o).subset_of(o);
}

bool generated_topology::is_closed(const vertex_set& c) const {
    return foreset(generator_, c).subset_of(c);
}

vertex_set generated_topology::closure(const vertex_set& b) const { return foreset(star_, b); }

std::vector<vertex_set> generated_topology::connected_components() const {
    relation eq = (generator_ | generator_.converse()).reflexive_transitive_closure();
    std::size_t n = universe_size();
    std::vector<vertex_set> out;
    vertex_set seen(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (seen.contains(v)) continue;
        vertex_set comp = eq.afterset_of(v);
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

vertex_set saturate_closure(const relation& generator, vertex_set seed) {
    for (;;) {
        vertex_set next = seed | foreset(generator, seed);
        if (next == seed) return seed;
        seed = std::move(next);
    }
}

relation product_closure(const generated_topology& t1, const generated_topology& t2,
                         const relation& rel) {
    return compose(compose(t1.star(), rel), t2.star().converse());
}

} // namespace tsep
