#include <random>

#include <doctest.h>

#include "tsep/topology.hpp"

using namespace tsep;

namespace {

relation random_relation(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    relation r(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) r.insert(a, b);
    return r;
}

vertex_set subset_from_mask(std::size_t n, std::uint32_t mask) {
    vertex_set s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (mask & (std::uint32_t{1} << v)) s.insert(v);
    return s;
}

} // namespace

TEST_CASE("open and closed sets of a single arrow") {
    generated_topology t(relation::from_pairs(2, {{0, 1}}));
    CHECK_FALSE(t.is_open(vertex_set::of(2, {0}))); // successor 1 escapes
    CHECK(t.is_open(vertex_set::of(2, {1})));
    CHECK(t.is_open(vertex_set(2)));
    CHECK(t.is_open(vertex_set::full(2)));
    CHECK(t.is_closed(vertex_set::of(2, {0})));
    CHECK_FALSE(t.is_closed(vertex_set::of(2, {1})));
}

TEST_CASE("a cycle only admits trivial closed sets") {
    generated_topology t(relation::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}));
    for (std::uint32_t mask = 1; mask < 7; ++mask)
        CHECK_FALSE(t.is_closed(subset_from_mask(3, mask)));
    CHECK(t.is_closed(vertex_set(3)));
    CHECK(t.is_closed(vertex_set::full(3)));
}

TEST_CASE("closure is the star-foreset") {
    generated_topology t(relation::from_pairs(2, {{0, 1}, {1, 0}}));
    CHECK(t.closure(vertex_set::of(2, {0})) == vertex_set::full(2));
    CHECK(t.closure(vertex_set(2)).empty());
    CHECK(t.closure(vertex_set::full(2)) == vertex_set::full(2));

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        generated_topology u(random_relation(7, 0.25, 40 + seed));
        vertex_set a = vertex_set::of(7, {1, 4});
        vertex_set b = vertex_set::of(7, {2});
        CHECK(u.closure(a | b) == (u.closure(a) | u.closure(b)));
        CHECK(u.closure(u.closure(a)) == u.closure(a)); // idempotent
        CHECK(a.subset_of(u.closure(a)));
        CHECK(u.is_closed(u.closure(a)));
    }
}

TEST_CASE("specialization preorder is the reflexive-transitive closure") {
    CHECK(generated_topology(relation(3)).specialization_preorder() == relation::diagonal(3));
    CHECK(generated_topology(relation::from_pairs(2, {{0, 1}})).specialization_preorder() ==
          relation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        relation pre = random_relation(6, 0.3, 90 + seed).reflexive_transitive_closure();
        CHECK(generated_topology(pre).specialization_preorder() == pre);
        // b precedes c exactly when b lies in the closure of {c}
        generated_topology t(random_relation(6, 0.3, 150 + seed));
        relation star = t.specialization_preorder();
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t c = 0; c < 6; ++c)
                CHECK(star.contains(b, c) ==
                      t.closure(vertex_set::of(6, {c})).contains(b));
    }
}

TEST_CASE("connected components") {
    generated_topology t(relation::from_pairs(4, {{0, 1}, {2, 3}}));
    std::vector<vertex_set> parts = t.connected_components();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == vertex_set::of(4, {0, 1}));
    CHECK(parts[1] == vertex_set::of(4, {2, 3}));

    CHECK(generated_topology(relation(3)).connected_components().size() == 3);
    CHECK(generated_topology(relation::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}))
              .connected_components()
              .size() == 1);
}

TEST_CASE("component partition survives converse and symmetrization") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        relation e = random_relation(8, 0.18, 300 + seed);
        auto base = generated_topology(e).connected_components();
        CHECK(generated_topology(e.converse()).connected_components() == base);
        CHECK(generated_topology(e | e.converse()).connected_components() == base);
        CHECK(generated_topology(e.reflexive_transitive_closure()).connected_components() ==
              base);
    }
}

TEST_CASE("open-set family is an Alexandrov topology") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        std::size_t n = 5;
        generated_topology t(random_relation(n, 0.3, 500 + seed));
        std::vector<vertex_set> opens;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            vertex_set o = subset_from_mask(n, mask);
            if (t.is_open(o)) opens.push_back(o);
            CHECK(t.is_open(o) == t.is_closed(o.complement()));
        }
        vertex_set meet = vertex_set::full(n);
        vertex_set join(n);
        for (const auto& o : opens) {
            meet &= o;
            join |= o;
            for (const auto& p : opens) {
                CHECK(t.is_open(o & p));
                CHECK(t.is_open(o | p));
            }
        }
        CHECK(t.is_open(meet));
        CHECK(t.is_open(join));
    }
}

TEST_CASE("generator and its closures induce the same topology") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::size_t n = 5;
        relation e = random_relation(n, 0.25, 700 + seed);
        generated_topology t(e);
        generated_topology t_plus(e.transitive_closure());
        generated_topology t_star(e.reflexive_transitive_closure());
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            vertex_set o = subset_from_mask(n, mask);
            CHECK(t.is_open(o) == t_plus.is_open(o));
            CHECK(t.is_open(o) == t_star.is_open(o));
            CHECK(t.is_closed(o) == generated_topology(e.converse()).is_open(o));
        }
    }
}

TEST_CASE("union of generators intersects the open families") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        std::size_t n = 5;
        relation e1 = random_relation(n, 0.2, 900 + seed);
        relation e2 = random_relation(n, 0.2, 950 + seed);
        generated_topology t1(e1), t2(e2), tu(e1 | e2);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            vertex_set o = subset_from_mask(n, mask);
            CHECK(tu.is_open(o) == (t1.is_open(o) && t2.is_open(o)));
        }
    }
}

TEST_CASE("saturating a seed set matches the cached-star closure") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        relation e = random_relation(8, 0.25, 1100 + seed);
        generated_topology t(e);
        for (std::uint32_t mask : {0u, 1u, 5u, 37u, 255u}) {
            vertex_set b = subset_from_mask(8, mask);
            CHECK(saturate_closure(e, b) == t.closure(b));
        }
    }
}

TEST_CASE("product closure of fixed instances") {
    generated_topology arrow(relation::from_pairs(2, {{0, 1}}));
    CHECK(product_closure(arrow, arrow, relation::from_pairs(2, {{1, 1}})) ==
          relation::full(2));
    CHECK(product_closure(arrow, arrow, relation(2)) == relation(2));

    generated_topology discrete(relation(3));
    relation any = relation::from_pairs(3, {{0, 2}, {1, 1}});
    CHECK(product_closure(discrete, discrete, any) == any);
}

TEST_CASE("product closure equals the one-step fixpoint") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        std::size_t n = 6;
        relation e1 = random_relation(n, 0.2, 1300 + seed);
        relation e2 = random_relation(n, 0.2, 1350 + seed);
        relation rel = random_relation(n, 0.1, 1400 + seed);
        relation got = product_closure(generated_topology(e1), generated_topology(e2), rel);

        relation want = rel; // grow one coordinate at a time until stable
        for (;;) {
            relation next = want | compose(e1, want) | compose(want, e2.converse());
            if (next == want) break;
            want = next;
        }
        CHECK(got == want);
        CHECK(rel.subset_of(got));
        CHECK(product_closure(generated_topology(e1), generated_topology(e2), got) == got);
    }
}

TEST_CASE("product closure rejects mixed universes") {
    generated_topology t2(relation(2)), t3(relation(3));
    CHECK_THROWS_AS((void)product_closure(t2, t3, relation(2)), universe_mismatch_error);
    CHECK_THROWS_AS((void)product_closure(t2, t2, relation(3)), universe_mismatch_error);
}
