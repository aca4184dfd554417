#include <random>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "tsep/oracle.hpp"
#include "tsep/separation.hpp"
#include "tsep/topology.hpp"

using namespace tsep;

namespace {

cond_context make_ctx(const std::string& text, const std::vector<std::string>& w_labels) {
    graph g = parse_edge_list(text);
    vertex_set w(g.size());
    for (const auto& l : w_labels) w.insert(g.index_of(l));
    return cond_context{std::move(g), std::move(w)};
}

graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    graph g;
    g.edges = relation(n);
    for (std::size_t v = 0; v < n; ++v) g.names.push_back("v" + std::to_string(v));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.edges.insert(a, b);
    return g;
}

vertex_set subset_from_mask(std::size_t n, std::uint32_t mask) {
    vertex_set s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (mask & (std::uint32_t{1} << v)) s.insert(v);
    return s;
}

} // namespace

TEST_CASE("conditional bundle of the chain") {
    cond_context ctx = make_ctx("a -> m\nm -> c\n", {"m"});
    conditional_relations cr = build_conditional(ctx);

    CHECK(cr.p == relation::from_pairs(3, {{0, 1}, {1, 2}}));
    CHECK(cr.p_w == relation::from_pairs(3, {{0, 1}})); // the step out of m is cut
    CHECK(cr.b_w == relation::from_pairs(3, {{0, 1}, {1, 2}}));
    CHECK(cr.k_w == relation::from_pairs(3, {{1, 1}}));
    CHECK(cr.c_w == relation::from_pairs(3, {{1, 1}}));
    CHECK_FALSE(cr.a_w.contains(0, 2));
    CHECK_FALSE(cr.a_w.contains(2, 0));

    conditional_relations plain = build_conditional(make_ctx("a -> m\nm -> c\n", {}));
    CHECK(plain.c_w.empty());
    CHECK(plain.a_w.contains(0, 2));
}

TEST_CASE("conditional bundle of the collider") {
    cond_context ctx = make_ctx("a -> w\nc -> w\n", {"w"});
    conditional_relations cr = build_conditional(ctx);

    CHECK(cr.b_w.contains(0, 1)); // a into w
    CHECK(cr.b_w.contains(2, 1)); // c into w
    // both definition routes give the common-cause loop at the collision point
    CHECK(cr.k_w == relation::from_pairs(3, {{1, 1}}));
    relation plus = cr.p_w.transitive_closure();
    CHECK(cr.k_w == compose(plus.converse(), plus));
    CHECK(cr.c_w == relation::from_pairs(3, {{1, 1}}));
    CHECK(cr.a_w.contains(0, 2)); // conditioning opened the collider

    conditional_relations plain = build_conditional(make_ctx("a -> w\nc -> w\n", {}));
    CHECK_FALSE(plain.a_w.contains(0, 2));
}

TEST_CASE("bundle invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t n = 7;
        graph g = random_graph(n, 0.25, 2000 + seed);
        vertex_set w = subset_from_mask(n, static_cast<std::uint32_t>((seed * 37) % 128));
        conditional_relations cr = build_conditional(cond_context{g, w});

        CHECK(cr.k_w.is_symmetric());
        CHECK(cr.a_w.is_symmetric());
        CHECK(cr.a_w.is_reflexive());
        CHECK(cr.c_w.is_partial_equivalence());
        CHECK(cr.c_w.subset_of(relation::full(n) &
                               compose(compose(relation::subdiagonal(w), relation::full(n)),
                                       relation::subdiagonal(w))));
        // restricted to W the cousinhood is reflexive, hence an equivalence
        CHECK(relation::subdiagonal(w).subset_of(cr.c_w));
        CHECK(cr.b_m == cr.b_w.converse());
        CHECK(cr.r_m == cr.r_w.converse());
        // the second definition route for k_w
        relation plus = cr.p_w.transitive_closure();
        CHECK(cr.k_w == compose(plus.converse(), plus));
    }
}

TEST_CASE("point separation verdicts") {
    conditional_relations cr = build_conditional(make_ctx("a -> m\nm -> c\n", {"m"}));
    CHECK(d_separated(cr, 0, 2));
    CHECK(t_separated(cr, 0, 2));
    CHECK_FALSE(d_separated(cr, 0, 0)); // self-connection always holds
    CHECK_FALSE(t_separated(cr, 0, 0));
    CHECK_THROWS_AS((void)d_separated(cr, 0, 3), std::out_of_range);
    CHECK_THROWS_AS((void)t_separated(cr, 3, 0), std::out_of_range);
}

TEST_CASE("mediated closures of the chain and the fork") {
    conditional_relations chain = build_conditional(make_ctx("a -> m\nm -> c\n", {"m"}));
    CHECK(conditional_closure(chain, foreset(chain.r_w, vertex_set::of(3, {0}))) ==
          vertex_set::of(3, {0, 1})); // a drags its mediator m along
    CHECK(conditional_closure(chain, foreset(chain.r_w, vertex_set::of(3, {2}))) ==
          vertex_set::of(3, {2}));

    conditional_relations fork = build_conditional(make_ctx("z -> a\nz -> c\n", {"z"}));
    CHECK(conditional_closure(fork, foreset(fork.r_w, vertex_set::of(3, {1}))) ==
          vertex_set::of(3, {1}));
    CHECK(conditional_closure(fork, foreset(fork.r_w, vertex_set::of(3, {2}))) ==
          vertex_set::of(3, {2}));

    conditional_relations open_fork = build_conditional(make_ctx("z -> a\nz -> c\n", {}));
    CHECK(conditional_closure(open_fork, foreset(open_fork.r_w, vertex_set::of(3, {1}))) ==
          vertex_set::of(3, {0, 1}));
    CHECK(conditional_closure(open_fork, foreset(open_fork.r_w, vertex_set::of(3, {2}))) ==
          vertex_set::of(3, {0, 2}));
}

TEST_CASE("t_reach rows are the mediated closures") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::size_t n = 7;
        graph g = random_graph(n, 0.25, 2500 + seed);
        vertex_set w = subset_from_mask(n, static_cast<std::uint32_t>((seed * 13 + 5) % 128));
        conditional_relations cr = build_conditional(cond_context{g, w});
        for (std::size_t b = 0; b < n; ++b)
            CHECK(cr.t_reach.afterset_of(b) ==
                  conditional_closure(cr, foreset(cr.r_w, vertex_set::of(n, {b}))));
    }
}

TEST_CASE("set separation preconditions") {
    conditional_relations cr = build_conditional(make_ctx("a -> m\nm -> c\n", {"m"}));
    CHECK(t_separated_sets(cr, vertex_set::of(3, {0}), vertex_set::of(3, {2})));
    CHECK(t_separated_sets(cr, vertex_set(3), vertex_set::of(3, {2}))); // vacuous
    CHECK(t_separated_sets(cr, vertex_set(3), vertex_set(3)));
    CHECK_THROWS_AS(
        (void)t_separated_sets(cr, vertex_set::of(3, {0}), vertex_set::of(3, {0})),
        precondition_error);
    CHECK_THROWS_AS(
        (void)t_separated_sets(cr, vertex_set::of(3, {1}), vertex_set::of(3, {2})),
        precondition_error);
    CHECK_THROWS_AS(
        (void)t_separated_sets(cr, vertex_set::of(3, {0}), vertex_set::of(3, {1})),
        precondition_error);
}

TEST_CASE("splitting the chain, refusing the collider and the fork") {
    conditional_relations chain = build_conditional(make_ctx("a -> m\nm -> c\n", {"m"}));
    auto cert = find_splitting(chain, vertex_set::of(3, {0}), vertex_set::of(3, {2}));
    REQUIRE(cert.has_value());
    CHECK(cert->w_b == vertex_set::of(3, {1})); // m mediates for the a side
    CHECK(cert->w_c == vertex_set(3));
    CHECK(verify_splitting(make_ctx("a -> m\nm -> c\n", {"m"}), vertex_set::of(3, {0}),
                           vertex_set::of(3, {2}), *cert));

    conditional_relations collider = build_conditional(make_ctx("a -> w\nc -> w\n", {"w"}));
    CHECK_FALSE(
        find_splitting(collider, vertex_set::of(3, {0}), vertex_set::of(3, {2})).has_value());

    conditional_relations fork = build_conditional(make_ctx("z -> a\nz -> c\n", {}));
    CHECK_FALSE(
        find_splitting(fork, vertex_set::of(3, {1}), vertex_set::of(3, {2})).has_value());
}

TEST_CASE("empty query sides get the trivial splitting") {
    conditional_relations cr = build_conditional(make_ctx("a -> w\nc -> w\n", {"w"}));
    auto none_b = find_splitting(cr, vertex_set(3), vertex_set::of(3, {0}));
    REQUIRE(none_b.has_value());
    CHECK(none_b->w_b == vertex_set(3));
    CHECK(none_b->w_c == vertex_set::of(3, {1}));
    auto none_c = find_splitting(cr, vertex_set::of(3, {0}), vertex_set(3));
    REQUIRE(none_c.has_value());
    CHECK(none_c->w_b == vertex_set::of(3, {1}));
    CHECK(none_c->w_c == vertex_set(3));
    auto both = find_splitting(cr, vertex_set(3), vertex_set(3));
    REQUIRE(both.has_value());
    CHECK(both->w_b == vertex_set(3));
}

TEST_CASE("verify rejects malformed and swapped certificates") {
    cond_context ctx = make_ctx("a -> m\nm -> c\n", {"m"});
    vertex_set bs = vertex_set::of(3, {0}), cs = vertex_set::of(3, {2});

    CHECK_FALSE(verify_splitting(ctx, bs, cs,
                                 split_certificate{vertex_set(3), vertex_set::of(3, {1})}));
    CHECK_THROWS_AS(
        (void)verify_splitting(ctx, bs, cs,
                               split_certificate{vertex_set(3), vertex_set(3)}),
        invalid_certificate_error); // union misses m
    CHECK_THROWS_AS(
        (void)verify_splitting(
            ctx, bs, cs,
            split_certificate{vertex_set::of(3, {1}), vertex_set::of(3, {1})}),
        invalid_certificate_error); // overlap
    CHECK_THROWS_AS(
        (void)verify_splitting(
            ctx, bs, cs, split_certificate{vertex_set::of(3, {0, 1}), vertex_set(3)}),
        invalid_certificate_error); // strays outside W
}

TEST_CASE("splitting search agrees with pairwise separation and brute force") {
    std::mt19937_64 rng(77);
    auto draw = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        std::size_t n = 3 + seed % 5;
        graph g = random_graph(n, 0.3, 3000 + seed);
        vertex_set w(n), bs(n), cs(n);
        for (std::size_t v = 0; v < n; ++v) {
            double x = draw();
            if (x < 0.28)
                w.insert(v);
            else if (x < 0.48)
                bs.insert(v);
            else if (x < 0.68)
                cs.insert(v);
        }
        cond_context ctx{g, w};
        conditional_relations cr = build_conditional(ctx);
        bool pairwise = t_separated_sets(cr, bs, cs);
        auto mine = find_splitting(cr, bs, cs);
        auto brute = oracle::brute_force_splitting(ctx, bs, cs);
        CHECK(mine.has_value() == pairwise);
        CHECK(brute.has_value() == pairwise);
        if (mine) CHECK(verify_splitting(ctx, bs, cs, *mine));
        if (brute) CHECK(verify_splitting(ctx, bs, cs, *brute));
    }
}

TEST_CASE("cousinhood classes of the canonical motifs") {
    auto classes = [](const std::string& text, const std::vector<std::string>& w) {
        return cousinhood_classes(build_conditional(make_ctx(text, w)));
    };

    auto chain = classes("a -> m\nm -> c\n", {"m"});
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == vertex_set::of(3, {1}));

    // two separate colliders: their collision points are unrelated
    auto twin = classes("a -> w1\nb -> w1\nc -> w2\nd -> w2\n", {"w1", "w2"});
    REQUIRE(twin.size() == 2);
    CHECK(twin[0].count() == 1);
    CHECK(twin[1].count() == 1);

    // a shared ancestor outside W welds the two conditioned vertices together
    auto welded = classes("z -> w1\nz -> w2\n", {"w1", "w2"});
    REQUIRE(welded.size() == 1);
    CHECK(welded[0].count() == 2);

    CHECK(classes("a -> m\nm -> c\n", {}).empty());
}

TEST_CASE("cousinhood classes partition W and have disjoint closures") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::size_t n = 7;
        graph g = random_graph(n, 0.3, 4000 + seed);
        vertex_set w = subset_from_mask(n, static_cast<std::uint32_t>((seed * 11 + 3) % 128));
        conditional_relations cr = build_conditional(cond_context{g, w});
        auto parts = cousinhood_classes(cr);
        vertex_set covered(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK_FALSE(parts[i].empty());
            CHECK_FALSE(covered.intersects(parts[i]));
            covered |= parts[i];
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK_FALSE(conditional_closure(cr, parts[i])
                                .intersects(conditional_closure(cr, parts[j])));
        }
        CHECK(covered == w);
    }
}

TEST_CASE("certificate json round trip") {
    graph g = parse_edge_list("a -> m\nm -> c\n");
    split_certificate cert{vertex_set::of(3, {1}), vertex_set(3)};
    nlohmann::json j = certificate_to_json(g, cert);
    CHECK(j == nlohmann::json{{"w_b", {"m"}}, {"w_c", nlohmann::json::array()}});
    CHECK(certificate_from_json(g, j) == cert);

    CHECK_THROWS_AS((void)certificate_from_json(g, {{"w_b", {"m"}}}), parse_error);
    CHECK_THROWS_AS(
        (void)certificate_from_json(
            g, {{"w_b", {"m"}}, {"w_c", nlohmann::json::array()}, {"extra", 1}}),
        parse_error);
    CHECK_THROWS_AS(
        (void)certificate_from_json(g, {{"w_b", {"nope"}}, {"w_c", nlohmann::json::array()}}),
        unknown_vertex_error);
}
