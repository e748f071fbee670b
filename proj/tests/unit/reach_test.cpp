#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quiverreach/error.hpp"
#include "quiverreach/generators.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/reach.hpp"

using namespace quiverreach;

namespace {

oracle::Order as_order(const Poset& p) {
    oracle::Order o{p.size(), oracle::Matrix(p.size(), std::vector<bool>(p.size(), false))};
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) o.leq[a][b] = p.leq(a, b);
    return o;
}

Poset as_poset(const oracle::Order& o) {
    BoolMatrix m(o.n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < o.n; ++a) {
        labels.push_back("p" + std::to_string(a));
        for (std::size_t b = 0; b < o.n; ++b) m.set(a, b, o.leq[a][b]);
    }
    return Poset(labels, m);
}

}  // namespace

TEST_SUITE("reach") {
    TEST_CASE("preorder and poset validation") {
        BoolMatrix not_reflexive(2);
        CHECK_THROWS_AS(Preorder({"a", "b"}, not_reflexive), PreconditionError);
        BoolMatrix cyclic = BoolMatrix::identity(2);
        cyclic.set(0, 1);
        cyclic.set(1, 0);
        CHECK_NOTHROW(Preorder({"a", "b"}, cyclic));
        CHECK_THROWS_AS(Poset({"a", "b"}, cyclic), PreconditionError);
        CHECK_THROWS_AS(Poset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}), PreconditionError);
        const Poset chain = Poset::from_pairs({"a", "b", "c"}, {{0, 1}, {1, 2}});
        CHECK(chain.less(0, 2));
        CHECK(chain.comparable(2, 0));
    }

    TEST_CASE("fig. 4 reachability poset is the diamond") {
        const auto r = reachability_poset(fixtures::quiver("fig4.qvr"));
        CHECK(r.poset.size() == 4);
        CHECK(r.poset.relation().count() == 9);
        const Poset diamond = Poset::from_pairs({"b", "l", "r", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
        CHECK(poset_isomorphic(r.poset, diamond).has_value());
    }

    TEST_CASE("strongly connected quivers collapse to a point") {
        Rng rng(21);
        for (int i = 0; i < 30; ++i) {
            const auto r = reachability_poset(random_strongly_connected(rng, 1 + i % 7, i % 5));
            CHECK(r.poset.size() == 1);
        }
        CHECK(reachability_poset(bidirected_linear(5)).poset.size() == 1);
    }

    TEST_CASE("reachability poset agrees with the quotient of Warshall") {
        Rng rng(22);
        for (int i = 0; i < 150; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 6, i % 9);
            const auto r = reachability_poset(q);
            CHECK(oracle::orders_isomorphic(as_order(r.poset), oracle::reach_order(q)));
            for (const auto& e : q.edges()) CHECK(r.poset.leq(r.class_of[e.source], r.class_of[e.target]));
        }
    }

    TEST_CASE("T(Q) has loops unless stripped, and a relation edge per strict pair") {
        const Quiver q = fixtures::quiver("fig4.qvr");
        const Quiver t = t_quiver(q);
        CHECK(t.vertex_count() == 4);
        CHECK(t.edge_count() == 9);
        const Quiver s = t_quiver(q, true);
        CHECK(s.edge_count() == 5);
        CHECK(t_quiver(fixtures::quiver("fig8_left.qvr"), true).edge_count() == 6);
    }

    TEST_CASE("T(Q) without loops matches the condensation of the closure") {
        Rng rng(23);
        for (int i = 0; i < 200; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 5, i % 9);
            Quiver c = condensation(transitive_closure(q));
            Quiver loop_free;
            for (const auto& v : c.vertex_ids()) loop_free.add_vertex(v);
            for (const auto& e : c.edges())
                if (!e.is_loop()) loop_free.add_edge(e.id, e.source, e.target);
            CHECK(quivers_isomorphic(t_quiver(q, true), loop_free));
        }
    }

    TEST_CASE("T is idempotent up to isomorphism") {
        Rng rng(24);
        for (int i = 0; i < 50; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 5, i % 8);
            const Quiver t = t_quiver(q);
            CHECK(quivers_isomorphic(t_quiver(t), t));
        }
    }

    TEST_CASE("quiver morphisms give monotone maps") {
        const Quiver q = fixtures::quiver("fig4.qvr");
        Quiver point;
        point.add_vertex("*");
        point.add_edge("loop", "*", "*");
        QuiverMorphism f;
        for (const auto& v : q.vertex_ids()) f.vertex_map.emplace(v, "*");
        for (const auto& e : q.edges()) f.edge_map.emplace(e.id, "loop");
        const auto m = map_preorder(f, q, point);
        CHECK(m.image == std::vector<std::size_t>(4, 0));

        const auto bad = parse_morphism(read_file(fixtures::path("fig4_to_fig2.qvm")));
        try {
            map_preorder(bad, q, fixtures::quiver("fig2.qvr"));
            FAIL("expected NotAMorphism");
        } catch (const PreconditionError& e) {
            CHECK(e.violation() == Violation::NotAMorphism);
        }
        QuiverMorphism partial = f;
        partial.vertex_map.erase("0");
        CHECK_THROWS_AS(map_preorder(partial, q, point), PreconditionError);
    }

    TEST_CASE("poset isomorphism matches the permutation oracle on 4-element posets") {
        const auto orders = oracle::all_orders(4);
        Rng rng(25);
        std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
        for (int i = 0; i < 400; ++i) {
            const auto& a = orders[pick(rng)];
            const auto& b = orders[pick(rng)];
            const auto witness = poset_isomorphic(as_poset(a), as_poset(b));
            REQUIRE(witness.has_value() == oracle::orders_isomorphic(a, b));
            if (witness)
                for (std::size_t x = 0; x < a.n; ++x)
                    for (std::size_t y = 0; y < a.n; ++y) CHECK(a.leq[x][y] == b.leq[(*witness)[x]][(*witness)[y]]);
        }
    }

    TEST_CASE("B11 subposet detection") {
        const auto diamond = reachability_poset(fixtures::quiver("fig4.qvr")).poset;
        const auto w = find_b11_subposet(diamond);
        REQUIRE(w.has_value());
        CHECK(diamond.less(w->bottom, w->left));
        CHECK(diamond.less(w->right, w->top));
        CHECK_FALSE(diamond.comparable(w->left, w->right));
        CHECK_FALSE(contains_b11_subposet(reachability_poset(fixtures::quiver("fig2.qvr")).poset));
        CHECK_FALSE(contains_b11_subposet(reachability_poset(linear_quiver(4)).poset));
    }
}
