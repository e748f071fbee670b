#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quiverreach/algebra.hpp"
#include "quiverreach/error.hpp"
#include "quiverreach/generators.hpp"
#include "quiverreach/homology.hpp"
#include "quiverreach/reduction.hpp"

using namespace quiverreach;

namespace {

Poset chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i) pairs.emplace_back(i - 1, i);
    }
    return Poset::from_pairs(labels, pairs);
}

Poset diamond() { return Poset::from_pairs({"0", "1", "2", "3"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

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

TEST_SUITE("algebra") {
    TEST_CASE("commuting algebra dimensions") {
        CHECK(commuting_algebra_dim(fixtures::quiver("fig4.qvr")) == 9);
        Quiver edgeless;
        for (auto v : {"a", "b", "c"}) edgeless.add_vertex(v);
        CHECK(commuting_algebra_dim(edgeless) == 3);
        for (std::size_t n = 1; n <= 6; ++n) CHECK(commuting_algebra_dim(bidirected_linear(n)) == (n + 1) * (n + 1));
        Rng rng(51);
        for (int i = 0; i < 100; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 6, i % 9);
            CHECK(commuting_algebra_dim(q) == oracle::count_true(oracle::warshall(q)));
            CHECK(incidence_algebra_dim(reachability_poset(q).poset) == oracle::count_true(oracle::reach_order(q).leq));
        }
    }

    TEST_CASE("incidence algebra dimensions") {
        CHECK(incidence_algebra_dim(diamond()) == 9);
        CHECK(incidence_algebra_dim(chain(1)) == 1);
        CHECK(incidence_algebra_dim(chain(4)) == 10);
    }

    TEST_CASE("structure constants follow composition") {
        const Poset d = diamond();
        CHECK(structure_product(d, {1, 3}, {0, 1}) == BasisElement{0, 3});
        CHECK_FALSE(structure_product(d, {0, 1}, {1, 3}).has_value());
        CHECK(structure_product(d, {1, 1}, {0, 1}) == BasisElement{0, 1});
        CHECK(structure_product(d, {0, 1}, {0, 0}) == BasisElement{0, 1});
        CHECK_THROWS_WITH_AS(structure_product(d, {1, 2}, {0, 1}), doctest::Contains("InvalidBasisElement"),
                             PreconditionError);
    }

    TEST_CASE("structure product is associative and unital on small posets") {
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& o : oracle::orders_up_to_iso(n)) {
                const Poset p = as_poset(o);
                const auto basis = algebra_basis(p);
                for (const auto& f : basis) {
                    CHECK(structure_product(p, {f.to, f.to}, f) == f);
                    CHECK(structure_product(p, f, {f.from, f.from}) == f);
                    for (const auto& g : basis)
                        for (const auto& h : basis) {
                            const auto fg = structure_product(p, f, g);
                            const auto gh = structure_product(p, g, h);
                            const auto left = fg ? structure_product(p, *fg, h) : std::nullopt;
                            const auto right = gh ? structure_product(p, f, *gh) : std::nullopt;
                            REQUIRE(left == right);
                        }
                }
            }
        // Five elements: the chain, exhaustively.
        const Poset c = chain(5);
        const auto basis = algebra_basis(c);
        for (const auto& f : basis)
            for (const auto& g : basis)
                for (const auto& h : basis) {
                    const auto fg = structure_product(c, f, g);
                    const auto gh = structure_product(c, g, h);
                    CHECK((fg ? structure_product(c, *fg, h) : std::nullopt) == (gh ? structure_product(c, f, *gh) : std::nullopt));
                }
    }

    TEST_CASE("Happel formula") {
        for (std::size_t n = 1; n <= 5; ++n) CHECK(happel_hh(linear_quiver(n)).hh1 == 0);
        CHECK(happel_hh(kronecker()).hh1 == 3);
        const auto fig4 = happel_hh(fixtures::quiver("fig4.qvr"));
        CHECK(fig4.hh0 == 1);
        CHECK(fig4.hh1 == 1);
        CHECK(fig4.degree(2) == 0);
        CHECK_THROWS_WITH_AS(happel_hh(directed_cycle(3)), doctest::Contains("CyclicQuiver"), PreconditionError);
        Quiver apart;
        apart.add_vertex("a");
        apart.add_vertex("b");
        CHECK_THROWS_WITH_AS(happel_hh(apart), doctest::Contains("Disconnected"), PreconditionError);
    }

    TEST_CASE("Happel agrees with the nerve on path-unique quivers") {
        Rng rng(52);
        for (int i = 0; i < 80; ++i) {
            const Quiver q = random_path_unique_quiver(rng, 1 + i % 6, 8);
            REQUIRE(path_reach_isomorphic(q).isomorphic);
            const auto betti = nerve_betti_of_quiver(q, 2, 1);
            CHECK(happel_hh(q).hh1 == betti[1]);
        }
    }

    TEST_CASE("Morita equivalence is poset isomorphism") {
        CHECK(morita_equivalent(bidirected_linear(3), linear_quiver(0)).equivalent);
        const auto no = morita_equivalent(fixtures::quiver("fig4.qvr"), fixtures::quiver("fig2.qvr"));
        CHECK_FALSE(no.equivalent);
        CHECK_FALSE(no.bijection.has_value());
        const auto yes = morita_equivalent(fixtures::quiver("fig4.qvr"), fixtures::quiver("fig4_relabeled.qvr"));
        REQUIRE(yes.equivalent);
        REQUIRE(yes.bijection.has_value());
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                CHECK(yes.first.poset.leq(a, b) == yes.second.poset.leq((*yes.bijection)[a], (*yes.bijection)[b]));
    }

    TEST_CASE("global dimension report") {
        const auto fig4 = gldim_report(fixtures::quiver("fig4.qvr"));
        CHECK(fig4.upper_bound == 2);
        CHECK(fig4.is_one == false);
        CHECK(fig4.b11.has_value());
        const auto fig2 = gldim_report(fixtures::quiver("fig2.qvr"));
        CHECK(fig2.upper_bound == 1);
        CHECK(fig2.is_one == true);
        const auto sc = gldim_report(directed_cycle(4));
        CHECK(sc.antichain);
        CHECK(sc.upper_bound == 0);
        CHECK_FALSE(sc.is_one.has_value());
        Rng rng(53);
        for (int i = 0; i < 100; ++i) {
            const auto r = gldim_report(random_quiver(rng, 1 + i % 6, i % 9));
            if (r.is_one == true) CHECK(r.upper_bound >= 1);
            CHECK(r.antichain == (r.upper_bound == 0));
        }
    }

    TEST_CASE("Hochschild oracle small cases") {
        CHECK(hochschild_oracle(chain(1), 0, 2) == 1);
        CHECK(hochschild_oracle(chain(2), 0, 2) == 1);
        CHECK(hochschild_oracle(chain(2), 1, 2) == 0);
        const Poset square = reachability_poset(fixtures::quiver("fig2.qvr")).poset;
        CHECK(hochschild_oracle(square, 1, 2) == 1);
        CHECK(hochschild_oracle(square, 1, 0) == 1);
        CHECK(hochschild_oracle(diamond(), 1, 0) == 0);
        CHECK_THROWS_WITH_AS(hochschild_oracle(chain(2), 4, 2), doctest::Contains("BadDegree"), PreconditionError);
        CHECK_THROWS_WITH_AS(hochschild_oracle(chain(2), 1, 4), doctest::Contains("BadField"), PreconditionError);
        CHECK_THROWS_WITH_AS(hochschild_oracle(chain(6), 3, 2), doctest::Contains("TooLarge"), PreconditionError);
    }

    TEST_CASE("Hochschild oracle equals nerve Betti numbers on 4-element posets") {
        for (const auto& o : oracle::orders_up_to_iso(4)) {
            const Poset p = as_poset(o);
            const auto betti = oracle::order_complex_betti(o, 2, 2);
            for (std::size_t k = 0; k <= 2; ++k) CHECK(hochschild_oracle(p, k, 2) == betti[k]);
        }
    }
}
