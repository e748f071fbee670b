#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quiverreach/error.hpp"
#include "quiverreach/generators.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/reduction.hpp"

using namespace quiverreach;

namespace {

Violation violation_of(auto&& f) {
    try {
        f();
    } catch (const PreconditionError& e) {
        return e.violation();
    }
    FAIL("no PreconditionError thrown");
    return Violation::InvalidArgument;
}

Path path_of(const Quiver& q, std::initializer_list<const char*> ids) {
    Path p;
    for (const char* id : ids) p.edges.push_back(q.edge_index(id));
    p.start = q.edge(p.edges.front()).source;
    return p;
}

std::vector<std::vector<std::string>> as_ids(const Quiver& q, const std::vector<Path>& paths) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : paths) out.push_back(path_edge_ids(q, p));
    return out;
}

bool valid_bigon(const Quiver& q, const QuasiBigon& b) {
    const auto up = path_vertices(q, b.upper), down = path_vertices(q, b.lower);
    if (b.x == b.y || up.front() != b.x || down.front() != b.x || up.back() != b.y || down.back() != b.y) return false;
    if (!is_simple_path(q, b.upper) || !is_simple_path(q, b.lower) || b.upper == b.lower) return false;
    std::set<VertexIndex> inner(up.begin() + 1, up.end() - 1);
    for (std::size_t i = 1; i + 1 < down.size(); ++i)
        if (inner.contains(down[i])) return false;
    return true;
}

}  // namespace

TEST_SUITE("reduction") {
    TEST_CASE("maximal simple paths of fig. 8 left") {
        const Quiver q = fixtures::quiver("fig8_left.qvr");
        const auto paths = as_ids(q, maximal_simple_paths(q));
        const std::vector<std::vector<std::string>> expected{
            {"v4v3", "v3w", "wv2"},
            {"wv2", "v2v3"},
            {"xv1", "v1v2", "v2v3", "v3w"},
            {"zv1", "v1v2", "v2v3", "v3w"},
        };
        CHECK(paths == expected);
    }

    TEST_CASE("maximal simple paths agree with the containment oracle") {
        Rng rng(31);
        for (int i = 0; i < 200; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 6, i % 9);
            CHECK(as_ids(q, maximal_simple_paths(q)) == oracle::maximal_simple_paths(q));
        }
    }

    TEST_CASE("contraction precondition errors") {
        Quiver q;
        for (auto v : {"a", "b", "c"}) q.add_vertex(v);
        q.add_edge("ab", "a", "b");
        q.add_edge("bc", "b", "c");
        q.add_edge("ca", "c", "a");
        q.add_edge("bb", "b", "b");
        CHECK(violation_of([&] { contract_path(q, path_of(q, {"ab", "bb"})); }) == Violation::LoopContraction);
        CHECK(violation_of([&] { contract_path(q, path_of(q, {"ab", "bc", "ca"})); }) == Violation::NotSimple);
        CHECK(violation_of([&] { contract_path(q, path_of(q, {"ab"})); }) == Violation::NotMaximal);
        CHECK(violation_of([&] { contract_path(q, Path{0, {q.edge_index("bc")}}); }) == Violation::NotSimple);
        const Quiver c = contract_path(q, path_of(q, {"ab", "bc"}));
        CHECK(c.vertex_count() == 2);
        CHECK(c.find_vertex("b").has_value());
        CHECK_FALSE(c.find_edge("bc").has_value());
    }

    TEST_CASE("contracting one side of a quasi-bigon shortens it") {
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t n = 0; n <= 3; ++n) {
                const Quiver q = bigon(m, n);
                std::vector<std::string> names;
                for (std::size_t i = 1; i <= m + 1; ++i) names.push_back("ve" + std::to_string(i));
                Path side{q.vertex_index("x"), {}};
                for (const auto& id : names) side.edges.push_back(q.edge_index(id));
                CHECK(quivers_isomorphic(contract_path(q, side), bigon(0, n)));
            }
    }

    TEST_CASE("reduction goldens") {
        for (std::size_t k = 2; k <= 6; ++k) {
            const Quiver r = path_reduction(directed_cycle(k)).reduced;
            Quiver expected;
            expected.add_vertex("a");
            expected.add_vertex("b");
            expected.add_edge("ab", "a", "b");
            expected.add_edge("ba", "b", "a");
            CHECK(quivers_isomorphic(r, expected));
        }
        for (std::size_t m = 0; m <= 3; ++m)
            for (std::size_t n = 0; n <= 3; ++n) CHECK(quivers_isomorphic(path_reduction(bigon(m, n)).reduced, kronecker()));
        CHECK(quivers_isomorphic(path_reduction(fixtures::quiver("fig8_left.qvr")).reduced,
                                 fixtures::quiver("fig8_right.qvr")));
    }

    TEST_CASE("trace records every visit and a snapshot per contraction") {
        const Quiver q = fixtures::quiver("fig8_left.qvr");
        const auto result = path_reduction(q);
        const auto& trace = result.trace;
        REQUIRE(trace.steps.size() >= 4);
        CHECK(trace.snapshots.front() == q);
        CHECK(trace.snapshots.back() == result.reduced);
        for (const auto& step : trace.steps) {
            CHECK(step.snapshot < trace.snapshots.size());
            CHECK(step.contracted == step.skip_reason.empty());
        }
        CHECK(trace.steps[0].round == 0);
        CHECK(trace.steps[0].path == std::vector<std::string>{"v4v3", "v3w", "wv2"});
        CHECK(trace.steps[0].contracted);
    }

    TEST_CASE("reductions leave no simple path of length two") {
        Rng rng(32);
        for (int i = 0; i < 150; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 6, i % 9);
            const Quiver r = path_reduction(q).reduced;
            CHECK_FALSE(has_simple_path_of_length_two(r));
            CHECK(undirected_components(r) == undirected_components(q));
        }
    }

    TEST_CASE("explicit orders must permute the maximal paths") {
        const Quiver q = fixtures::quiver("fig8_left.qvr");
        auto order = as_ids(q, maximal_simple_paths(q));
        std::reverse(order.begin(), order.end());
        const Quiver reversed = path_reduction(q, order).reduced;
        CHECK_FALSE(has_simple_path_of_length_two(reversed));
        order.pop_back();
        CHECK(violation_of([&] { path_reduction(q, order); }) == Violation::InvalidOrder);
        order.push_back({"xv1"});
        CHECK(violation_of([&] { path_reduction(q, order); }) == Violation::InvalidOrder);
    }

    TEST_CASE("simple alternating check") {
        const auto square = is_simple_alternating(fixtures::quiver("fig2.qvr"));
        CHECK(square.alternating);
        CHECK(square.sources.size() == 2);
        CHECK(square.sinks.size() == 2);
        const auto diamond = is_simple_alternating(fixtures::quiver("fig4.qvr"));
        CHECK_FALSE(diamond.alternating);
        CHECK(diamond.defect == AlternationDefect::MixedVertex);
        CHECK(diamond.culprit == "1");
        CHECK(is_simple_alternating(kronecker()).defect == AlternationDefect::ParallelEdges);
        CHECK(is_simple_alternating(directed_cycle(1)).defect == AlternationDefect::Loop);
    }

    TEST_CASE("quasi-bigon of the diamond") {
        const Quiver q = fixtures::quiver("fig4.qvr");
        const auto b = find_quasi_bigon(q);
        REQUIRE(b.has_value());
        CHECK(q.vertex_id(b->x) == "0");
        CHECK(q.vertex_id(b->y) == "3");
        CHECK(path_edge_ids(q, b->upper) == std::vector<std::string>{"a", "c"});
        CHECK(path_edge_ids(q, b->lower) == std::vector<std::string>{"b", "d"});
        CHECK_FALSE(has_diagonal(q, *b));
        CHECK_FALSE(find_quasi_bigon(fixtures::quiver("fig2.qvr")).has_value());
    }

    TEST_CASE("quasi-bigon search agrees with brute force") {
        Rng rng(33);
        for (int i = 0; i < 200; ++i) {
            const Quiver q = random_quiver(rng, 1 + i % 6, i % 9);
            const auto b = find_quasi_bigon(q);
            REQUIRE(b.has_value() == oracle::has_quasi_bigon(q));
            if (b) CHECK(valid_bigon(q, *b));
        }
    }

    TEST_CASE("diagonals are exactly strongly connected occurrences") {
        const Quiver q = bidirected_linear(2);
        QuasiBigon b{q.vertex_index("v0"), q.vertex_index("v2"), path_of(q, {"f0", "f1"}), path_of(q, {"f0", "f1"})};
        CHECK(violation_of([&] { has_diagonal(q, b); }) == Violation::InvalidOccurrence);

        Quiver sq = fixtures::quiver("fig4.qvr");
        sq.add_edge("back", "3", "0");
        const auto found = find_quasi_bigon(sq);
        REQUIRE(found.has_value());
        CHECK(has_diagonal(sq, *found));
        QuasiBigon wrong = *found;
        std::swap(wrong.x, wrong.y);
        CHECK(violation_of([&] { has_diagonal(sq, wrong); }) == Violation::InvalidOccurrence);
    }

    TEST_CASE("path/reach isomorphism agrees with walk counting") {
        Rng rng(34);
        for (int i = 0; i < 300; ++i) {
            const Quiver q = random_connected_quiver(rng, 1 + i % 6, i % 4);
            const auto verdict = path_reach_isomorphic(q);
            REQUIRE(verdict.isomorphic == oracle::path_reach_brute(q));
            if (const auto* cycle = std::get_if<Path>(&verdict.certificate)) {
                CHECK(cycle->length() >= 1);
                CHECK(is_path(q, *cycle));
                CHECK(path_end(q, *cycle) == cycle->start);
            } else if (const auto* b = std::get_if<QuasiBigon>(&verdict.certificate)) {
                CHECK(valid_bigon(q, *b));
            } else {
                CHECK(verdict.isomorphic);
            }
        }
        Quiver apart;
        apart.add_vertex("a");
        apart.add_vertex("b");
        CHECK(violation_of([&] { path_reach_isomorphic(apart); }) == Violation::Disconnected);
    }

    TEST_CASE("a simple alternating reduction forces path/reach isomorphism") {
        Rng rng(35);
        std::size_t alternating = 0;
        for (int i = 0; i < 300; ++i) {
            const Quiver q = random_connected_quiver(rng, 1 + i % 6, i % 3, {false, false});
            if (!is_simple_alternating(path_reduction(q).reduced).alternating) continue;
            ++alternating;
            CHECK(path_reach_isomorphic(q).isomorphic);
        }
        CHECK(alternating > 20);
    }

    TEST_CASE("path-unique quiver whose reductions are never simple alternating") {
        const Quiver q = fixtures::quiver("path_unique_fork.qvr");
        REQUIRE(path_reach_isomorphic(q).isomorphic);
        auto order = as_ids(q, maximal_simple_paths(q));
        std::sort(order.begin(), order.end());
        std::size_t orders = 0;
        do {
            const auto check = is_simple_alternating(path_reduction(q, order).reduced);
            CHECK_FALSE(check.alternating);
            CHECK(check.defect == AlternationDefect::ParallelEdges);
            ++orders;
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(orders == 24);
    }
}
