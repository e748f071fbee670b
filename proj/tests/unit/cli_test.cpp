#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "render.hpp"
#include "fixtures.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/io.hpp"
#include "quiverreach/reduction.hpp"

using namespace quiverreach;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "quiverreach");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("quiverreach_cli_" + name);
    std::ofstream(p) << content;
    return p.string();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("analyze fig4 as JSON") {
        const auto r = invoke({"analyze", fixtures::path("fig4.qvr"), "--json"});
        REQUIRE(r.code == cli::kOk);
        CHECK(r.err.empty());
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["scc_count"] == 4);
        CHECK(j["commuting_dim"] == 9);
        CHECK(j["betti"] == nlohmann::json::array({1, 0}));
        CHECK(j["poset"]["covers"].size() == 4);
        CHECK(j["poset"]["relations"].size() == 5);
        CHECK(j["path_reach"]["isomorphic"] == false);
        CHECK(j["path_reach"]["certificate"]["kind"] == "quasi_bigon");
    }

    TEST_CASE("JSON output is byte-stable") {
        for (const auto& cmd : std::vector<std::vector<std::string>>{
                 {"analyze", fixtures::path("fig8_left.qvr"), "--json"},
                 {"reduce", fixtures::path("fig8_left.qvr"), "--json"},
                 {"algebra", fixtures::path("fig4.qvr"), "--json"},
                 {"poset", fixtures::path("fig8_left.qvr"), "--json"},
                 {"persist", fixtures::path("fig4.fqvr"), "--json", "--jobs", "3"},
             }) {
            const auto a = invoke(cmd), b = invoke(cmd);
            CHECK(a.code == cli::kOk);
            CHECK(a.out == b.out);
            CHECK_NOTHROW((void)nlohmann::json::parse(a.out));
        }
    }

    TEST_CASE("morita on relabeled copies") {
        const auto r = invoke({"morita", fixtures::path("fig4.qvr"), fixtures::path("fig4_relabeled.qvr")});
        CHECK(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["equivalent"] == true);
        CHECK(j["bijection"].size() == 4);
        const auto no = invoke({"morita", fixtures::path("fig4.qvr"), fixtures::path("fig2.qvr")});
        CHECK(no.code == cli::kNo);
        CHECK(nlohmann::json::parse(no.out)["bijection"].is_null());
    }

    TEST_CASE("persist CSV has one row per critical value") {
        const auto r = invoke({"persist", fixtures::path("fig4.fqvr"), "--field", "2"});
        REQUIRE(r.code == cli::kOk);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0] == "t,beta0,beta1");
        const std::vector<std::string> betti{"4,0", "3,0", "2,0", "1,0", "1,0"};
        for (std::size_t i = 0; i < betti.size(); ++i) CHECK(rows[i + 1].substr(rows[i + 1].find(',') + 1) == betti[i]);
        const auto plot = invoke({"persist", fixtures::path("fig4.fqvr"), "--gnuplot"});
        CHECK(plot.code == cli::kOk);
        CHECK(plot.out.find("with steps") != std::string::npos);
    }

    TEST_CASE("boolean queries") {
        CHECK(invoke({"check-iso-pathreach", fixtures::path("fig2.qvr")}).code == cli::kOk);
        CHECK(invoke({"check-iso-pathreach", fixtures::path("fig4.qvr")}).code == cli::kNo);
        CHECK(invoke({"oracle", fixtures::path("fig2.qvr"), "--field", "0"}).code == cli::kOk);
    }

    TEST_CASE("reduce writes a parseable quiver") {
        const auto r = invoke({"reduce", fixtures::path("fig8_left.qvr")});
        REQUIRE(r.code == cli::kOk);
        const Quiver reduced = parse_quiver(r.out);
        CHECK(quivers_isomorphic(reduced, fixtures::quiver("fig8_right.qvr")));
    }

    TEST_CASE("reduce with an explicit order") {
        const Quiver q = fixtures::quiver("fig4.qvr");
        std::string order;
        auto paths = maximal_simple_paths(q);
        std::reverse(paths.begin(), paths.end());
        for (const auto& p : paths) order += cli::join(path_edge_ids(q, p)) + "\n";
        const auto file = temp_file("order.txt", order);
        const auto r = invoke({"reduce", fixtures::path("fig4.qvr"), "--order", file, "--json"});
        REQUIRE(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["trace"]["steps"][0]["path"] == nlohmann::json(path_edge_ids(q, paths[0])));
        CHECK(quivers_isomorphic(quiver_from_json(j["reduced"]), path_reduction(q, std::vector<std::vector<std::string>>{
                                                                                       path_edge_ids(q, paths[0]), path_edge_ids(q, paths[1])})
                                                                      .reduced));
        const auto bad = temp_file("bad_order.txt", "a c\n");
        CHECK(invoke({"reduce", fixtures::path("fig4.qvr"), "--order", bad}).code == cli::kPrecondition);
    }

    TEST_CASE("tq output round-trips through the parser") {
        const auto r = invoke({"tq", fixtures::path("fig4.qvr"), "--json"});
        REQUIRE(r.code == cli::kOk);
        const Quiver t = quiver_from_json(nlohmann::json::parse(r.out));
        CHECK(t.edge_count() == 9);
        const auto stripped = parse_quiver(invoke({"tq", fixtures::path("fig4.qvr"), "--strip-loops"}).out);
        CHECK(stripped.edge_count() == 5);
    }

    TEST_CASE("homology schema") {
        const auto r = invoke({"homology", fixtures::path("fig2.qvr"), "--field", "2", "--max-dim", "3", "--json"});
        REQUIRE(r.code == cli::kOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["betti"] == nlohmann::json::array({1, 1, 0, 0}));
        CHECK(j["f_vector"] == nlohmann::json::array({4, 4}));
        CHECK(j["euler"] == 0);
    }

    TEST_CASE("exit codes") {
        CHECK(invoke({}).code == cli::kUsage);
        CHECK(invoke({"frobnicate"}).code == cli::kUsage);
        CHECK(invoke({"analyze"}).code == cli::kUsage);
        CHECK(invoke({"analyze", fixtures::path("fig4.qvr"), "--field", "x"}).code == cli::kUsage);
        CHECK(invoke({"persist", fixtures::path("fig4.fqvr"), "--json", "--gnuplot"}).code == cli::kUsage);
        CHECK(invoke({"analyze", fixtures::path("fig4.qvr"), "--field", "6"}).code == cli::kPrecondition);
        CHECK(invoke({"analyze", "/nonexistent/q.qvr"}).code == cli::kPrecondition);
        CHECK(invoke({"analyze", temp_file("broken.qvr", "v a\ne x a b\n")}).code == cli::kParse);
        CHECK(invoke({"check-iso-pathreach", temp_file("split.qvr", "v a\nv b\n")}).code == cli::kPrecondition);
        CHECK(invoke({"algebra", fixtures::path("fig4.qvr"), "--help"}).code == cli::kOk);
        const auto r = invoke({"analyze", fixtures::path("fig4.qvr"), "--field", "6"});
        CHECK(r.out.empty());
        CHECK(r.err.find("BadField") != std::string::npos);
    }

    TEST_CASE("selftest is reproducible") {
        const auto a = invoke({"selftest", "--samples", "5"});
        const auto b = invoke({"selftest", "--samples", "5"});
        CHECK(a.code == cli::kOk);
        CHECK(a.out == b.out);
    }
}
