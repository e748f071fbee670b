#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>

#include "quiverreach/algebra.hpp"
#include "quiverreach/error.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/homology.hpp"
#include "quiverreach/io.hpp"
#include "quiverreach/linalg.hpp"
#include "quiverreach/persistence.hpp"
#include "quiverreach/reach.hpp"
#include "quiverreach/reduction.hpp"
#include "render.hpp"
#include "selftest.hpp"

namespace quiverreach::cli {

namespace {

/// Unreadable input files.
class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad flag values found after CLI11 accepted the syntax.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::uint64_t field = 2;
    std::optional<std::size_t> max_dim;
    std::string order = "lex";
    bool strip_loops = false;
    std::size_t jobs = 0;
    bool gnuplot = false;
    std::size_t samples = 200;
    std::vector<std::string> inputs;
};

std::string slurp(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

Quiver load(const std::string& path) { return parse_quiver(slurp(path)); }

/// Orders: "lex", or a file with one path per line as edge ids.
PathOrder load_order(const std::string& source) {
    if (source == "lex") return std::monostate{};
    std::vector<std::vector<std::string>> order;
    for (auto& line : tokenize_lines(slurp(source))) order.push_back(std::move(line.tokens));
    return order;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Quiver& q, const PathReachVerdict& v) {
    if (const auto* cycle = std::get_if<Path>(&v.certificate))
        return "directed cycle " + join(path_edge_ids(q, *cycle));
    if (const auto* b = std::get_if<QuasiBigon>(&v.certificate))
        return "quasi-bigon " + q.vertex_id(b->x) + " -> " + q.vertex_id(b->y) + " via [" +
               join(path_edge_ids(q, b->upper)) + "] and [" + join(path_edge_ids(q, b->lower)) + "]";
    return "none";
}

int analyze(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto scc = scc_partition(q);
    const auto r = reachability_poset(q);
    const std::size_t degree = o.max_dim.value_or(1);
    const auto betti = nerve_betti(r.poset, o.field, degree);
    std::optional<PathReachVerdict> verdict;
    if (is_connected(q)) verdict = path_reach_isomorphic(q);

    if (o.json) {
        nlohmann::json sccs = nlohmann::json::array();
        for (const auto& block : scc.blocks) {
            std::vector<std::string> ids;
            for (auto v : block) ids.push_back(q.vertex_id(v));
            sccs.push_back(ids);
        }
        nlohmann::json j{{"vertices", q.vertex_count()},
                         {"edges", q.edge_count()},
                         {"connected", is_connected(q)},
                         {"acyclic", is_acyclic(q)},
                         {"scc_count", scc.size()},
                         {"sccs", sccs},
                         {"commuting_dim", commuting_algebra_dim(q)},
                         {"incidence_dim", incidence_algebra_dim(r.poset)},
                         {"diameter", diameter(q)},
                         {"poset", poset_json(q, r)},
                         {"field", o.field},
                         {"betti", betti}};
        j["path_reach"] = verdict ? verdict_json(q, *verdict) : nlohmann::json(nullptr);
        print_json(out, j);
        return kOk;
    }
    Table t;
    t.row("vertices", std::to_string(q.vertex_count()))
        .row("edges", std::to_string(q.edge_count()))
        .row("connected", yes_no(is_connected(q)))
        .row("acyclic", yes_no(is_acyclic(q)))
        .row("scc_count", std::to_string(scc.size()))
        .row("commuting_dim", std::to_string(commuting_algebra_dim(q)))
        .row("incidence_dim", std::to_string(incidence_algebra_dim(r.poset)))
        .row("diameter", std::to_string(diameter(q)))
        .row("poset_elements", join(r.poset.elements()))
        .row("betti", list(betti));
    if (verdict)
        t.row("path_reach", verdict->isomorphic ? "isomorphic" : "not isomorphic: " + describe(q, *verdict));
    else
        t.row("path_reach", "n/a (disconnected)");
    out << t.str();
    return kOk;
}

int reduce(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto result = path_reduction(q, load_order(o.order));
    if (o.json) {
        print_json(out, reduction_json(result));
    } else {
        out << write_qvr(result.reduced);
    }
    return kOk;
}

int check_iso(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto v = path_reach_isomorphic(q);
    if (o.json)
        print_json(out, verdict_json(q, v));
    else
        out << (v.isomorphic ? "isomorphic" : "not isomorphic: " + describe(q, v)) << '\n';
    return v.isomorphic ? kOk : kNo;
}

int poset(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto r = reachability_poset(q);
    const auto j = poset_json(q, r);
    if (o.json) {
        print_json(out, j);
        return kOk;
    }
    Table t;
    for (std::size_t c = 0; c < r.poset.size(); ++c)
        t.row(r.poset.elements()[c], "{" + join(j["classes"][c].get<std::vector<std::string>>(), ", ") + "}");
    out << t.str();
    for (const auto& cover : j["covers"]) out << cover[0].get<std::string>() << " < " << cover[1].get<std::string>() << '\n';
    return kOk;
}

int tq(const Options& o, std::ostream& out) {
    const Quiver t = t_quiver(load(o.inputs.at(0)), o.strip_loops);
    if (o.json)
        print_json(out, to_json(t));
    else
        out << write_qvr(t);
    return kOk;
}

int algebra(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto s = summarize_algebra(q);
    const auto j = algebra_json(q, s);
    if (o.json) {
        print_json(out, j);
        return kOk;
    }
    Table t;
    t.row("dimension", std::to_string(s.dimension)).row("incidence_dimension", std::to_string(s.incidence_dimension));
    t.row("hh0", s.happel ? s.happel->hh0.str() : "n/a (needs a connected quiver without oriented cycles)");
    t.row("hh1", s.happel ? s.happel->hh1.str() : "n/a");
    t.row("gldim_upper", std::to_string(s.gldim.upper_bound));
    t.row("gldim_is_one", s.gldim.antichain ? "n/a (antichain, gldim 0)" : yes_no(*s.gldim.is_one));
    out << t.str();
    return kOk;
}

int morita(const Options& o, std::ostream& out) {
    const Quiver a = load(o.inputs.at(0)), b = load(o.inputs.at(1));
    const auto v = morita_equivalent(a, b);
    nlohmann::json bijection = nullptr;
    if (v.bijection) {
        bijection = nlohmann::json::object();
        for (std::size_t i = 0; i < v.bijection->size(); ++i)
            bijection[v.first.poset.elements()[i]] = v.second.poset.elements()[(*v.bijection)[i]];
    }
    print_json(out, {{"equivalent", v.equivalent}, {"bijection", bijection}});
    return v.equivalent ? kOk : kNo;
}

int homology(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto p = reachability_poset(q).poset;
    const auto c = o.max_dim ? order_complex(p, *o.max_dim + 1) : order_complex(p);
    const auto b = betti(c, o.field, o.max_dim);
    auto f = c.f_vector();
    if (o.max_dim && f.size() > *o.max_dim + 1) f.resize(*o.max_dim + 1);
    long long chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(f[k]);
    if (o.json) {
        print_json(out, {{"betti", b}, {"f_vector", f}, {"euler", chi}});
    } else {
        out << Table().row("betti", list(b)).row("f_vector", list(f)).row("euler", std::to_string(chi)).str();
    }
    return kOk;
}

int persist(const Options& o, std::ostream& out) {
    const auto fq = parse_filtration(slurp(o.inputs.at(0)));
    const auto curve = hh_betti_curves(fq, o.field, o.max_dim.value_or(1), o.jobs);
    if (o.json)
        print_json(out, curve_json(curve));
    else if (o.gnuplot)
        out << curve_gnuplot(curve, o.inputs.at(0));
    else
        out << curve_csv(curve);
    return kOk;
}

int oracle(const Options& o, std::ostream& out) {
    const Quiver q = load(o.inputs.at(0));
    const auto p = reachability_poset(q).poset;
    const std::size_t top = o.max_dim.value_or(2);
    if (top > 3) throw PreconditionError(Violation::BadDegree, "oracle degrees stop at 3");
    std::vector<std::size_t> hh;
    for (std::size_t k = 0; k <= top; ++k) hh.push_back(hochschild_oracle(p, k, o.field));
    const auto nerve = nerve_betti(p, o.field, top);
    const bool agree = hh == nerve;
    if (o.json)
        print_json(out, {{"hochschild", hh}, {"nerve", nerve}, {"agree", agree}, {"field", o.field}});
    else
        out << Table().row("hochschild", list(hh)).row("nerve", list(nerve)).row("agree", yes_no(agree)).str();
    return agree ? kOk : kNo;
}

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("QUIVERREACH_SEED");
    if (!raw || !*raw) return 20240601;
    try {
        std::size_t used = 0;
        const auto seed = std::stoull(raw, &used);
        if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
        return seed;
    } catch (const std::exception&) {
        throw UsageError(std::string("QUIVERREACH_SEED must be a non-negative integer, got '") + raw + "'");
    }
}

int run_selftest(const Options& o, std::ostream& out) {
    return selftest(seed_from_env(), o.samples, o.json, out) ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reachability categories, path reductions and persistent Hochschild curves of quivers", "quiverreach"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> handler;

    auto add = [&](const std::string& name, const std::string& help, std::size_t files,
                   std::function<int(const Options&, std::ostream&)> fn) {
        auto* sub = app.add_subcommand(name, help);
        if (files) sub->add_option("input", o.inputs, files == 1 ? "input file" : "input files")->required()->expected(static_cast<int>(files));
        sub->add_flag("--json", o.json, "emit JSON");
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };
    auto field = [&](CLI::App* sub) { sub->add_option("--field", o.field, "field characteristic: prime p, or 0 for Q")->capture_default_str(); };
    auto max_dim = [&](CLI::App* sub, const std::string& help) { sub->add_option("--max-dim", o.max_dim, help); };

    auto* analyze_cmd = add("analyze", "SCCs, algebra dimension, reachability poset, nerve Betti numbers, Path/Reach verdict", 1, analyze);
    field(analyze_cmd);
    max_dim(analyze_cmd, "highest Betti degree (default 1)");

    auto* reduce_cmd = add("reduce", "path reduction of a quiver (QVR on stdout, trace with --json)", 1, reduce);
    reduce_cmd->add_option("--order", o.order, "'lex' or a file listing the maximal simple paths, one per line")->capture_default_str();

    add("check-iso-pathreach", "exit 0 iff the path and reachability categories are isomorphic", 1, check_iso);
    add("poset", "reachability poset R(Q)", 1, poset);
    add("tq", "underlying quiver T(Q) of R(Q)", 1, tq)->add_flag("--strip-loops", o.strip_loops, "omit identity loops");
    add("algebra", "commuting algebra summary: dimension, HH^0/HH^1, global dimension bounds", 1, algebra);
    add("morita", "exit 0 iff the two commuting algebras are Morita equivalent; JSON witness on stdout", 2, morita);

    auto* homology_cmd = add("homology", "Betti numbers of the order complex of R(Q)", 1, homology);
    field(homology_cmd);
    max_dim(homology_cmd, "highest Betti degree (default: complex dimension)");

    auto* persist_cmd = add("persist", "Betti curves of a filtered quiver (CSV by default)", 1, persist);
    field(persist_cmd);
    max_dim(persist_cmd, "highest Betti degree (default 1)");
    persist_cmd->add_option("--jobs", o.jobs, "worker threads, 0 = all cores")->capture_default_str();
    persist_cmd->add_flag("--gnuplot", o.gnuplot, "emit a gnuplot script instead of CSV");

    auto* oracle_cmd = add("oracle", "Hochschild cochain oracle versus nerve Betti numbers of R(Q)", 1, oracle);
    field(oracle_cmd);
    max_dim(oracle_cmd, "highest degree, at most 3 (default 2)");

    auto* selftest_cmd = add("selftest", "randomized property checks; QUIVERREACH_SEED fixes the generator", 0, run_selftest);
    selftest_cmd->add_option("--samples", o.samples, "samples per property")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        validate_field(o.field);
        if (o.json && o.gnuplot) throw UsageError("--json and --gnuplot are exclusive");
        return handler(o, out);
    } catch (const UsageError& e) {
        err << "quiverreach: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "quiverreach: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const PreconditionError& e) {
        err << "quiverreach: " << e.what() << '\n';
        return kPrecondition;
    } catch (const InputError& e) {
        err << "quiverreach: " << e.what() << '\n';
        return kPrecondition;
    }
}

}  // namespace quiverreach::cli
