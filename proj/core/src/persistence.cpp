#include "quiverreach/persistence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quiverreach/error.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/homology.hpp"
#include "quiverreach/io.hpp"
#include "quiverreach/reach.hpp"

namespace quiverreach {

FilteredQuiver::FilteredQuiver(Quiver q, std::vector<Decimal> vertex_values, std::vector<Decimal> edge_values)
    : quiver_(std::move(q)), vertex_values_(std::move(vertex_values)), edge_values_(std::move(edge_values)) {
    if (vertex_values_.size() != quiver_.vertex_count() || edge_values_.size() != quiver_.edge_count())
        throw PreconditionError(Violation::InvalidArgument, "one filtration value per vertex and edge is required");
    for (EdgeIndex e = 0; e < quiver_.edge_count(); ++e) {
        const auto& edge = quiver_.edge(e);
        for (VertexIndex v : {edge.source, edge.target})
            if (edge_values_[e] < vertex_values_[v])
                throw PreconditionError(Violation::NonMonotone, "edge '" + edge.id + "' at " + edge_values_[e].str() +
                                                                    " precedes vertex '" + quiver_.vertex_id(v) +
                                                                    "' at " + vertex_values_[v].str());
    }
}

std::vector<Decimal> FilteredQuiver::critical_values() const {
    std::set<Decimal> values(vertex_values_.begin(), vertex_values_.end());
    values.insert(edge_values_.begin(), edge_values_.end());
    return {values.begin(), values.end()};
}

FilteredQuiver parse_filtration(std::string_view text) {
    const auto lines = tokenize_lines(text);
    auto value = [](const TokenLine& line, const std::string& token) {
        try {
            return Decimal::parse(token);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
    };

    Quiver q;
    std::vector<Decimal> vertex_values, edge_values;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "v") {
            if (t.size() != 3) throw ParseError(line.number, "expected 'v <id> <t>'");
            if (q.find_vertex(t[1])) throw ParseError(line.number, "duplicate vertex '" + t[1] + "'");
            q.add_vertex(t[1]);
            vertex_values.push_back(value(line, t[2]));
        } else if (t[0] != "e") {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] != "e") continue;
        if (t.size() != 5) throw ParseError(line.number, "expected 'e <id> <src> <dst> <t>'");
        if (q.find_edge(t[1])) throw ParseError(line.number, "duplicate edge '" + t[1] + "'");
        for (const auto& end : {t[2], t[3]})
            if (!q.find_vertex(end)) throw ParseError(line.number, "undeclared vertex '" + end + "'");
        q.add_edge(t[1], std::string_view(t[2]), std::string_view(t[3]));
        edge_values.push_back(value(line, t[4]));
    }
    return FilteredQuiver(std::move(q), std::move(vertex_values), std::move(edge_values));
}

std::string write_fqvr(const FilteredQuiver& fq) {
    std::ostringstream out;
    const auto& q = fq.quiver();
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) out << "v " << q.vertex_id(v) << ' ' << fq.vertex_value(v).str() << '\n';
    for (EdgeIndex e = 0; e < q.edge_count(); ++e) {
        const auto& edge = q.edge(e);
        out << "e " << edge.id << ' ' << q.vertex_id(edge.source) << ' ' << q.vertex_id(edge.target) << ' '
            << fq.edge_value(e).str() << '\n';
    }
    return out.str();
}

Quiver sublevel(const FilteredQuiver& fq, const Decimal& t) {
    const auto& q = fq.quiver();
    Quiver s;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v)
        if (fq.vertex_value(v) <= t) s.add_vertex(q.vertex_id(v));
    for (EdgeIndex e = 0; e < q.edge_count(); ++e)
        if (fq.edge_value(e) <= t) {
            const auto& edge = q.edge(e);
            s.add_edge(edge.id, std::string_view(q.vertex_id(edge.source)), std::string_view(q.vertex_id(edge.target)));
        }
    return s;
}

std::optional<std::vector<std::size_t>> BettiCurve::at(const Decimal& t) const {
    auto it = std::upper_bound(thresholds.begin(), thresholds.end(), t);
    if (it == thresholds.begin()) return std::nullopt;
    return betti[static_cast<std::size_t>(it - thresholds.begin()) - 1];
}

namespace {

/// Inclusion of consecutive sublevels on reachability posets; true iff it is
/// injective on objects (always monotone, since paths persist).
bool inclusion_is_injective(const Quiver& small, const Quiver& large) {
    const auto rs = reachability_poset(small), rl = reachability_poset(large);
    std::map<std::size_t, std::size_t> image;
    std::set<std::size_t> hit;
    for (VertexIndex v = 0; v < small.vertex_count(); ++v) {
        const std::size_t from = rs.class_of[v];
        const std::size_t to = rl.class_of[large.vertex_index(small.vertex_id(v))];
        auto [it, fresh] = image.emplace(from, to);
        if (fresh && !hit.insert(to).second) return false;
    }
    for (auto [a, fa] : image)
        for (auto [b, fb] : image)
            if (rs.poset.leq(a, b) && !rl.poset.leq(fa, fb)) throw std::logic_error("inclusion is not monotone");
    return true;
}

}  // namespace

BettiCurve hh_betti_curves(const FilteredQuiver& fq, std::uint64_t characteristic, std::optional<std::size_t> max_dim,
                           std::size_t jobs) {
    validate_field(characteristic);
    BettiCurve curve;
    curve.thresholds = fq.critical_values();
    const std::size_t n = curve.thresholds.size();
    std::vector<Quiver> levels(n);
    curve.betti.resize(n);
    std::vector<char> acyclic(n, 0);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                levels[i] = sublevel(fq, curve.thresholds[i]);
                curve.betti[i] = nerve_betti_of_quiver(levels[i], characteristic, max_dim);
                acyclic[i] = is_acyclic(levels[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(n, 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::size_t width = 0;
    for (const auto& row : curve.betti) width = std::max(width, row.size());
    for (auto& row : curve.betti) row.resize(width, 0);

    curve.functorial = std::all_of(acyclic.begin(), acyclic.end(), [](char a) { return a != 0; });
    if (curve.functorial)
        for (std::size_t i = 1; i < n; ++i)
            if (!inclusion_is_injective(levels[i - 1], levels[i]))
                throw std::logic_error("acyclic sublevels collapsed a vertex");
    return curve;
}

std::string curve_csv(const BettiCurve& curve) {
    std::ostringstream out;
    out << 't';
    const std::size_t width = curve.betti.empty() ? 0 : curve.betti.front().size();
    for (std::size_t k = 0; k < width; ++k) out << ",beta" << k;
    out << '\n';
    for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
        out << curve.thresholds[i].str();
        for (std::size_t b : curve.betti[i]) out << ',' << b;
        out << '\n';
    }
    return out.str();
}

nlohmann::json curve_json(const BettiCurve& curve) {
    nlohmann::json j;
    j["thresholds"] = nlohmann::json::array();
    for (const auto& t : curve.thresholds) j["thresholds"].push_back(t.str());
    j["betti"] = curve.betti;
    j["functorial"] = curve.functorial;
    return j;
}

std::string curve_gnuplot(const BettiCurve& curve, const std::string& title) {
    std::ostringstream out;
    const std::size_t width = curve.betti.empty() ? 0 : curve.betti.front().size();
    out << "$curve << EOD\n" << curve_csv(curve) << "EOD\n";
    out << "set datafile separator ','\n";
    out << "set key autotitle columnhead\n";
    out << "set title \"" << title << "\"\n";
    out << "set xlabel 't'\nset ylabel 'beta'\n";
    out << "plot";
    for (std::size_t k = 0; k < width; ++k)
        out << (k ? "," : "") << " $curve using 1:" << k + 2 << " with steps lw 2";
    out << '\n';
    return out.str();
}

}  // namespace quiverreach
