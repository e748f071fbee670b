#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "quiverreach/io.hpp"

namespace quiverreach::cli {

nlohmann::json poset_json(const Quiver& q, const ReachabilityPoset& r) {
    const auto& p = r.poset;
    nlohmann::json classes = nlohmann::json::array(), relations = nlohmann::json::array(), covers = nlohmann::json::array();
    std::vector<std::vector<std::string>> members(p.size());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) members[r.class_of[v]].push_back(q.vertex_id(v));
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        classes.push_back(m);
    }
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
            if (!p.less(a, b)) continue;
            relations.push_back({p.elements()[a], p.elements()[b]});
            bool cover = true;
            for (std::size_t c = 0; c < p.size() && cover; ++c) cover = !(p.less(a, c) && p.less(c, b));
            if (cover) covers.push_back({p.elements()[a], p.elements()[b]});
        }
    return {{"elements", p.elements()}, {"classes", classes}, {"relations", relations}, {"covers", covers}};
}

nlohmann::json bigon_json(const Quiver& q, const QuasiBigon& b) {
    return {{"x", q.vertex_id(b.x)}, {"y", q.vertex_id(b.y)}, {"upper", to_json(q, b.upper)}, {"lower", to_json(q, b.lower)}};
}

nlohmann::json verdict_json(const Quiver& q, const PathReachVerdict& v) {
    nlohmann::json j{{"isomorphic", v.isomorphic}};
    if (const auto* cycle = std::get_if<Path>(&v.certificate))
        j["certificate"] = {{"kind", "cycle"}, {"cycle", to_json(q, *cycle)}};
    else if (const auto* b = std::get_if<QuasiBigon>(&v.certificate))
        j["certificate"] = {{"kind", "quasi_bigon"}, {"quasi_bigon", bigon_json(q, *b)}};
    else
        j["certificate"] = nullptr;
    return j;
}

nlohmann::json reduction_json(const ReductionResult& r) {
    nlohmann::json steps = nlohmann::json::array(), snapshots = nlohmann::json::array();
    for (const auto& s : r.trace.steps) {
        nlohmann::json step{{"round", s.round}, {"path", s.path}, {"image", s.image}, {"contracted", s.contracted},
                            {"snapshot", s.snapshot}};
        step["skip_reason"] = s.contracted ? nlohmann::json(nullptr) : nlohmann::json(s.skip_reason);
        steps.push_back(std::move(step));
    }
    for (const auto& q : r.trace.snapshots) snapshots.push_back(to_json(q));
    const auto alt = is_simple_alternating(r.reduced);
    return {{"reduced", to_json(r.reduced)},
            {"simple_alternating", alt.alternating},
            {"trace", {{"steps", steps}, {"snapshots", snapshots}}}};
}

nlohmann::json algebra_json(const Quiver& q, const AlgebraSummary& s) {
    nlohmann::json j{{"dimension", s.dimension},
                     {"incidence_dimension", s.incidence_dimension},
                     {"gldim_upper", s.gldim.upper_bound},
                     {"antichain", s.gldim.antichain}};
    if (s.happel) {
        j["hh0"] = s.happel->hh0.str();
        j["hh1"] = s.happel->hh1.str();
    } else {
        j["hh0"] = nullptr;
        j["hh1"] = nullptr;
    }
    j["gldim_is_one"] = s.gldim.is_one ? nlohmann::json(*s.gldim.is_one) : nlohmann::json(nullptr);
    if (s.gldim.antichain) j["gldim"] = 0;
    if (s.gldim.b11) {
        const auto r = reachability_poset(q);
        const auto& e = r.poset.elements();
        j["b11"] = {{"bottom", e[s.gldim.b11->bottom]},
                    {"left", e[s.gldim.b11->left]},
                    {"right", e[s.gldim.b11->right]},
                    {"top", e[s.gldim.b11->top]}};
    }
    return j;
}

Table& Table::row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    return *this;
}

std::string Table::str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows_) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return out.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string list(const std::vector<std::size_t>& values) {
    std::vector<std::string> items;
    for (auto v : values) items.push_back(std::to_string(v));
    return "(" + join(items, ",") + ")";
}

}  // namespace quiverreach::cli
