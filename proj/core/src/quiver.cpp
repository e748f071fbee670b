#include "quiverreach/quiver.hpp"

#include <set>

#include "quiverreach/error.hpp"

namespace quiverreach {

const char* to_string(Violation v) noexcept {
    switch (v) {
        case Violation::DuplicateId: return "DuplicateId";
        case Violation::UnknownId: return "UnknownId";
        case Violation::CyclicQuiver: return "CyclicQuiver";
        case Violation::Disconnected: return "Disconnected";
        case Violation::NotSimple: return "NotSimple";
        case Violation::NotMaximal: return "NotMaximal";
        case Violation::LoopContraction: return "LoopContraction";
        case Violation::InvalidOrder: return "InvalidOrder";
        case Violation::InvalidOccurrence: return "InvalidOccurrence";
        case Violation::NotAMorphism: return "NotAMorphism";
        case Violation::InvalidBasisElement: return "InvalidBasisElement";
        case Violation::TooLarge: return "TooLarge";
        case Violation::BadDegree: return "BadDegree";
        case Violation::BadField: return "BadField";
        case Violation::NonMonotone: return "NonMonotone";
        case Violation::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

VertexIndex Quiver::add_vertex(std::string id) {
    if (vertex_lookup_.contains(id))
        throw PreconditionError(Violation::DuplicateId, "vertex '" + id + "' declared twice");
    const VertexIndex index = vertices_.size();
    vertex_lookup_.emplace(id, index);
    vertices_.push_back(std::move(id));
    out_.emplace_back();
    in_.emplace_back();
    return index;
}

EdgeIndex Quiver::add_edge(std::string id, VertexIndex source, VertexIndex target) {
    if (source >= vertices_.size() || target >= vertices_.size())
        throw PreconditionError(Violation::UnknownId, "edge '" + id + "' references a missing vertex");
    if (edge_lookup_.contains(id))
        throw PreconditionError(Violation::DuplicateId, "edge '" + id + "' declared twice");
    const EdgeIndex index = edges_.size();
    edge_lookup_.emplace(id, index);
    edges_.push_back(Edge{std::move(id), source, target});
    out_[source].push_back(index);
    in_[target].push_back(index);
    return index;
}

EdgeIndex Quiver::add_edge(std::string id, std::string_view source, std::string_view target) {
    return add_edge(std::move(id), vertex_index(source), vertex_index(target));
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
    if (auto it = vertex_lookup_.find(id); it != vertex_lookup_.end()) return it->second;
    return std::nullopt;
}

std::optional<EdgeIndex> Quiver::find_edge(std::string_view id) const {
    if (auto it = edge_lookup_.find(id); it != edge_lookup_.end()) return it->second;
    return std::nullopt;
}

VertexIndex Quiver::vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw PreconditionError(Violation::UnknownId, "no vertex '" + std::string(id) + "'");
}

EdgeIndex Quiver::edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw PreconditionError(Violation::UnknownId, "no edge '" + std::string(id) + "'");
}

std::vector<std::vector<VertexIndex>> Quiver::successors() const {
    std::vector<std::vector<VertexIndex>> adj(vertices_.size());
    for (const auto& e : edges_) adj[e.source].push_back(e.target);
    return adj;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

bool is_path(const Quiver& q, const Path& p) {
    if (p.start >= q.vertex_count()) return false;
    VertexIndex at = p.start;
    for (EdgeIndex e : p.edges) {
        if (e >= q.edge_count() || q.edge(e).source != at) return false;
        at = q.edge(e).target;
    }
    return true;
}

std::vector<VertexIndex> path_vertices(const Quiver& q, const Path& p) {
    std::vector<VertexIndex> out{p.start};
    for (EdgeIndex e : p.edges) out.push_back(q.edge(e).target);
    return out;
}

VertexIndex path_end(const Quiver& q, const Path& p) {
    return p.edges.empty() ? p.start : q.edge(p.edges.back()).target;
}

bool is_simple_path(const Quiver& q, const Path& p) {
    if (!is_path(q, p)) return false;
    std::set<VertexIndex> seen;
    for (VertexIndex v : path_vertices(q, p))
        if (!seen.insert(v).second) return false;
    return true;
}

std::vector<std::string> path_edge_ids(const Quiver& q, const Path& p) {
    std::vector<std::string> ids;
    ids.reserve(p.edges.size());
    for (EdgeIndex e : p.edges) ids.push_back(q.edge(e).id);
    return ids;
}

namespace {

const std::string& lookup(const std::map<std::string, std::string, std::less<>>& map, const std::string& key,
                          const char* what) {
    auto it = map.find(key);
    if (it == map.end())
        throw PreconditionError(Violation::UnknownId, std::string(what) + " map is not defined on '" + key + "'");
    return it->second;
}

}  // namespace

MorphismCheck validate_morphism(const QuiverMorphism& f, const Quiver& src, const Quiver& dst) {
    for (const auto& [from, to] : f.vertex_map) {
        if (!src.find_vertex(from))
            throw PreconditionError(Violation::UnknownId, "vertex map domain has unknown vertex '" + from + "'");
        if (!dst.find_vertex(to))
            throw PreconditionError(Violation::UnknownId, "vertex map sends '" + from + "' outside the codomain");
    }
    for (const auto& [from, to] : f.edge_map) {
        if (!src.find_edge(from))
            throw PreconditionError(Violation::UnknownId, "edge map domain has unknown edge '" + from + "'");
        if (!dst.find_edge(to))
            throw PreconditionError(Violation::UnknownId, "edge map sends '" + from + "' outside the codomain");
    }
    for (const auto& v : src.vertex_ids()) lookup(f.vertex_map, v, "vertex");

    MorphismCheck check;
    for (const auto& e : src.edges()) {
        const Edge& image = dst.edge(dst.edge_index(lookup(f.edge_map, e.id, "edge")));
        const auto& fs = lookup(f.vertex_map, src.vertex_id(e.source), "vertex");
        const auto& ft = lookup(f.vertex_map, src.vertex_id(e.target), "vertex");
        if (!check.valid) continue;
        if (fs != dst.vertex_id(image.source)) {
            check.valid = false;
            check.first_violation = SquareViolation{e.id, Square::Source};
        } else if (ft != dst.vertex_id(image.target)) {
            check.valid = false;
            check.first_violation = SquareViolation{e.id, Square::Target};
        }
    }
    return check;
}

QuiverMorphism identity_morphism(const Quiver& q) {
    QuiverMorphism f;
    for (const auto& v : q.vertex_ids()) f.vertex_map.emplace(v, v);
    for (const auto& e : q.edges()) f.edge_map.emplace(e.id, e.id);
    return f;
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
    QuiverMorphism h;
    for (const auto& [from, mid] : f.vertex_map) h.vertex_map.emplace(from, lookup(g.vertex_map, mid, "vertex"));
    for (const auto& [from, mid] : f.edge_map) h.edge_map.emplace(from, lookup(g.edge_map, mid, "edge"));
    return h;
}

Path map_path(const QuiverMorphism& f, const Quiver& src, const Quiver& dst, const Path& p) {
    Path image;
    image.start = dst.vertex_index(lookup(f.vertex_map, src.vertex_id(p.start), "vertex"));
    for (EdgeIndex e : p.edges) image.edges.push_back(dst.edge_index(lookup(f.edge_map, src.edge(e).id, "edge")));
    return image;
}

}  // namespace quiverreach
