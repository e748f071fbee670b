#include "quiverreach/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quiverreach/error.hpp"
#include "quiverreach/graph.hpp"

namespace quiverreach {

namespace {

bool lex_less(const Quiver& q, const Path& a, const Path& b) {
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                        [&](EdgeIndex x, EdgeIndex y) { return q.edge(x).id < q.edge(y).id; });
}

std::vector<VertexIndex> ids_sorted(const Quiver& q) {
    std::vector<VertexIndex> order(q.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return q.vertex_id(a) < q.vertex_id(b); });
    return order;
}

}  // namespace

bool is_maximal_simple_path(const Quiver& q, const Path& p) {
    const auto vertices = path_vertices(q, p);
    const std::set<VertexIndex> on_path(vertices.begin(), vertices.end());
    for (EdgeIndex e : q.in_edges(p.start))
        if (!q.edge(e).is_loop() && !on_path.contains(q.edge(e).source)) return false;
    for (EdgeIndex e : q.out_edges(vertices.back()))
        if (!q.edge(e).is_loop() && !on_path.contains(q.edge(e).target)) return false;
    return true;
}

std::vector<Path> maximal_simple_paths(const Quiver& q) {
    std::vector<Path> found;
    std::vector<bool> visited(q.vertex_count(), false);
    Path current;
    std::function<void(VertexIndex)> walk = [&](VertexIndex v) {
        for (EdgeIndex e : q.out_edges(v)) {
            const VertexIndex w = q.edge(e).target;
            if (visited[w]) continue;  // loops land here too
            visited[w] = true;
            current.edges.push_back(e);
            if (is_maximal_simple_path(q, current)) found.push_back(current);
            walk(w);
            current.edges.pop_back();
            visited[w] = false;
        }
    };
    for (VertexIndex s = 0; s < q.vertex_count(); ++s) {
        current = Path{s, {}};
        visited[s] = true;
        walk(s);
        visited[s] = false;
    }
    std::sort(found.begin(), found.end(), [&](const Path& a, const Path& b) { return lex_less(q, a, b); });
    return found;
}

Quiver contract_path(const Quiver& q, const Path& g) {
    if (!is_path(q, g)) throw PreconditionError(Violation::NotSimple, "edges do not form a path");
    for (EdgeIndex e : g.edges)
        if (q.edge(e).is_loop())
            throw PreconditionError(Violation::LoopContraction, "path contains loop '" + q.edge(e).id + "'");
    if (!is_simple_path(q, g)) throw PreconditionError(Violation::NotSimple, "path repeats a vertex");
    if (!is_maximal_simple_path(q, g)) throw PreconditionError(Violation::NotMaximal, "path extends to a longer simple path");

    const auto vertices = path_vertices(q, g);
    std::vector<VertexIndex> merged(vertices.begin() + 1, vertices.end());
    std::set<EdgeIndex> contracted;
    for (std::size_t i = 1; i < g.edges.size(); ++i) contracted.insert(g.edges[i]);

    std::vector<VertexIndex> image(q.vertex_count());
    std::iota(image.begin(), image.end(), 0);
    if (merged.size() > 1) {
        const VertexIndex keep = *std::min_element(
            merged.begin(), merged.end(), [&](VertexIndex a, VertexIndex b) { return q.vertex_id(a) < q.vertex_id(b); });
        for (VertexIndex v : merged) image[v] = keep;
    }

    Quiver out;
    std::vector<VertexIndex> renumber(q.vertex_count());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v)
        if (image[v] == v) renumber[v] = out.add_vertex(q.vertex_id(v));
    for (EdgeIndex e = 0; e < q.edge_count(); ++e) {
        if (contracted.contains(e)) continue;
        const auto& edge = q.edge(e);
        out.add_edge(edge.id, renumber[image[edge.source]], renumber[image[edge.target]]);
    }
    return out;
}

bool has_simple_path_of_length_two(const Quiver& q) {
    for (const auto& a : q.edges()) {
        if (a.is_loop()) continue;
        for (EdgeIndex b : q.out_edges(a.target)) {
            const VertexIndex w = q.edge(b).target;
            if (w != a.target && w != a.source) return true;
        }
    }
    return false;
}

namespace {

/// Image of an original path in the current quiver: its surviving edges.
std::optional<Path> surviving_image(const Quiver& current, const std::vector<std::string>& ids,
                                    std::vector<std::string>& image_ids) {
    Path image;
    image_ids.clear();
    for (const auto& id : ids)
        if (auto e = current.find_edge(id)) {
            image.edges.push_back(*e);
            image_ids.push_back(id);
        }
    if (image.edges.empty()) return std::nullopt;
    image.start = current.edge(image.edges.front()).source;
    return image;
}

}  // namespace

ReductionResult path_reduction(const Quiver& q, const PathOrder& order) {
    const auto initial = maximal_simple_paths(q);
    std::vector<std::vector<std::string>> visit;
    for (const auto& p : initial) visit.push_back(path_edge_ids(q, p));

    if (const auto* explicit_order = std::get_if<1>(&order)) {
        auto expected = visit, given = *explicit_order;
        std::sort(expected.begin(), expected.end());
        std::sort(given.begin(), given.end());
        if (expected != given)
            throw PreconditionError(Violation::InvalidOrder, "order is not a permutation of the maximal simple paths");
        visit = *explicit_order;
    }

    ReductionResult result{q, {}};
    result.trace.snapshots.push_back(q);
    for (std::size_t round = 0;; ++round) {
        if (round > 0) {
            if (!has_simple_path_of_length_two(result.reduced)) break;
            visit.clear();
            for (const auto& p : maximal_simple_paths(result.reduced)) visit.push_back(path_edge_ids(result.reduced, p));
        }
        for (const auto& ids : visit) {
            ReductionStep step;
            step.round = round;
            step.path = ids;
            const auto image = surviving_image(result.reduced, ids, step.image);
            if (!image) {
                step.skip_reason = "all edges contracted";
            } else if (!is_simple_path(result.reduced, *image)) {
                step.skip_reason = "image is not a simple path";
            } else if (!is_maximal_simple_path(result.reduced, *image)) {
                step.skip_reason = "image is not maximal";
            } else {
                step.contracted = true;
                if (image->length() > 1) {
                    result.reduced = contract_path(result.reduced, *image);
                    result.trace.snapshots.push_back(result.reduced);
                }
            }
            step.snapshot = result.trace.snapshots.size() - 1;
            result.trace.steps.push_back(std::move(step));
        }
        if (round == 0 && visit.empty()) break;
    }
    return result;
}

AlternatingCheck is_simple_alternating(const Quiver& q) {
    AlternatingCheck check;
    std::set<std::pair<VertexIndex, VertexIndex>> seen;
    for (const auto& e : q.edges()) {
        if (e.is_loop()) {
            check.defect = AlternationDefect::Loop;
            check.culprit = e.id;
            return check;
        }
        if (!seen.emplace(e.source, e.target).second) {
            check.defect = AlternationDefect::ParallelEdges;
            check.culprit = e.id;
            return check;
        }
    }
    for (VertexIndex v : ids_sorted(q)) {
        const bool has_in = !q.in_edges(v).empty(), has_out = !q.out_edges(v).empty();
        if (has_in && has_out) {
            check.defect = AlternationDefect::MixedVertex;
            check.culprit = q.vertex_id(v);
            check.sources.clear();
            check.sinks.clear();
            return check;
        }
        (has_in ? check.sinks : check.sources).push_back(v);
    }
    check.alternating = true;
    return check;
}

namespace {

/// Residual network for the unit vertex-capacity flow between x and y.
class DisjointPathSearch {
public:
    DisjointPathSearch(const Quiver& q, VertexIndex x, VertexIndex y) : q_(q), x_(x), y_(y) {
        const std::size_t n = q.vertex_count();
        adjacency_.resize(2 * n);
        for (VertexIndex v = 0; v < n; ++v)
            if (v != x && v != y) add_arc(in(v), out(v), std::nullopt);
        std::vector<EdgeIndex> order(q.edge_count());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) { return q.edge(a).id < q.edge(b).id; });
        for (EdgeIndex e : order) {
            const auto& edge = q.edge(e);
            if (edge.is_loop() || edge.target == x || edge.source == y) continue;
            add_arc(out(edge.source), in(edge.target), e);
        }
    }

    std::optional<std::pair<Path, Path>> two_paths() {
        if (!augment() || !augment()) return std::nullopt;
        std::vector<Path> paths;
        for (std::size_t a : adjacency_[out(x_)]) {
            if (!carries_flow(a)) continue;
            Path p{x_, {}};
            std::size_t arc = a;
            while (true) {
                p.edges.push_back(*arcs_[arc].edge);
                const VertexIndex v = q_.edge(*arcs_[arc].edge).target;
                if (v == y_) break;
                arc = next_flow_edge(out(v));
            }
            paths.push_back(std::move(p));
        }
        return std::pair{paths.at(0), paths.at(1)};
    }

private:
    struct Arc {
        std::size_t to;
        int capacity;
        std::size_t reverse;
        std::optional<EdgeIndex> edge;
        bool forward;
    };

    std::size_t in(VertexIndex v) const { return v == x_ ? 2 * v + 1 : 2 * v; }
    std::size_t out(VertexIndex v) const { return v == y_ ? 2 * v : 2 * v + 1; }

    void add_arc(std::size_t from, std::size_t to, std::optional<EdgeIndex> edge) {
        adjacency_[from].push_back(arcs_.size());
        arcs_.push_back({to, 1, arcs_.size() + 1, edge, true});
        adjacency_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0, arcs_.size() - 1, edge, false});
    }

    bool carries_flow(std::size_t a) const { return arcs_[a].forward && arcs_[a].edge && arcs_[a].capacity == 0; }

    std::size_t next_flow_edge(std::size_t node) const {
        for (std::size_t a : adjacency_[node])
            if (carries_flow(a)) return a;
        throw std::logic_error("flow decomposition lost its way");
    }

    bool augment() {
        const std::size_t source = out(x_), sink = in(y_);
        std::vector<std::optional<std::size_t>> via(adjacency_.size());
        std::vector<bool> seen(adjacency_.size(), false);
        std::vector<std::size_t> queue{source};
        seen[source] = true;
        for (std::size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
            for (std::size_t a : adjacency_[queue[head]]) {
                const auto& arc = arcs_[a];
                if (arc.capacity > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    via[arc.to] = a;
                    queue.push_back(arc.to);
                }
            }
        }
        if (!seen[sink]) return false;
        for (std::size_t node = sink; node != source;) {
            const std::size_t a = *via[node];
            --arcs_[a].capacity;
            ++arcs_[arcs_[a].reverse].capacity;
            node = arcs_[arcs_[a].reverse].to;
        }
        return true;
    }

    const Quiver& q_;
    VertexIndex x_, y_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

QuasiBigon make_bigon(const Quiver& q, VertexIndex x, VertexIndex y, Path a, Path b) {
    if (lex_less(q, b, a)) std::swap(a, b);
    return QuasiBigon{x, y, std::move(a), std::move(b)};
}

}  // namespace

std::optional<QuasiBigon> find_quasi_bigon(const Quiver& q) {
    const auto order = ids_sorted(q);
    for (VertexIndex x : order)
        for (VertexIndex y : order) {
            if (x == y) continue;
            DisjointPathSearch search(q, x, y);
            if (auto paths = search.two_paths()) return make_bigon(q, x, y, paths->first, paths->second);
        }
    return std::nullopt;
}

bool has_diagonal(const Quiver& q, const QuasiBigon& b) {
    auto invalid = [](const std::string& why) { return PreconditionError(Violation::InvalidOccurrence, why); };
    if (b.x == b.y || b.x >= q.vertex_count() || b.y >= q.vertex_count()) throw invalid("endpoints must be distinct vertices");
    for (const Path* p : {&b.upper, &b.lower}) {
        if (p->start != b.x || !is_simple_path(q, *p) || p->edges.empty() || path_end(q, *p) != b.y)
            throw invalid("both sides must be simple paths from x to y");
    }
    if (b.upper == b.lower) throw invalid("the two sides coincide");
    const auto up = path_vertices(q, b.upper), down = path_vertices(q, b.lower);
    const std::set<VertexIndex> inner_up(up.begin() + 1, up.end() - 1);
    for (std::size_t i = 1; i + 1 < down.size(); ++i)
        if (inner_up.contains(down[i])) throw invalid("sides share an internal vertex");

    const auto reach = reachability_closure(q);
    const bool diagonal = reach(b.y, b.x);

    const auto scc = scc_partition(q);
    bool strongly_connected = true;
    for (const auto* side : {&up, &down})
        for (VertexIndex v : *side) strongly_connected = strongly_connected && scc.block_of[v] == scc.block_of[b.x];
    if (diagonal != strongly_connected) throw std::logic_error("diagonal and strong connectivity disagree");
    return diagonal;
}

namespace {

/// The first two paths from s to t in edge-id order (acyclic quivers only).
std::pair<Path, Path> two_distinct_paths(const Quiver& q, VertexIndex s, VertexIndex t) {
    std::vector<Path> found;
    Path current{s, {}};
    std::function<void(VertexIndex)> walk = [&](VertexIndex v) {
        if (found.size() == 2) return;
        if (v == t) {
            found.push_back(current);
            return;
        }
        for (EdgeIndex e : out_edges_by_id(q, v)) {
            current.edges.push_back(e);
            walk(q.edge(e).target);
            current.edges.pop_back();
            if (found.size() == 2) return;
        }
    };
    walk(s);
    return {found.at(0), found.at(1)};
}

/// Cuts two distinct s -> t paths of a DAG at their first divergence and the
/// next vertex where they meet again.
QuasiBigon divergence_bigon(const Quiver& q, const Path& p1, const Path& p2) {
    std::size_t k = 0;
    while (p1.edges[k] == p2.edges[k]) ++k;
    const VertexIndex x = k == 0 ? p1.start : q.edge(p1.edges[k - 1]).target;
    const Path tail1{x, {p1.edges.begin() + static_cast<std::ptrdiff_t>(k), p1.edges.end()}};
    const Path tail2{x, {p2.edges.begin() + static_cast<std::ptrdiff_t>(k), p2.edges.end()}};
    const auto v1 = path_vertices(q, tail1), v2 = path_vertices(q, tail2);
    for (std::size_t j = 1; j < v2.size(); ++j) {
        auto it = std::find(v1.begin() + 1, v1.end(), v2[j]);
        if (it == v1.end()) continue;
        const auto i = static_cast<std::ptrdiff_t>(it - v1.begin());
        Path upper{x, {tail1.edges.begin(), tail1.edges.begin() + i}};
        Path lower{x, {tail2.edges.begin(), tail2.edges.begin() + static_cast<std::ptrdiff_t>(j)}};
        return make_bigon(q, x, v2[j], std::move(upper), std::move(lower));
    }
    throw std::logic_error("paths with a common end never reconverge");
}

}  // namespace

PathReachVerdict path_reach_isomorphic(const Quiver& q) {
    if (!is_connected(q)) throw PreconditionError(Violation::Disconnected, "quiver is not connected");
    if (auto cycle = find_directed_cycle(q)) return {false, *cycle};

    const auto counts = count_paths_saturating(q, 2);
    const auto order = ids_sorted(q);
    for (VertexIndex s : order)
        for (VertexIndex t : order)
            if (counts[s][t] >= 2) {
                const auto [p1, p2] = two_distinct_paths(q, s, t);
                return {false, divergence_bigon(q, p1, p2)};
            }
    return {true, std::monostate{}};
}

}  // namespace quiverreach
