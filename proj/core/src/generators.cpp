#include "quiverreach/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "quiverreach/graph.hpp"

namespace quiverreach {

namespace {

std::string vid(std::size_t i) { return "v" + std::to_string(i); }
std::string eid(std::size_t i) { return "e" + std::to_string(i); }

Quiver vertices(std::size_t n) {
    Quiver q;
    for (std::size_t i = 0; i < n; ++i) q.add_vertex(vid(i));
    return q;
}

std::size_t uniform(Rng& rng, std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); }

bool has_edge(const Quiver& q, VertexIndex s, VertexIndex t) {
    const auto& out = q.out_edges(s);
    return std::any_of(out.begin(), out.end(), [&](EdgeIndex e) { return q.edge(e).target == t; });
}

/// Adds up to `extra` random edges honoring the options.
void sprinkle(Rng& rng, Quiver& q, std::size_t extra, RandomQuiverOptions options) {
    const std::size_t n = q.vertex_count();
    for (std::size_t tries = 0, added = 0; added < extra && tries < 50 * (extra + 1); ++tries) {
        const VertexIndex s = uniform(rng, n), t = uniform(rng, n);
        if ((s == t && !options.loops) || (!options.parallel && has_edge(q, s, t))) continue;
        q.add_edge(eid(q.edge_count()), s, t);
        ++added;
    }
}

}  // namespace

Quiver linear_quiver(std::size_t n) {
    Quiver q = vertices(n + 1);
    for (std::size_t i = 0; i < n; ++i) q.add_edge(eid(i), i, i + 1);
    return q;
}

Quiver bidirected_linear(std::size_t n) {
    Quiver q = vertices(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        q.add_edge("f" + std::to_string(i), i, i + 1);
        q.add_edge("b" + std::to_string(i), i + 1, i);
    }
    return q;
}

Quiver directed_cycle(std::size_t k) {
    Quiver q = vertices(k);
    for (std::size_t i = 0; i < k; ++i) q.add_edge(eid(i), i, (i + 1) % k);
    return q;
}

Quiver bigon(std::size_t m, std::size_t n) {
    Quiver q;
    const VertexIndex x = q.add_vertex("x"), y = q.add_vertex("y");
    auto side = [&](const std::string& name, std::size_t len) {
        VertexIndex prev = x;
        for (std::size_t i = 1; i <= len; ++i) {
            const VertexIndex v = q.add_vertex(name + std::to_string(i));
            q.add_edge(name + "e" + std::to_string(i), prev, v);
            prev = v;
        }
        q.add_edge(name + "e" + std::to_string(len + 1), prev, y);
    };
    side("v", m);
    side("w", n);
    return q;
}

Quiver random_quiver(Rng& rng, std::size_t n, std::size_t m, RandomQuiverOptions options) {
    Quiver q = vertices(n);
    if (n > 0) sprinkle(rng, q, m, options);
    return q;
}

Quiver random_connected_quiver(Rng& rng, std::size_t n, std::size_t extra, RandomQuiverOptions options) {
    Quiver q = vertices(n);
    for (VertexIndex v = 1; v < n; ++v) {
        const VertexIndex u = uniform(rng, v);
        if (uniform(rng, 2)) q.add_edge(eid(q.edge_count()), u, v);
        else q.add_edge(eid(q.edge_count()), v, u);
    }
    if (n > 0) sprinkle(rng, q, extra, options);
    return q;
}

Quiver random_strongly_connected(Rng& rng, std::size_t n, std::size_t extra, RandomQuiverOptions options) {
    Quiver q = vertices(n);
    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    if (n > 1)
        for (std::size_t i = 0; i < n; ++i) q.add_edge(eid(q.edge_count()), order[i], order[(i + 1) % n]);
    if (n > 0) sprinkle(rng, q, extra, options);
    return q;
}

Quiver random_path_unique_quiver(Rng& rng, std::size_t n, std::size_t attempts) {
    Quiver q = random_connected_quiver(rng, n, 0);
    for (std::size_t i = 0; i < attempts && n > 1; ++i) {
        const VertexIndex s = uniform(rng, n), t = uniform(rng, n);
        if (s == t) continue;
        Quiver candidate = q;
        candidate.add_edge(eid(candidate.edge_count()), s, t);
        if (!is_acyclic(candidate)) continue;
        const auto counts = count_paths_saturating(candidate, 2);
        bool unique = true;
        for (const auto& row : counts)
            unique = unique && std::all_of(row.begin(), row.end(), [](std::uint64_t c) { return c <= 1; });
        if (unique) q = std::move(candidate);
    }
    return q;
}

Quiver relabel(Rng& rng, const Quiver& q, std::vector<VertexIndex>* perm) {
    const std::size_t n = q.vertex_count();
    std::vector<VertexIndex> order(n), names(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    names = order;
    std::shuffle(names.begin(), names.end(), rng);
    Quiver r;
    std::vector<VertexIndex> image(n);
    for (VertexIndex v : order) image[v] = r.add_vertex("r" + std::to_string(names[v]));
    std::vector<EdgeIndex> edges(q.edge_count());
    std::iota(edges.begin(), edges.end(), 0);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = q.edge(edges[i]);
        r.add_edge("f" + std::to_string(i), image[e.source], image[e.target]);
    }
    if (perm) *perm = image;
    return r;
}

}  // namespace quiverreach
