#include "quiverreach/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

#include "quiverreach/error.hpp"

namespace quiverreach {

namespace {

/// Min-heap of indices keyed by the id strings they refer to.
class IdHeap {
public:
    explicit IdHeap(const std::vector<std::string>& ids)
        : heap_([&ids](std::size_t a, std::size_t b) { return ids[a] > ids[b]; }) {}
    void push(std::size_t i) { heap_.push(i); }
    std::size_t pop() {
        auto top = heap_.top();
        heap_.pop();
        return top;
    }
    bool empty() const { return heap_.empty(); }

private:
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::function<bool(std::size_t, std::size_t)>> heap_;
};

/// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<VertexIndex>> tarjan(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexIndex> stack;
    std::vector<std::vector<VertexIndex>> components;
    std::size_t counter = 0;

    struct Frame {
        VertexIndex v;
        std::size_t next_edge;
    };
    std::vector<Frame> call_stack;

    for (VertexIndex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call_stack.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const VertexIndex v = frame.v;
            const auto& out = q.out_edges(v);
            if (frame.next_edge < out.size()) {
                const VertexIndex w = q.edge(out[frame.next_edge++]).target;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<VertexIndex> component;
                VertexIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const VertexIndex parent = call_stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return components;
}

}  // namespace

BoolMatrix reachability_closure(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const auto adj = q.successors();
    BoolMatrix reach(n);
    std::vector<VertexIndex> frontier;
    for (VertexIndex s = 0; s < n; ++s) {
        reach.set(s, s);
        frontier.assign(1, s);
        while (!frontier.empty()) {
            const VertexIndex v = frontier.back();
            frontier.pop_back();
            for (VertexIndex w : adj[v]) {
                if (!reach(s, w)) {
                    reach.set(s, w);
                    frontier.push_back(w);
                }
            }
        }
    }
    return reach;
}

Quiver transitive_closure(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const auto adj = q.successors();
    Quiver closure;
    for (const auto& v : q.vertex_ids()) closure.add_vertex(v);
    for (VertexIndex s = 0; s < n; ++s) {
        // reachable by a path of length >= 1
        std::vector<bool> seen(n, false);
        std::vector<VertexIndex> frontier(adj[s].begin(), adj[s].end());
        for (VertexIndex w : frontier) seen[w] = true;
        while (!frontier.empty()) {
            const VertexIndex v = frontier.back();
            frontier.pop_back();
            for (VertexIndex w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push_back(w);
                }
        }
        for (VertexIndex t = 0; t < n; ++t)
            if (seen[t]) closure.add_edge(q.vertex_id(s) + "->" + q.vertex_id(t), s, t);
    }
    return closure;
}

SccPartition scc_partition(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const auto& ids = q.vertex_ids();
    auto components = tarjan(q);
    const std::size_t k = components.size();

    std::vector<std::size_t> component_of(n);
    std::vector<std::string> rep_ids(k);
    for (std::size_t c = 0; c < k; ++c) {
        auto& members = components[c];
        std::sort(members.begin(), members.end(), [&](VertexIndex a, VertexIndex b) { return ids[a] < ids[b]; });
        for (VertexIndex v : members) component_of[v] = c;
        rep_ids[c] = ids[members.front()];
    }

    std::vector<std::vector<std::size_t>> dag(k);
    std::vector<std::size_t> indegree(k, 0);
    for (const auto& e : q.edges()) {
        const auto a = component_of[e.source], b = component_of[e.target];
        if (a != b) {
            dag[a].push_back(b);
            ++indegree[b];
        }
    }
    IdHeap ready(rep_ids);
    for (std::size_t c = 0; c < k; ++c)
        if (indegree[c] == 0) ready.push(c);

    SccPartition partition;
    partition.block_of.assign(n, 0);
    while (!ready.empty()) {
        const std::size_t c = ready.pop();
        const std::size_t block = partition.blocks.size();
        for (VertexIndex v : components[c]) partition.block_of[v] = block;
        partition.representative.push_back(components[c].front());
        partition.blocks.push_back(components[c]);
        for (std::size_t d : dag[c])
            if (--indegree[d] == 0) ready.push(d);
    }
    return partition;
}

Quiver condensation(const Quiver& q) {
    const auto scc = scc_partition(q);
    const std::size_t k = scc.size();
    Quiver c;
    for (std::size_t b = 0; b < k; ++b) c.add_vertex(q.vertex_id(scc.representative[b]));

    BoolMatrix linked(k);
    for (const auto& e : q.edges()) linked.set(scc.block_of[e.source], scc.block_of[e.target]);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (linked(a, b)) c.add_edge(c.vertex_id(a) + "->" + c.vertex_id(b), a, b);
    return c;
}

bool is_acyclic(const Quiver& q) {
    for (const auto& e : q.edges())
        if (e.is_loop()) return false;
    return scc_partition(q).size() == q.vertex_count();
}

std::vector<EdgeIndex> out_edges_by_id(const Quiver& q, VertexIndex v) {
    auto out = q.out_edges(v);
    std::sort(out.begin(), out.end(), [&](EdgeIndex a, EdgeIndex b) { return q.edge(a).id < q.edge(b).id; });
    return out;
}

std::optional<Path> find_directed_cycle(const Quiver& q) {
    const auto& ids = q.vertex_ids();
    std::optional<EdgeIndex> loop;
    for (EdgeIndex e = 0; e < q.edge_count(); ++e) {
        const auto& edge = q.edge(e);
        if (!edge.is_loop()) continue;
        if (!loop || std::tie(ids[edge.source], edge.id) < std::tie(ids[q.edge(*loop).source], q.edge(*loop).id))
            loop = e;
    }
    if (loop) return Path{q.edge(*loop).source, {*loop}};

    const auto scc = scc_partition(q);
    std::optional<std::size_t> block;
    for (std::size_t b = 0; b < scc.size(); ++b)
        if (scc.blocks[b].size() > 1 && (!block || ids[scc.representative[b]] < ids[scc.representative[*block]]))
            block = b;
    if (!block) return std::nullopt;

    // Shortest cycle through the representative, by BFS inside its block.
    const VertexIndex root = scc.representative[*block];
    std::vector<std::optional<EdgeIndex>> via(q.vertex_count());
    std::queue<VertexIndex> frontier;
    frontier.push(root);
    std::optional<EdgeIndex> closing;
    while (!frontier.empty() && !closing) {
        const VertexIndex v = frontier.front();
        frontier.pop();
        for (EdgeIndex e : out_edges_by_id(q, v)) {
            const VertexIndex w = q.edge(e).target;
            if (scc.block_of[w] != *block) continue;
            if (w == root) {
                closing = e;
                break;
            }
            if (!via[w]) {
                via[w] = e;
                frontier.push(w);
            }
        }
    }
    Path cycle{root, {*closing}};
    for (VertexIndex at = q.edge(*closing).source; at != root; at = q.edge(*via[at]).source)
        cycle.edges.push_back(*via[at]);
    std::reverse(cycle.edges.begin(), cycle.edges.end());
    return cycle;
}

std::vector<VertexIndex> topological_order(const Quiver& q) {
    if (!is_acyclic(q)) throw PreconditionError(Violation::CyclicQuiver, "quiver has a directed cycle");
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& e : q.edges()) ++indegree[e.target];
    IdHeap ready(q.vertex_ids());
    for (VertexIndex v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    std::vector<VertexIndex> order;
    while (!ready.empty()) {
        const VertexIndex v = ready.pop();
        order.push_back(v);
        for (EdgeIndex e : q.out_edges(v))
            if (--indegree[q.edge(e).target] == 0) ready.push(q.edge(e).target);
    }
    return order;
}

CountMatrix count_paths_saturating(const Quiver& q, std::uint64_t cap) {
    if (cap == 0) throw PreconditionError(Violation::InvalidArgument, "saturation cap must be positive");
    const auto order = topological_order(q);
    const std::size_t n = q.vertex_count();
    CountMatrix counts(n, std::vector<std::uint64_t>(n, 0));
    for (VertexIndex s = 0; s < n; ++s) {
        auto& row = counts[s];
        row[s] = 1;
        for (VertexIndex u : order) {
            if (row[u] == 0) continue;
            for (EdgeIndex e : q.out_edges(u)) {
                auto& cell = row[q.edge(e).target];
                cell = std::min(cap, cell + row[u]);
            }
        }
    }
    return counts;
}

std::vector<std::vector<BigInt>> count_paths_exact(const Quiver& q) {
    const auto order = topological_order(q);
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<BigInt>> counts(n, std::vector<BigInt>(n, 0));
    for (VertexIndex s = 0; s < n; ++s) {
        auto& row = counts[s];
        row[s] = 1;
        for (VertexIndex u : order) {
            if (row[u] == 0) continue;
            for (EdgeIndex e : q.out_edges(u)) row[q.edge(e).target] += row[u];
        }
    }
    return counts;
}

std::size_t diameter(const Quiver& q) {
    const auto scc = scc_partition(q);
    std::vector<std::vector<std::size_t>> preds(scc.size());
    for (const auto& e : q.edges()) {
        const auto a = scc.block_of[e.source], b = scc.block_of[e.target];
        if (a != b) preds[b].push_back(a);
    }
    // blocks are already topologically sorted
    std::vector<std::size_t> longest(scc.size(), 0);
    std::size_t best = 0;
    for (std::size_t b = 0; b < scc.size(); ++b) {
        for (std::size_t a : preds[b]) longest[b] = std::max(longest[b], longest[a] + 1);
        best = std::max(best, longest[b]);
    }
    return best;
}

std::size_t undirected_components(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t components = n;
    for (const auto& e : q.edges()) {
        const auto a = find(e.source), b = find(e.target);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

bool is_connected(const Quiver& q) { return undirected_components(q) == 1; }

long long undirected_first_betti(const Quiver& q) {
    return static_cast<long long>(q.edge_count()) - static_cast<long long>(q.vertex_count()) +
           static_cast<long long>(undirected_components(q));
}

std::optional<std::vector<VertexIndex>> quiver_isomorphism(const Quiver& a, const Quiver& b) {
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;

    auto multiplicities = [n](const Quiver& q) {
        std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
        for (const auto& e : q.edges()) ++m[e.source][e.target];
        return m;
    };
    const auto ma = multiplicities(a), mb = multiplicities(b);
    auto signature = [n](const std::vector<std::vector<std::size_t>>& m, VertexIndex v) {
        std::size_t out = 0, in = 0;
        for (std::size_t w = 0; w < n; ++w) {
            out += m[v][w];
            in += m[w][v];
        }
        return std::tuple{out, in, m[v][v]};
    };
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> sig_a(n), sig_b(n);
    for (VertexIndex v = 0; v < n; ++v) {
        sig_a[v] = signature(ma, v);
        sig_b[v] = signature(mb, v);
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    // Visit vertices of `a` in BFS order so each new vertex is adjacent to
    // already-mapped ones whenever possible.
    std::vector<VertexIndex> order;
    std::vector<bool> placed(n, false);
    for (VertexIndex root = 0; root < n; ++root) {
        if (placed[root]) continue;
        std::size_t head = order.size();
        order.push_back(root);
        placed[root] = true;
        while (head < order.size()) {
            const VertexIndex v = order[head++];
            for (VertexIndex w = 0; w < n; ++w)
                if (!placed[w] && (ma[v][w] || ma[w][v])) {
                    placed[w] = true;
                    order.push_back(w);
                }
        }
    }

    constexpr VertexIndex none = static_cast<VertexIndex>(-1);
    std::vector<VertexIndex> image(n, none);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) {
        if (k == n) return true;
        const VertexIndex v = order[k];
        for (VertexIndex w = 0; w < n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            bool consistent = true;
            for (std::size_t j = 0; j < k && consistent; ++j) {
                const VertexIndex u = order[j];
                consistent = ma[v][u] == mb[w][image[u]] && ma[u][v] == mb[image[u]][w];
            }
            if (!consistent) continue;
            image[v] = w;
            used[w] = true;
            if (extend(k + 1)) return true;
            used[w] = false;
            image[v] = none;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return image;
}

}  // namespace quiverreach
