#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "quiverreach/bool_matrix.hpp"
#include "quiverreach/quiver.hpp"

namespace quiverreach {

using BigInt = boost::multiprecision::cpp_int;

/// Entry (v,w) is true iff some path v -> w exists; reflexive through the
/// identity paths.
BoolMatrix reachability_closure(const Quiver& q);

/// Quiver with one edge v -> w (id "v->w") for every path of length >= 1.
/// Vertices on a directed cycle receive a loop.
Quiver transitive_closure(const Quiver& q);

struct SccPartition {
    /// Blocks in a topological order of the condensation; members sorted by id.
    std::vector<std::vector<VertexIndex>> blocks;
    /// Block index of each vertex.
    std::vector<std::size_t> block_of;
    /// Smallest vertex id of each block.
    std::vector<VertexIndex> representative;

    std::size_t size() const noexcept { return blocks.size(); }
};

/// Strongly connected components. Ties in the topological order are broken by
/// the representatives' ids, so the result does not depend on file order.
SccPartition scc_partition(const Quiver& q);

/// One vertex per block (named by its representative); one edge X -> Y when
/// some edge leaves X for Y; a loop at X when X contains an internal edge.
/// Edge ids are "X->Y".
Quiver condensation(const Quiver& q);

/// True iff the quiver has no directed cycle; a loop is a cycle.
bool is_acyclic(const Quiver& q);

/// A directed cycle (a loop counts), or nothing for acyclic quivers.
std::optional<Path> find_directed_cycle(const Quiver& q);

/// Topological order of an acyclic quiver, ties broken by vertex id.
/// Throws PreconditionError(CyclicQuiver).
std::vector<VertexIndex> topological_order(const Quiver& q);

using CountMatrix = std::vector<std::vector<std::uint64_t>>;

/// Entry (v,w) = min(cap, number of paths v -> w); the diagonal counts the
/// identity path. Throws CyclicQuiver on cyclic input.
CountMatrix count_paths_saturating(const Quiver& q, std::uint64_t cap = 2);

/// Exact path counts (no saturation) for acyclic quivers.
std::vector<std::vector<BigInt>> count_paths_exact(const Quiver& q);

/// Longest directed simple path in T(Q) with loops ignored, i.e. the length of
/// the longest chain of the reachability poset.
std::size_t diameter(const Quiver& q);

/// Connected components of the underlying undirected graph.
std::size_t undirected_components(const Quiver& q);
bool is_connected(const Quiver& q);

/// |E| - |V| + components, loops and parallel edges included.
long long undirected_first_betti(const Quiver& q);

/// Vertex bijection a -> b preserving edge multiplicities between every
/// ordered pair of vertices (loops included), if one exists.
std::optional<std::vector<VertexIndex>> quiver_isomorphism(const Quiver& a, const Quiver& b);

inline bool quivers_isomorphic(const Quiver& a, const Quiver& b) { return quiver_isomorphism(a, b).has_value(); }

/// Out-edges of `v` ordered by edge id.
std::vector<EdgeIndex> out_edges_by_id(const Quiver& q, VertexIndex v);

}  // namespace quiverreach
