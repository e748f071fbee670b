#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quiverreach/quiver.hpp"

namespace quiverreach {

/// Every simple path of length >= 1 that no other simple path properly
/// contains, ordered lexicographically by edge-id sequence.
std::vector<Path> maximal_simple_paths(const Quiver& q);

/// True iff the simple path cannot be extended by one edge at either end
/// while staying simple.
bool is_maximal_simple_path(const Quiver& q, const Path& p);

/// Contracts every edge of g except the first. Each contraction merges the
/// edge's endpoints into the vertex with the smaller id; other edges are
/// rewired, so parallel structure may turn into loops or parallel edges.
/// Throws LoopContraction, NotSimple or NotMaximal.
Quiver contract_path(const Quiver& q, const Path& g);

struct ReductionStep {
    /// Round 0 walks the maximal simple paths of the input; later rounds walk
    /// those of the intermediate quiver until no simple path of length >= 2
    /// is left.
    std::size_t round = 0;
    std::vector<std::string> path;
    /// Surviving edges of `path` at the time it was visited.
    std::vector<std::string> image;
    bool contracted = false;
    std::string skip_reason;
    /// Index into ReductionTrace::snapshots of the quiver after this step.
    std::size_t snapshot = 0;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<Quiver> snapshots;
};

struct ReductionResult {
    Quiver reduced;
    ReductionTrace trace;
};

/// Lexicographic order, or an explicit permutation of the maximal simple
/// paths given as edge-id sequences.
using PathOrder = std::variant<std::monostate, std::vector<std::vector<std::string>>>;

/// Iterated path contraction. A visited path whose image is no longer a
/// maximal simple path is skipped. Throws InvalidOrder when an explicit order
/// is not a permutation of the maximal simple paths.
ReductionResult path_reduction(const Quiver& q, const PathOrder& order = {});

/// True iff some simple path has length >= 2.
bool has_simple_path_of_length_two(const Quiver& q);

enum class AlternationDefect { Loop, ParallelEdges, MixedVertex };

struct AlternatingCheck {
    bool alternating = false;
    /// Sources (indegree 0, isolated vertices included) and sinks when
    /// `alternating`.
    std::vector<VertexIndex> sources, sinks;
    std::optional<AlternationDefect> defect;
    /// Offending edge id (Loop, ParallelEdges) or vertex id (MixedVertex).
    std::string culprit;
};

/// No loops, no parallel edges, and every vertex a pure source or pure sink.
AlternatingCheck is_simple_alternating(const Quiver& q);

/// Two internally vertex-disjoint directed paths x -> y (x != y).
struct QuasiBigon {
    VertexIndex x = 0, y = 0;
    /// upper precedes lower lexicographically by edge ids.
    Path upper, lower;
};

/// First pair (x, y) in id order that carries two internally disjoint
/// directed paths, found by a unit vertex-capacity flow of value 2.
std::optional<QuasiBigon> find_quasi_bigon(const Quiver& q);

/// True iff a directed path y -> x exists. Cross-checks that this coincides
/// with the occurrence's vertices being strongly connected in q.
/// Throws InvalidOccurrence.
bool has_diagonal(const Quiver& q, const QuasiBigon& b);

struct PathReachVerdict {
    bool isomorphic = false;
    /// A directed cycle, a quasi-bigon, or nothing when isomorphic.
    std::variant<std::monostate, Path, QuasiBigon> certificate;
};

/// Path_Q and Reach_Q agree iff q has no directed cycle (loops included) and
/// no pair of vertices joined by two distinct paths. Throws Disconnected.
PathReachVerdict path_reach_isomorphic(const Quiver& q);

}  // namespace quiverreach
