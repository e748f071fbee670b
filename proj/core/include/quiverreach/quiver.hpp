#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quiverreach {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
    std::string id;
    VertexIndex source;
    VertexIndex target;

    bool is_loop() const noexcept { return source == target; }
};

/// Finite quiver: a directed multigraph in which loops and parallel edges are
/// allowed. Vertices and edges keep insertion order; ids are unique within
/// their own kind.
class Quiver {
public:
    VertexIndex add_vertex(std::string id);
    EdgeIndex add_edge(std::string id, VertexIndex source, VertexIndex target);
    EdgeIndex add_edge(std::string id, std::string_view source, std::string_view target);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_ids() const noexcept { return vertices_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<EdgeIndex> find_edge(std::string_view id) const;
    /// Throws PreconditionError(UnknownId) when absent.
    VertexIndex vertex_index(std::string_view id) const;
    EdgeIndex edge_index(std::string_view id) const;

    const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }
    const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }

    /// Successor lists (one entry per edge, loops and repeats included).
    std::vector<std::vector<VertexIndex>> successors() const;

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, VertexIndex, std::less<>> vertex_lookup_;
    std::map<std::string, EdgeIndex, std::less<>> edge_lookup_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::vector<std::vector<EdgeIndex>> in_;
};

/// Edge sequence anchored at `start`. The empty sequence is the identity
/// path at `start`; length is the number of edges.
struct Path {
    VertexIndex start = 0;
    std::vector<EdgeIndex> edges;

    std::size_t length() const noexcept { return edges.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Consecutive edges compose and the first edge leaves `start`.
bool is_path(const Quiver& q, const Path& p);
/// Vertices visited, `start` first; requires is_path.
std::vector<VertexIndex> path_vertices(const Quiver& q, const Path& p);
VertexIndex path_end(const Quiver& q, const Path& p);
/// A path with no loop edges and no repeated vertex.
bool is_simple_path(const Quiver& q, const Path& p);
/// Edge ids of the path, in order.
std::vector<std::string> path_edge_ids(const Quiver& q, const Path& p);

/// Pair of total maps on vertex ids and edge ids.
struct QuiverMorphism {
    std::map<std::string, std::string, std::less<>> vertex_map;
    std::map<std::string, std::string, std::less<>> edge_map;
};

enum class Square { Source, Target };

struct SquareViolation {
    std::string edge;
    Square square;
};

struct MorphismCheck {
    bool valid = true;
    std::optional<SquareViolation> first_violation;
};

/// Checks that f_V(s(e)) = s'(f_E(e)) and f_V(t(e)) = t'(f_E(e)) for every
/// edge, scanning edges in `src` order. Throws PreconditionError(UnknownId)
/// when a map is not total on `src` or leaves the ids of `dst`.
MorphismCheck validate_morphism(const QuiverMorphism& f, const Quiver& src, const Quiver& dst);

QuiverMorphism identity_morphism(const Quiver& q);
/// g after f.
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);
/// Image of a path of `src` in `dst`; the morphism must be valid.
Path map_path(const QuiverMorphism& f, const Quiver& src, const Quiver& dst, const Path& p);

}  // namespace quiverreach
