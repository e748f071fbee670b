#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverreach/bool_matrix.hpp"
#include "quiverreach/quiver.hpp"

namespace quiverreach {

/// Reflexive-transitive relation on labelled elements; the thin category
/// with one morphism a -> b whenever relation(a, b).
class Preorder {
public:
    Preorder() = default;
    /// Throws PreconditionError(InvalidArgument) unless the relation is a
    /// reflexive, transitive matrix of matching size.
    Preorder(std::vector<std::string> elements, BoolMatrix relation);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const BoolMatrix& relation() const noexcept { return relation_; }
    bool leq(std::size_t a, std::size_t b) const { return relation_(a, b); }

protected:
    std::vector<std::string> elements_;
    BoolMatrix relation_;
};

/// A preorder that is also antisymmetric.
class Poset : public Preorder {
public:
    Poset() = default;
    Poset(std::vector<std::string> elements, BoolMatrix relation);

    /// Reflexive-transitive closure of the given pairs (indices into
    /// `elements`); throws InvalidArgument if the closure has a cycle.
    static Poset from_pairs(std::vector<std::string> elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    bool less(std::size_t a, std::size_t b) const { return a != b && relation_(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return relation_(a, b) || relation_(b, a); }
    std::optional<std::size_t> index_of(const std::string& label) const;
};

/// Vertices of q ordered by reachability; Reach_Q as a preorder.
Preorder reach_preorder(const Quiver& q);

/// Vertex map of a quiver morphism seen as a monotone map of reachability
/// preorders: image[i] is the index in the target of the image of element i.
struct MonotoneMap {
    std::vector<std::size_t> image;
    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// Throws PreconditionError(NotAMorphism) when f fails validate_morphism.
MonotoneMap map_preorder(const QuiverMorphism& f, const Quiver& src, const Quiver& dst);

bool is_monotone(const MonotoneMap& map, const BoolMatrix& src, const BoolMatrix& dst);

struct ReachabilityPoset {
    /// Classes in the topological block order of scc_partition, labelled by
    /// their representative's id.
    Poset poset;
    /// Class index of every vertex of the quiver.
    std::vector<std::size_t> class_of;
};

/// R(Q): mutual reachability classes ordered by reachability.
ReachabilityPoset reachability_poset(const Quiver& q);

/// T(Q), the underlying quiver of R(Q): one edge "a->b" per relation a <= b,
/// including the identity loops "a->a" unless `strip_loops`.
Quiver t_quiver(const Quiver& q, bool strip_loops = false);

/// Underlying quiver of a poset (same edge naming and loop convention).
Quiver poset_quiver(const Poset& p, bool strip_loops = false);

/// Order isomorphism p1 -> p2 (image[i] = index in p2), if any. Elements of
/// p1 are placed in label order and candidates tried in label order, so the
/// first witness is deterministic.
std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p1, const Poset& p2);

/// Distinct bottom < left < top, bottom < right < top with left and right
/// incomparable: a copy of the square poset B_{1,1}.
struct B11Witness {
    std::size_t bottom, left, right, top;
    friend bool operator==(const B11Witness&, const B11Witness&) = default;
};

std::optional<B11Witness> find_b11_subposet(const Poset& p);
inline bool contains_b11_subposet(const Poset& p) { return find_b11_subposet(p).has_value(); }

}  // namespace quiverreach
