#include "quiverreach/reach.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "quiverreach/error.hpp"
#include "quiverreach/graph.hpp"

namespace quiverreach {

Preorder::Preorder(std::vector<std::string> elements, BoolMatrix relation)
    : elements_(std::move(elements)), relation_(std::move(relation)) {
    if (relation_.size() != elements_.size())
        throw PreconditionError(Violation::InvalidArgument, "relation size does not match element count");
    if (!relation_.is_reflexive() || !relation_.is_transitive())
        throw PreconditionError(Violation::InvalidArgument, "relation is not reflexive and transitive");
}

Poset::Poset(std::vector<std::string> elements, BoolMatrix relation) : Preorder(std::move(elements), std::move(relation)) {
    if (!relation_.is_antisymmetric())
        throw PreconditionError(Violation::InvalidArgument, "relation is not antisymmetric");
}

Poset Poset::from_pairs(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t n = elements.size();
    BoolMatrix r = BoolMatrix::identity(n);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw PreconditionError(Violation::InvalidArgument, "pair index out of range");
        r.set(a, b);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r(i, k))
                for (std::size_t j = 0; j < n; ++j)
                    if (r(k, j)) r.set(i, j);
    return Poset(std::move(elements), std::move(r));
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

Preorder reach_preorder(const Quiver& q) { return Preorder(q.vertex_ids(), reachability_closure(q)); }

bool is_monotone(const MonotoneMap& map, const BoolMatrix& src, const BoolMatrix& dst) {
    for (std::size_t a = 0; a < src.size(); ++a)
        for (std::size_t b = 0; b < src.size(); ++b)
            if (src(a, b) && !dst(map.image[a], map.image[b])) return false;
    return true;
}

MonotoneMap map_preorder(const QuiverMorphism& f, const Quiver& src, const Quiver& dst) {
    MorphismCheck check;
    try {
        check = validate_morphism(f, src, dst);
    } catch (const PreconditionError& e) {
        throw PreconditionError(Violation::NotAMorphism, e.what());
    }
    if (!check.valid)
        throw PreconditionError(Violation::NotAMorphism,
                                "square fails at edge '" + check.first_violation->edge + "'");

    MonotoneMap map;
    for (const auto& v : src.vertex_ids()) map.image.push_back(dst.vertex_index(f.vertex_map.find(v)->second));
    // Paths go to paths, so reachability is preserved.
    if (!is_monotone(map, reachability_closure(src), reachability_closure(dst)))
        throw std::logic_error("valid quiver morphism induced a non-monotone map");
    return map;
}

ReachabilityPoset reachability_poset(const Quiver& q) {
    const auto scc = scc_partition(q);
    const auto reach = reachability_closure(q);
    const std::size_t k = scc.size();
    std::vector<std::string> labels;
    BoolMatrix order(k);
    for (std::size_t a = 0; a < k; ++a) {
        labels.push_back(q.vertex_id(scc.representative[a]));
        for (std::size_t b = 0; b < k; ++b) order.set(a, b, reach(scc.representative[a], scc.representative[b]));
    }
    return {Poset(std::move(labels), std::move(order)), scc.block_of};
}

Quiver poset_quiver(const Poset& p, bool strip_loops) {
    Quiver t;
    for (const auto& label : p.elements()) t.add_vertex(label);
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (!strip_loops) t.add_edge(p.elements()[a] + "->" + p.elements()[a], a, a);
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(a, b)) t.add_edge(p.elements()[a] + "->" + p.elements()[b], a, b);
    }
    return t;
}

Quiver t_quiver(const Quiver& q, bool strip_loops) {
    const auto r = reachability_poset(q);
    Quiver t = poset_quiver(r.poset, strip_loops);

    // The loop-free part must be the condensation of the transitive closure.
    const Quiver c = condensation(transitive_closure(q));
    std::size_t loop_free = 0;
    for (const auto& e : c.edges()) {
        if (e.is_loop()) continue;
        ++loop_free;
        const auto a = r.poset.index_of(c.vertex_id(e.source));
        const auto b = r.poset.index_of(c.vertex_id(e.target));
        if (!a || !b || !r.poset.less(*a, *b)) throw std::logic_error("T(Q) disagrees with c(closure(Q))");
    }
    if (loop_free != r.poset.relation().count() - r.poset.size())
        throw std::logic_error("T(Q) disagrees with c(closure(Q))");
    return t;
}

namespace {

struct ElementInvariant {
    std::size_t below, above, height, depth;
    friend auto operator<=>(const ElementInvariant&, const ElementInvariant&) = default;
};

std::vector<ElementInvariant> invariants(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<ElementInvariant> inv(n, {0, 0, 0, 0});
    // Elements may come in any order, so relax chain lengths to a fixpoint.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (p.leq(b, a)) ++inv[a].below;
            if (p.leq(a, b)) ++inv[a].above;
        }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (p.less(a, b)) {
                    if (inv[b].height < inv[a].height + 1) inv[b].height = inv[a].height + 1, changed = true;
                    if (inv[a].depth < inv[b].depth + 1) inv[a].depth = inv[b].depth + 1, changed = true;
                }
    }
    return inv;
}

std::vector<std::size_t> label_order(const Poset& p) {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p.elements()[a] < p.elements()[b]; });
    return order;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p1, const Poset& p2) {
    const std::size_t n = p1.size();
    if (n != p2.size() || p1.relation().count() != p2.relation().count()) return std::nullopt;
    const auto inv1 = invariants(p1), inv2 = invariants(p2);
    {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    const auto order1 = label_order(p1), order2 = label_order(p2);
    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) {
        if (k == n) return true;
        const std::size_t a = order1[k];
        for (std::size_t b : order2) {
            if (used[b] || inv1[a] != inv2[b]) continue;
            bool consistent = true;
            for (std::size_t j = 0; j < k && consistent; ++j) {
                const std::size_t c = order1[j];
                consistent = p1.leq(a, c) == p2.leq(b, image[c]) && p1.leq(c, a) == p2.leq(image[c], b);
            }
            if (!consistent) continue;
            image[a] = b;
            used[b] = true;
            if (extend(k + 1)) return true;
            used[b] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return image;
}

std::optional<B11Witness> find_b11_subposet(const Poset& p) {
    const std::size_t n = p.size();
    for (std::size_t bottom = 0; bottom < n; ++bottom)
        for (std::size_t top = 0; top < n; ++top) {
            if (!p.less(bottom, top)) continue;
            for (std::size_t left = 0; left < n; ++left) {
                if (!p.less(bottom, left) || !p.less(left, top)) continue;
                for (std::size_t right = left + 1; right < n; ++right)
                    if (p.less(bottom, right) && p.less(right, top) && !p.comparable(left, right))
                        return B11Witness{bottom, left, right, top};
            }
        }
    return std::nullopt;
}

}  // namespace quiverreach
