#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quiverreach/graph.hpp"
#include "quiverreach/quiver.hpp"
#include "quiverreach/reach.hpp"

namespace quiverreach {

/// Morphism a -> b of a thin category, i.e. a pair with a <= b.
struct BasisElement {
    std::size_t from = 0, to = 0;
    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Basis of the category algebra: every related pair, row-major.
std::vector<BasisElement> algebra_basis(const Preorder& rel);

/// One basis morphism per reachable ordered pair, identities included.
std::size_t commuting_algebra_dim(const Quiver& q);

/// Number of <= pairs.
std::size_t incidence_algebra_dim(const Preorder& p);

/// f * g = f after g: (b,c) * (a,b) = (a,c); zero (nullopt) when the middle
/// elements differ. Throws InvalidBasisElement.
std::optional<BasisElement> structure_product(const Preorder& rel, BasisElement f, BasisElement g);

/// Dimensions of HH^0 and HH^1 of the path algebra of a connected quiver
/// without oriented cycles; all higher degrees vanish.
struct HappelHH {
    BigInt hh0, hh1;
    BigInt degree(std::size_t i) const { return i == 0 ? hh0 : i == 1 ? hh1 : BigInt(0); }
};

/// hh1 = 1 - |V| + sum over edges e of #paths s(e) -> t(e).
/// Throws Disconnected or CyclicQuiver.
HappelHH happel_hh(const Quiver& q);

struct MoritaVerdict {
    bool equivalent = false;
    ReachabilityPoset first, second;
    /// Order isomorphism R(q1) -> R(q2) by class index.
    std::optional<std::vector<std::size_t>> bijection;
};

MoritaVerdict morita_equivalent(const Quiver& q1, const Quiver& q2);

struct GldimReport {
    std::size_t upper_bound = 0;
    /// R(q) has no nontrivial relation: the algebra is a product of copies
    /// of the field and gl.dim is exactly 0.
    bool antichain = false;
    /// Unset for antichains.
    std::optional<bool> is_one;
    std::optional<B11Witness> b11;
};

GldimReport gldim_report(const Quiver& q);

struct AlgebraSummary {
    std::size_t dimension = 0;
    std::size_t incidence_dimension = 0;
    /// Present only for connected quivers without oriented cycles.
    std::optional<HappelHH> happel;
    GldimReport gldim;
};

AlgebraSummary summarize_algebra(const Quiver& q);

/// Largest number of nonzero coefficients the cochain complex may touch.
inline constexpr std::uint64_t kHochschildBudget = 4'000'000;

/// dim HH^k(A, A) of the incidence algebra A of p, from the standard
/// cochain complex Hom(A^{(x)k}, A), ranks over GF(char) or Q (char = 0).
/// Throws BadDegree (k > 3), TooLarge ((dim A)^{k+2} above budget), BadField.
std::size_t hochschild_oracle(const Poset& p, std::size_t k, std::uint64_t characteristic,
                              std::uint64_t budget = kHochschildBudget);

}  // namespace quiverreach
