#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "quiverreach/linalg.hpp"
#include "quiverreach/quiver.hpp"
#include "quiverreach/reach.hpp"

namespace quiverreach {

using Simplex = std::vector<std::size_t>;

/// Order complex of a poset: k-simplices are strict chains x_0 < ... < x_k,
/// listed by element index along a fixed linear extension.
struct SimplicialComplex {
    /// simplices[k] holds the k-simplices, sorted lexicographically by the
    /// linear-extension positions of their vertices.
    std::vector<std::vector<Simplex>> simplices;
    /// Linear extension used to order every simplex.
    std::vector<std::size_t> extension;
    /// Dimension of the whole complex, which may exceed simplices.size() - 1
    /// when the chain enumeration was capped. -1 when empty.
    std::ptrdiff_t dimension = -1;

    std::vector<std::size_t> f_vector() const;
    /// Alternating sum of the stored f-vector.
    std::int64_t euler() const;
};

/// Strict chains of p, enumerated by DFS over the strict order. Only
/// simplices of dimension <= max_dim are stored.
SimplicialComplex order_complex(const Poset& p, std::size_t max_dim = std::numeric_limits<std::size_t>::max());

/// Boundary map from k-simplices to (k-1)-simplices with alternating signs;
/// k >= 1 and simplices of both dimensions must be stored.
SparseMatrix boundary_matrix(const SimplicialComplex& c, std::size_t k);

/// beta_0 .. beta_max_dim over GF(p) or Q (p = 0); entries above the complex
/// dimension are 0. max_dim defaults to the complex dimension. Simplices of
/// dimension max_dim + 1 must be stored unless the complex ends earlier.
std::vector<std::size_t> betti(const SimplicialComplex& c, std::uint64_t characteristic,
                               std::optional<std::size_t> max_dim = std::nullopt);

/// Betti numbers of the order complex of R(q).
std::vector<std::size_t> nerve_betti_of_quiver(const Quiver& q, std::uint64_t characteristic,
                                               std::optional<std::size_t> max_dim = std::nullopt);

/// Same, for an arbitrary poset.
std::vector<std::size_t> nerve_betti(const Poset& p, std::uint64_t characteristic,
                                     std::optional<std::size_t> max_dim = std::nullopt);

}  // namespace quiverreach
