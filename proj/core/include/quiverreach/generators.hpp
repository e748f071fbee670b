#pragma once

#include <cstddef>
#include <random>

#include "quiverreach/quiver.hpp"

namespace quiverreach {

using Rng = std::mt19937_64;

/// I_n: v0 -> v1 -> ... -> vn (n edges).
Quiver linear_quiver(std::size_t n);

/// L_n: v0 .. vn with both vi -> vi+1 and vi+1 -> vi.
Quiver bidirected_linear(std::size_t n);

/// Directed cycle on k >= 1 vertices (k = 1 gives a loop).
Quiver directed_cycle(std::size_t k);

/// B_{m,n}: x -> v1 -> .. -> vm -> y and x -> w1 -> .. -> wn -> y.
Quiver bigon(std::size_t m, std::size_t n);

/// Kronecker quiver B_{0,0}.
inline Quiver kronecker() { return bigon(0, 0); }

struct RandomQuiverOptions {
    bool loops = true;
    bool parallel = true;
};

/// n vertices "v0".."v{n-1}" and m edges "e0".. with uniform endpoints.
Quiver random_quiver(Rng& rng, std::size_t n, std::size_t m, RandomQuiverOptions options = {});

/// Random spanning tree with random orientations plus `extra` further edges.
Quiver random_connected_quiver(Rng& rng, std::size_t n, std::size_t extra, RandomQuiverOptions options = {});

/// A directed cycle through a random permutation plus `extra` further edges.
Quiver random_strongly_connected(Rng& rng, std::size_t n, std::size_t extra, RandomQuiverOptions options = {});

/// Connected, acyclic, at most one path between any two vertices: a random
/// oriented tree grown by up to `attempts` edges kept only when those
/// properties survive.
Quiver random_path_unique_quiver(Rng& rng, std::size_t n, std::size_t attempts);

/// Same quiver under fresh vertex and edge ids ("r0".., "f0"..) in a random
/// insertion order; `perm` receives the vertex bijection when non-null.
Quiver relabel(Rng& rng, const Quiver& q, std::vector<VertexIndex>* perm = nullptr);

}  // namespace quiverreach
