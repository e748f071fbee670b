#include "quiverreach/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "quiverreach/error.hpp"

namespace quiverreach {

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : simplices) f.push_back(level.size());
    return f;
}

std::int64_t SimplicialComplex::euler() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < simplices.size(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(simplices[k].size());
    return chi;
}

SimplicialComplex order_complex(const Poset& p, std::size_t max_dim) {
    const std::size_t n = p.size();
    SimplicialComplex c;
    // Fewer elements below comes first: a linear extension.
    std::vector<std::size_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.less(b, a)) ++below[a];
    c.extension.resize(n);
    std::iota(c.extension.begin(), c.extension.end(), 0);
    std::stable_sort(c.extension.begin(), c.extension.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

    std::vector<std::size_t> height(n, 0);  // longest chain ending at a, minus one
    for (std::size_t a : c.extension)
        for (std::size_t b = 0; b < n; ++b)
            if (p.less(b, a)) height[a] = std::max(height[a], height[b] + 1);
    if (n > 0) c.dimension = static_cast<std::ptrdiff_t>(*std::max_element(height.begin(), height.end()));

    const std::size_t stored = n == 0 ? 0 : std::min<std::size_t>(max_dim, static_cast<std::size_t>(c.dimension)) + 1;
    c.simplices.resize(stored);
    Simplex chain;
    std::function<void(std::size_t)> extend = [&](std::size_t pos) {
        c.simplices[chain.size() - 1].push_back(chain);
        if (chain.size() == stored) return;
        for (std::size_t next = pos + 1; next < n; ++next) {
            const std::size_t x = c.extension[next];
            if (!p.less(chain.back(), x)) continue;
            chain.push_back(x);
            extend(next);
            chain.pop_back();
        }
    };
    for (std::size_t pos = 0; pos < n; ++pos) {
        chain = {c.extension[pos]};
        extend(pos);
    }
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[c.extension[i]] = i;
    for (auto& level : c.simplices)
        std::sort(level.begin(), level.end(), [&](const Simplex& a, const Simplex& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
        });
    return c;
}

SparseMatrix boundary_matrix(const SimplicialComplex& c, std::size_t k) {
    if (k == 0 || k >= c.simplices.size())
        throw PreconditionError(Violation::InvalidArgument, "boundary degree out of the stored range");
    const auto& faces = c.simplices[k - 1];
    std::map<Simplex, std::size_t> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], i);
    SparseMatrix d(faces.size(), c.simplices[k].size());
    for (std::size_t j = 0; j < c.simplices[k].size(); ++j) {
        const auto& s = c.simplices[k][j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            d.add(face_index.at(face), j, i % 2 ? -1 : 1);
        }
    }
    return d;
}

std::vector<std::size_t> betti(const SimplicialComplex& c, std::uint64_t characteristic, std::optional<std::size_t> max_dim) {
    validate_field(characteristic);
    const std::size_t top = max_dim.value_or(c.dimension < 0 ? 0 : static_cast<std::size_t>(c.dimension));
    std::vector<std::size_t> result(top + 1, 0);
    if (c.dimension < 0) return result;
    const auto dim = static_cast<std::size_t>(c.dimension);
    const std::size_t needed = std::min(top + 1, dim);
    if (c.simplices.size() < needed + 1)
        throw PreconditionError(Violation::InvalidArgument, "complex was enumerated below the requested degree");

    std::vector<std::size_t> ranks(needed + 2, 0);  // ranks[k] = rank of boundary from degree k
    for (std::size_t k = 1; k <= needed; ++k) ranks[k] = rank(boundary_matrix(c, k), characteristic);
    for (std::size_t k = 0; k <= std::min(top, dim); ++k)
        result[k] = c.simplices[k].size() - ranks[k] - ranks[k + 1];
    return result;
}

std::vector<std::size_t> nerve_betti(const Poset& p, std::uint64_t characteristic, std::optional<std::size_t> max_dim) {
    const auto c = max_dim ? order_complex(p, *max_dim + 1) : order_complex(p);
    return betti(c, characteristic, max_dim);
}

std::vector<std::size_t> nerve_betti_of_quiver(const Quiver& q, std::uint64_t characteristic,
                                               std::optional<std::size_t> max_dim) {
    return nerve_betti(reachability_poset(q).poset, characteristic, max_dim);
}

}  // namespace quiverreach
