#include "quiverreach/algebra.hpp"

#include <map>
#include <string>

#include "quiverreach/error.hpp"
#include "quiverreach/linalg.hpp"

namespace quiverreach {

std::vector<BasisElement> algebra_basis(const Preorder& rel) {
    std::vector<BasisElement> basis;
    for (std::size_t a = 0; a < rel.size(); ++a)
        for (std::size_t b = 0; b < rel.size(); ++b)
            if (rel.leq(a, b)) basis.push_back({a, b});
    return basis;
}

std::size_t commuting_algebra_dim(const Quiver& q) { return reachability_closure(q).count(); }

std::size_t incidence_algebra_dim(const Preorder& p) { return p.relation().count(); }

std::optional<BasisElement> structure_product(const Preorder& rel, BasisElement f, BasisElement g) {
    for (const auto& x : {f, g})
        if (x.from >= rel.size() || x.to >= rel.size() || !rel.leq(x.from, x.to))
            throw PreconditionError(Violation::InvalidBasisElement,
                                    "(" + std::to_string(x.from) + "," + std::to_string(x.to) + ") is not a relation pair");
    if (g.to != f.from) return std::nullopt;
    return BasisElement{g.from, f.to};
}

HappelHH happel_hh(const Quiver& q) {
    if (!is_connected(q)) throw PreconditionError(Violation::Disconnected, "quiver is not connected");
    if (!is_acyclic(q)) throw PreconditionError(Violation::CyclicQuiver, "quiver has an oriented cycle");
    const auto counts = count_paths_exact(q);
    BigInt hh1 = 1 - BigInt(q.vertex_count());
    for (const auto& e : q.edges()) hh1 += counts[e.source][e.target];
    return {BigInt(1), hh1};
}

MoritaVerdict morita_equivalent(const Quiver& q1, const Quiver& q2) {
    MoritaVerdict v{false, reachability_poset(q1), reachability_poset(q2), std::nullopt};
    v.bijection = poset_isomorphic(v.first.poset, v.second.poset);
    v.equivalent = v.bijection.has_value();
    return v;
}

GldimReport gldim_report(const Quiver& q) {
    GldimReport r;
    r.upper_bound = diameter(q);
    const auto poset = reachability_poset(q).poset;
    r.antichain = poset.relation().count() == poset.size();
    if (r.antichain) return r;
    r.b11 = find_b11_subposet(poset);
    r.is_one = !r.b11.has_value();
    return r;
}

AlgebraSummary summarize_algebra(const Quiver& q) {
    AlgebraSummary s;
    s.dimension = commuting_algebra_dim(q);
    s.incidence_dimension = incidence_algebra_dim(reachability_poset(q).poset);
    if (is_connected(q) && is_acyclic(q)) s.happel = happel_hh(q);
    s.gldim = gldim_report(q);
    return s;
}

namespace {

/// Multiplication table of the incidence algebra over its basis indices.
class Incidence {
public:
    explicit Incidence(const Poset& p) : basis_(algebra_basis(p)) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
        table_.assign(basis_.size(), std::vector<std::optional<std::size_t>>(basis_.size()));
        for (std::size_t f = 0; f < basis_.size(); ++f)
            for (std::size_t g = 0; g < basis_.size(); ++g)
                if (auto h = structure_product(p, basis_[f], basis_[g])) table_[f][g] = index_.at(*h);
    }

    std::size_t dim() const { return basis_.size(); }
    std::optional<std::size_t> product(std::size_t f, std::size_t g) const { return table_[f][g]; }

private:
    std::vector<BasisElement> basis_;
    std::map<BasisElement, std::size_t> index_;
    std::vector<std::vector<std::optional<std::size_t>>> table_;
};

std::uint64_t power(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

/// Coboundary C^n -> C^{n+1}. A cochain basis vector is (tuple of n basis
/// elements, value basis element), indexed as tuple * d + value.
///   (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.. a_i a_{i+1} ..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}
SparseMatrix coboundary(const Incidence& A, std::size_t n) {
    const std::size_t d = A.dim();
    const std::size_t tuples_in = power(d, n), tuples_out = power(d, n + 1);
    SparseMatrix m(tuples_out * d, tuples_in * d);
    std::vector<std::size_t> a(n + 1);
    for (std::size_t t = 0; t < tuples_out; ++t) {
        for (std::size_t i = n + 1, rest = t; i-- > 0; rest /= d) a[i] = rest % d;
        auto row = [&](std::size_t value) { return t * d + value; };

        // a_1 f(a_2 .. a_{n+1})
        const std::size_t tail = t % tuples_in;
        for (std::size_t b = 0; b < d; ++b)
            if (auto c = A.product(a[0], b)) m.add(row(*c), tail * d + b, 1);

        // f with a_i a_{i+1} merged
        for (std::size_t i = 0; i < n; ++i) {
            const auto merged = A.product(a[i], a[i + 1]);
            if (!merged) continue;
            std::size_t col = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == i + 1) continue;
                col = col * d + (j == i ? *merged : a[j]);
            }
            const std::int64_t sign = (i + 1) % 2 ? -1 : 1;
            for (std::size_t v = 0; v < d; ++v) m.add(row(v), col * d + v, sign);
        }

        // f(a_1 .. a_n) a_{n+1}
        const std::size_t head = t / d;
        const std::int64_t sign = (n + 1) % 2 ? -1 : 1;
        for (std::size_t b = 0; b < d; ++b)
            if (auto c = A.product(b, a[n])) m.add(row(*c), head * d + b, sign);
    }
    return m;
}

}  // namespace

std::size_t hochschild_oracle(const Poset& p, std::size_t k, std::uint64_t characteristic, std::uint64_t budget) {
    if (k > 3) throw PreconditionError(Violation::BadDegree, "degree must be at most 3, got " + std::to_string(k));
    validate_field(characteristic);
    const std::uint64_t d = incidence_algebra_dim(p);
    if (d > 0 && power(d, k + 2) > budget)
        throw PreconditionError(Violation::TooLarge, "cochain complex too large: (dim A)^(k+2) = " +
                                                         std::to_string(power(d, k + 2)));
    if (d == 0) return 0;
    const Incidence A(p);
    const std::size_t cochains = power(d, k + 1);
    const std::size_t outgoing = rank(coboundary(A, k), characteristic);
    const std::size_t incoming = k == 0 ? 0 : rank(coboundary(A, k - 1), characteristic);
    return cochains - outgoing - incoming;
}

}  // namespace quiverreach
