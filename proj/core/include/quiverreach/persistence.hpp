#pragma once

#include <cstddef>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverreach/decimal.hpp"
#include "quiverreach/quiver.hpp"

namespace quiverreach {

/// A quiver with a filtration value on every vertex and edge. Every edge's
/// value is at least the values of its endpoints.
class FilteredQuiver {
public:
    /// Throws PreconditionError(NonMonotone) naming the first offending edge,
    /// or InvalidArgument on size mismatch.
    FilteredQuiver(Quiver q, std::vector<Decimal> vertex_values, std::vector<Decimal> edge_values);

    const Quiver& quiver() const noexcept { return quiver_; }
    const Decimal& vertex_value(VertexIndex v) const { return vertex_values_.at(v); }
    const Decimal& edge_value(EdgeIndex e) const { return edge_values_.at(e); }

    /// Distinct filtration values, increasing.
    std::vector<Decimal> critical_values() const;

private:
    Quiver quiver_;
    std::vector<Decimal> vertex_values_, edge_values_;
};

/// FQVR text: `v <id> <t>` and `e <id> <src> <dst> <t>` lines, `#` comments.
/// Throws ParseError on syntax, PreconditionError(NonMonotone) otherwise.
FilteredQuiver parse_filtration(std::string_view text);

std::string write_fqvr(const FilteredQuiver& fq);

/// Subquiver of vertices and edges with value <= t, in input order.
Quiver sublevel(const FilteredQuiver& fq, const Decimal& t);

struct BettiCurve {
    std::vector<Decimal> thresholds;
    /// betti[i] belongs to thresholds[i]; all rows share one length.
    std::vector<std::vector<std::size_t>> betti;
    /// Every sublevel is acyclic, so each inclusion induces an injective
    /// monotone map of reachability posets and the curve comes from a
    /// functor into posets.
    bool functorial = false;

    /// Row in force at t (constant between critical values); nullopt below
    /// the first threshold.
    std::optional<std::vector<std::size_t>> at(const Decimal& t) const;
};

/// Nerve Betti numbers of R(sublevel(t)) at every critical value t, each
/// computed from scratch. `jobs` worker threads (0 = hardware concurrency).
BettiCurve hh_betti_curves(const FilteredQuiver& fq, std::uint64_t characteristic,
                           std::optional<std::size_t> max_dim = std::nullopt, std::size_t jobs = 1);

/// Header `t,beta0,beta1,...`, one row per threshold.
std::string curve_csv(const BettiCurve& curve);
nlohmann::json curve_json(const BettiCurve& curve);
/// Self-contained gnuplot script drawing the curves as step functions.
std::string curve_gnuplot(const BettiCurve& curve, const std::string& title);

}  // namespace quiverreach
