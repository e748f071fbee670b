#include "selftest.hpp"

#include <functional>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "quiverreach/algebra.hpp"
#include "quiverreach/generators.hpp"
#include "quiverreach/graph.hpp"
#include "quiverreach/homology.hpp"
#include "quiverreach/persistence.hpp"
#include "quiverreach/reach.hpp"
#include "quiverreach/reduction.hpp"

namespace quiverreach::cli {

namespace {

struct Property {
    std::string name;
    /// Returns an empty string when the property holds for this sample.
    std::function<std::string(Rng&, std::size_t)> check;
};

std::size_t small(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Property> properties() {
    return {
        {"closure_is_preorder",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 7), small(rng, 0, 10));
             const auto r = reachability_closure(q);
             if (!r.is_reflexive() || !r.is_transitive()) return "closure is not a preorder";
             for (const auto& e : q.edges())
                 if (!r(e.source, e.target)) return "edge '" + e.id + "' not in closure";
             return {};
         }},
        {"tq_is_condensed_closure",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 5), small(rng, 0, 8));
             (void)t_quiver(q, true);  // throws on disagreement
             return {};
         }},
        {"path_reach_characterization",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_connected_quiver(rng, small(rng, 1, 6), small(rng, 0, 3));
             const bool expected = is_acyclic(q) && [&] {
                 for (const auto& row : count_paths_saturating(q, 2))
                     for (auto c : row)
                         if (c > 1) return false;
                 return true;
             }();
             return path_reach_isomorphic(q).isomorphic == expected ? "" : "verdict disagrees with path counts";
         }},
        {"reduction_fixpoint",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_connected_quiver(rng, small(rng, 1, 6), small(rng, 0, 3), {false, false});
             const Quiver r = path_reduction(q).reduced;
             if (has_simple_path_of_length_two(r)) return "reduced quiver still has a simple path of length 2";
             if (is_simple_alternating(r).alternating && !path_reach_isomorphic(q).isomorphic)
                 return "simple alternating reduction of a quiver with cycles or quasi-bigons";
             return {};
         }},
        {"euler_characteristic",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 7), small(rng, 0, 10));
             const auto c = order_complex(reachability_poset(q).poset);
             const auto b = betti(c, 0);
             long long chi = 0;
             for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(b[k]);
             return chi == c.euler() ? "" : "Euler characteristic mismatch";
         }},
        {"hochschild_equals_nerve",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 4), small(rng, 0, 6));
             const auto p = reachability_poset(q).poset;
             const auto nerve = nerve_betti(p, 2, 2);
             for (std::size_t k = 0; k <= 2; ++k)
                 if (hochschild_oracle(p, k, 2) != nerve[k]) return "degree " + std::to_string(k) + " disagrees";
             return {};
         }},
        {"morita_relabel",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 6), small(rng, 0, 9));
             return morita_equivalent(q, relabel(rng, q)).equivalent ? "" : "relabeled copy not equivalent";
         }},
        {"curve_piecewise_constant",
         [](Rng& rng, std::size_t) -> std::string {
             const Quiver q = random_quiver(rng, small(rng, 1, 5), small(rng, 0, 7));
             std::vector<Decimal> vs, es;
             for (std::size_t v = 0; v < q.vertex_count(); ++v) vs.emplace_back(static_cast<long long>(small(rng, 0, 3)));
             for (const auto& e : q.edges())
                 es.push_back(std::max(vs[e.source], vs[e.target]) + Decimal(static_cast<long long>(small(rng, 0, 3))));
             const FilteredQuiver fq(q, vs, es);
             const auto curve = hh_betti_curves(fq, 2, 1);
             for (std::size_t k = 0; k + 1 < curve.thresholds.size(); ++k) {
                 const auto mid = Decimal::midpoint(curve.thresholds[k], curve.thresholds[k + 1]);
                 auto direct = nerve_betti_of_quiver(sublevel(fq, mid), 2, 1);
                 if (direct != curve.betti[k]) return "curve changes at " + mid.str();
             }
             return {};
         }},
    };
}

}  // namespace

bool selftest(std::uint64_t seed, std::size_t samples, bool json, std::ostream& out) {
    bool ok = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& p : properties()) {
        Rng rng(seed);
        std::string failure;
        std::size_t i = 0;
        for (; i < samples && failure.empty(); ++i) {
            try {
                failure = p.check(rng, i);
            } catch (const std::exception& e) {
                failure = e.what();
            }
        }
        ok = ok && failure.empty();
        if (json) {
            report.push_back({{"property", p.name}, {"samples", i}, {"passed", failure.empty()}, {"detail", failure}});
        } else if (failure.empty()) {
            out << "PASS " << p.name << " (" << i << " samples)\n";
        } else {
            out << "FAIL " << p.name << " at sample " << i - 1 << ": " << failure << '\n';
        }
    }
    if (json) out << nlohmann::json{{"seed", seed}, {"passed", ok}, {"properties", report}}.dump(2) << '\n';
    return ok;
}

}  // namespace quiverreach::cli
