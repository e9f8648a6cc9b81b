#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivmono/interval.hpp"
#include "ivmono/order.hpp"
#include "ivmono/sampling.hpp"

namespace ivmono {

// One offending pair or triple, kept for the report.
struct AdmissibilityWitness {
    std::string category;
    std::vector<Interval> intervals;
    std::string detail;
};

// Empirical verdict on the admissibility contract: a total order on
// I([0,1]) refining Kulisch-Miranker.  A failing report is a valid result,
// not an error.
struct AdmissibilityReport {
    std::string order_name;
    std::int64_t intervals_sampled = 0;
    std::int64_t pairs_checked = 0;
    std::int64_t triples_checked = 0;
    std::int64_t totality_violations = 0;
    std::int64_t antisymmetry_violations = 0;
    std::int64_t transitivity_violations = 0;
    std::int64_t refinement_violations = 0;
    std::int64_t separation_violations = 0;
    std::vector<AdmissibilityWitness> witnesses;  // a few per category
    bool pass = false;
};

namespace detail {

inline void add_witness(AdmissibilityReport& rep, std::string category,
                        std::vector<Interval> intervals, std::string what) {
    constexpr std::size_t per_category_cap = 3;
    std::size_t count = 0;
    for (const auto& w : rep.witnesses)
        if (w.category == category) ++count;
    if (count < per_category_cap)
        rep.witnesses.push_back({std::move(category), std::move(intervals), std::move(what)});
}

}  // namespace detail

// Checks totality, antisymmetry (including two-key separation of distinct
// intervals), transitivity over all sampled triples, and KM refinement,
// over the grid plus any random intervals from the config.
inline AdmissibilityReport is_admissible(const OrderSpec& order, const SamplingConfig& cfg) {
    const auto samples = sample_intervals(cfg);
    const std::size_t n = samples.size();

    AdmissibilityReport rep;
    rep.order_name = order.name();
    rep.intervals_sampled = static_cast<std::int64_t>(n);

    // Pairwise relations, cached for the triple scan below.
    std::vector<OrderRelation> rel(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rel[i * n + j] = cmp(order, samples[i], samples[j]);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++rep.pairs_checked;
            const Interval& x = samples[i];
            const Interval& y = samples[j];
            const OrderRelation r = rel[i * n + j];
            const OrderRelation r_back = rel[j * n + i];

            if (r == OrderRelation::Incomparable) {
                ++rep.totality_violations;
                detail::add_witness(rep, "totality", {x, y}, "pair is incomparable");
            }
            if (r == OrderRelation::Less && r_back == OrderRelation::Less) {
                ++rep.antisymmetry_violations;
                detail::add_witness(rep, "antisymmetry", {x, y}, "both directions compare less");
            }
            if (r == OrderRelation::Greater && r_back == OrderRelation::Greater) {
                ++rep.antisymmetry_violations;
                detail::add_witness(rep, "antisymmetry", {x, y}, "both directions compare greater");
            }
            if (r == OrderRelation::Equal && x != y) {
                ++rep.separation_violations;
                detail::add_witness(rep, "separation", {x, y},
                                    "distinct intervals compare equal (keys do not separate)");
            }

            // Refinement: wherever KM is decisive the order must agree
            // strictly.
            const OrderRelation kmr = km_compare(x, y);
            if (kmr == OrderRelation::Less && r != OrderRelation::Less) {
                ++rep.refinement_violations;
                detail::add_witness(rep, "km-refinement", {x, y},
                                    "KM-less pair not strictly less under the order");
            } else if (kmr == OrderRelation::Greater && r != OrderRelation::Greater) {
                ++rep.refinement_violations;
                detail::add_witness(rep, "km-refinement", {x, y},
                                    "KM-greater pair not strictly greater under the order");
            }
        }
    }

    // Transitivity over every sampled triple; Equal links count as <=.
    auto leq_idx = [&](std::size_t i, std::size_t j) {
        const OrderRelation r = rel[i * n + j];
        return r == OrderRelation::Less || r == OrderRelation::Equal;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                ++rep.triples_checked;
                if (leq_idx(i, j) && leq_idx(j, k) && !leq_idx(i, k)) {
                    ++rep.transitivity_violations;
                    detail::add_witness(rep, "transitivity",
                                        {samples[i], samples[j], samples[k]},
                                        "x <= y <= z but not x <= z");
                }
            }
        }
    }

    rep.pass = rep.totality_violations == 0 && rep.antisymmetry_violations == 0 &&
               rep.transitivity_violations == 0 && rep.refinement_violations == 0 &&
               rep.separation_violations == 0;
    return rep;
}

}  // namespace ivmono
