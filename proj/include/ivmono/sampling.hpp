#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ivmono/errors.hpp"
#include "ivmono/interval.hpp"

namespace ivmono {

// Knobs of the sampling-based verification engine.  Everything downstream
// is a pure function of this struct, so identical configs give
// bit-identical results.
struct SamplingConfig {
    double grid_step = 0.1;       // endpoint grid pitch; must divide 1
    int random_count = 0;         // extra seeded random intervals
    int shift_count = 8;          // shift samples per base point
    std::uint64_t seed = 0xC0FFEE;
    double eps_cmp = 1e-9;        // strictness slack for order violations
    bool degenerate_shifts = false;   // restrict weak-monotonicity shifts to [c,c]
    bool exclude_zero_lambda = false; // drop the [0,0] transform argument

    void validate() const {
        if (!(grid_step > 0.0) || grid_step > 1.0)
            throw BadParamsError("grid_step must lie in (0,1]");
        const double m = std::round(1.0 / grid_step);
        if (m < 1.0 || std::fabs(m * grid_step - 1.0) > 1e-9)
            throw BadParamsError("grid_step must divide 1");
        if (random_count < 0) throw BadParamsError("random_count must be >= 0");
        if (shift_count < 1) throw BadParamsError("shift_count must be >= 1");
        if (eps_cmp < 0.0) throw BadParamsError("eps_cmp must be >= 0");
    }

    int grid_divisions() const { return static_cast<int>(std::round(1.0 / grid_step)); }
};

// Endpoint grid 0, h, 2h, ..., 1 (last point pinned to 1 exactly).
inline std::vector<double> unit_grid(double step) {
    SamplingConfig probe;
    probe.grid_step = step;
    probe.validate();
    const int m = probe.grid_divisions();
    std::vector<double> pts(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) pts[static_cast<std::size_t>(i)] = i * step;
    pts[static_cast<std::size_t>(m)] = 1.0;
    return pts;
}

// All intervals [p_i, p_j], i <= j, over the endpoint grid, ordered
// lexicographically by (lo index, hi index).  This ordering is the
// canonical one every checker iterates in.
inline std::vector<Interval> interval_grid(double step) {
    const auto pts = unit_grid(step);
    std::vector<Interval> out;
    out.reserve(pts.size() * (pts.size() + 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            out.emplace_back(pts[i], pts[j]);
    return out;
}

// Grid intervals followed by random_count seeded random intervals.
inline std::vector<Interval> sample_intervals(const SamplingConfig& cfg) {
    cfg.validate();
    auto out = interval_grid(cfg.grid_step);
    if (cfg.random_count > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < cfg.random_count; ++k) {
            double a = unit(rng), b = unit(rng);
            if (a > b) std::swap(a, b);
            out.emplace_back(a, b);
        }
    }
    return out;
}

namespace detail {

// Deterministic per-item stream splitter for subsampling large spaces.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Row-major odometer over {0..base-1}^n: the last component ticks
// fastest.  Calls fn(indices) for every tuple, in canonical order, until
// fn returns false.
template <typename Fn>
void for_each_tuple(std::size_t base, std::size_t n, Fn&& fn) {
    std::vector<std::size_t> idx(n, 0);
    if (base == 0) return;
    for (;;) {
        if (!fn(idx)) return;
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < base) break;
            idx[k] = 0;
            if (k == 0) return;
        }
    }
}

}  // namespace detail

}  // namespace ivmono
