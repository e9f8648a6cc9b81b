#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ivmono/errors.hpp"
#include "ivmono/function.hpp"
#include "ivmono/interval.hpp"
#include "ivmono/order.hpp"
#include "ivmono/sampling.hpp"

namespace ivmono {

// Direction of a real-pair shift: component i moves to
// [lo + c*a_i, hi + c*b_i].  At least one pair must be nonzero.
class RealPairDirection {
public:
    explicit RealPairDirection(std::vector<std::pair<double, double>> pairs)
        : pairs_(std::move(pairs)) {
        if (pairs_.empty()) throw ConstructionError("direction must have arity >= 1");
        bool nonzero = false;
        for (const auto& [a, b] : pairs_) {
            if (std::isnan(a) || std::isnan(b))
                throw ConstructionError("direction component is NaN");
            if (a != 0.0 || b != 0.0) nonzero = true;
        }
        if (!nonzero) throw ConstructionError("direction must have a nonzero component");
    }

    int arity() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<double, double>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<double, double>> pairs_;
};

// Direction of degenerate-interval shifts: component i moves to
// X_i + k*[v_i, v_i].  Not all components may be zero.
class DegenerateDirection {
public:
    explicit DegenerateDirection(std::vector<double> shifts) : shifts_(std::move(shifts)) {
        if (shifts_.empty()) throw ConstructionError("direction must have arity >= 1");
        bool nonzero = false;
        for (double v : shifts_) {
            if (std::isnan(v)) throw ConstructionError("direction component is NaN");
            if (v != 0.0) nonzero = true;
        }
        if (!nonzero) throw ConstructionError("direction must have a nonzero component");
    }

    int arity() const { return static_cast<int>(shifts_.size()); }
    const std::vector<double>& shifts() const { return shifts_; }

    RealPairDirection as_pairs() const {
        std::vector<std::pair<double, double>> p;
        p.reserve(shifts_.size());
        for (double v : shifts_) p.emplace_back(v, v);
        return RealPairDirection(std::move(p));
    }

private:
    std::vector<double> shifts_;
};

// Marker for the uniform-interval-shift notion: the shift C is drawn by
// the sampler rather than stored in the direction.
struct UniformShift {};

using Direction = std::variant<RealPairDirection, DegenerateDirection, UniformShift>;

// A transform function G fed to the G-weak checker must dominate its
// second argument; this error reports sampled pairs where it does not.
struct GContractViolation {
    Interval x, y, g_value;
};

class GContractError : public Error {
public:
    GContractError(std::vector<GContractViolation> examples, std::int64_t total)
        : Error(message(examples, total)), examples_(std::move(examples)), total_(total) {}

    const std::vector<GContractViolation>& examples() const { return examples_; }
    std::int64_t total() const { return total_; }

private:
    static std::string message(const std::vector<GContractViolation>& ex, std::int64_t total) {
        std::string m = "G violates G(X,Y) >= Y on " + std::to_string(total) + " sampled pair(s)";
        for (const auto& v : ex)
            m += "; G(" + to_string(v.x) + "," + to_string(v.y) + ") = " + to_string(v.g_value);
        return m;
    }

    std::vector<GContractViolation> examples_;
    std::int64_t total_;
};

enum class CheckStatus { VerifiedUpToSampling, Counterexample, Vacuous };
enum class Sense { Increasing, Decreasing };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::VerifiedUpToSampling: return "verified-up-to-sampling";
        case CheckStatus::Counterexample: return "counterexample";
        case CheckStatus::Vacuous: return "vacuous";
    }
    return "?";
}

// How the violating partner point was produced from the base point.
struct ShiftParam {
    enum class Kind { Pair, Scalar, Shift, Lambda };
    Kind kind = Kind::Pair;
    double c = 0.0;                     // Scalar
    std::optional<Interval> interval;   // Shift C or transform argument Lambda
};

// Everything needed to replay a violation through eval and cmp.
struct Witness {
    IntervalVector base;
    ShiftParam param;
    IntervalVector shifted;
    Interval f_before{0.0, 0.0};
    Interval f_after{0.0, 0.0};
    OrderRelation relation = OrderRelation::Equal;  // cmp(order, f_after, f_before) as found
};

struct CheckResult {
    CheckStatus status = CheckStatus::VerifiedUpToSampling;
    std::optional<Witness> witness;
    std::int64_t points_checked = 0;
    std::int64_t comparisons_failed = 0;
    std::int64_t shifts_skipped = 0;
    SamplingConfig config;
};

// ---------------------------------------------------------------------------
// Shift feasibility.

// Supremum k* >= 0 such that every shift 0 < c <= k* keeps the point
// inside the unit box with valid components.  0 means no positive shift
// is feasible.
inline double feasible_max_shift(const IntervalVector& x, const RealPairDirection& dir) {
    if (static_cast<int>(x.size()) != dir.arity())
        throw DomainError("direction arity does not match the point");
    double k = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto [a, b] = dir.pairs()[i];
        const double lo = x[i].lo(), hi = x[i].hi();
        if (a < 0.0) k = std::min(k, lo / -a);
        if (a > 0.0) k = std::min(k, (1.0 - lo) / a);
        if (b > 0.0) k = std::min(k, (1.0 - hi) / b);
        if (a > b) k = std::min(k, (hi - lo) / (a - b));  // keeps lo' <= hi'
    }
    if (!std::isfinite(k)) return 0.0;
    return std::max(0.0, k);
}

inline double feasible_max_shift(const IntervalVector& x, const DegenerateDirection& dir) {
    return feasible_max_shift(x, dir.as_pairs());
}

namespace detail {

// Shifted endpoints can overshoot the box by a few ulps at the extremal
// feasible shift; pull them back before constructing the Interval.
inline Interval snap_unit(double lo, double hi) {
    constexpr double tol = 1e-9;
    if (lo > hi && lo - hi <= tol) lo = hi = (lo + hi) / 2.0;
    if (lo < 0.0 && lo >= -tol) lo = 0.0;
    if (hi > 1.0 && hi <= 1.0 + tol) hi = 1.0;
    if (hi < 0.0 && hi >= -tol) hi = 0.0;
    if (lo > 1.0 && lo <= 1.0 + tol) lo = 1.0;
    return Interval(lo, hi);
}

inline IntervalVector apply_shift(const IntervalVector& x, const RealPairDirection& dir,
                                  double c) {
    IntervalVector out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto [a, b] = dir.pairs()[i];
        out.push_back(snap_unit(x[i].lo() + c * a, x[i].hi() + c * b));
    }
    return out;
}

inline bool violates(const OrderSpec& order, const Interval& before, const Interval& after,
                     Sense sense, double eps) {
    return sense == Sense::Increasing ? !order_geq_slack(order, after, before, eps)
                                      : !order_geq_slack(order, before, after, eps);
}

// Memoizes F over index tuples into a fixed sample list.
class EvalCache {
public:
    EvalCache(const IVFunction& f, const std::vector<Interval>& samples)
        : f_(f), samples_(samples) {}

    const Interval& at(const std::vector<std::size_t>& idx) {
        std::uint64_t rank = 0;
        for (std::size_t k : idx) rank = rank * samples_.size() + k;
        auto it = cache_.find(rank);
        if (it != cache_.end()) return it->second;
        IntervalVector point;
        point.reserve(idx.size());
        for (std::size_t k : idx) point.push_back(samples_[k]);
        return cache_.emplace(rank, f_(point)).first->second;
    }

    IntervalVector point(const std::vector<std::size_t>& idx) const {
        IntervalVector out;
        out.reserve(idx.size());
        for (std::size_t k : idx) out.push_back(samples_[k]);
        return out;
    }

private:
    const IVFunction& f_;
    const std::vector<Interval>& samples_;
    std::unordered_map<std::uint64_t, Interval> cache_;
};

// Exhaustive enumeration is used while the comparison count stays under
// this budget; beyond it the checkers fall back to seeded per-point
// subsampling (still deterministic for a fixed config).
inline constexpr std::uint64_t kComparisonBudget = 20'000'000;

inline void record_failure(CheckResult& res, const OrderSpec& order, IntervalVector base,
                           ShiftParam param, IntervalVector shifted, const Interval& fb,
                           const Interval& fa) {
    ++res.comparisons_failed;
    if (!res.witness) {
        res.witness = Witness{std::move(base), std::move(param), std::move(shifted), fb, fa,
                              cmp(order, fa, fb)};
    }
}

inline void finalize_status(CheckResult& res) {
    if (res.comparisons_failed > 0)
        res.status = CheckStatus::Counterexample;
    else if (res.points_checked == 0)
        res.status = CheckStatus::Vacuous;
    else
        res.status = CheckStatus::VerifiedUpToSampling;
}

inline CheckResult check_increasing_on(const IVFunction& f, const OrderSpec& order,
                                       const SamplingConfig& cfg, Sense sense,
                                       const std::vector<Interval>& samples) {
    const std::size_t n = static_cast<std::size_t>(f.arity());
    const std::size_t m = samples.size();
    CheckResult res;
    res.config = cfg;
    EvalCache cache(f, samples);

    // Comparable pairs per component, canonical (i, then j) order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const OrderRelation r = cmp(order, samples[i], samples[j]);
            if (r == OrderRelation::Less || r == OrderRelation::Equal) pairs.emplace_back(i, j);
        }

    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (pairs.empty() || total > kComparisonBudget / pairs.size()) {
            exhaustive = false;
            break;
        }
        total *= pairs.size();
    }

    std::vector<std::size_t> xi(n), yi(n);
    auto compare_pair = [&] {
        const Interval& fb = cache.at(xi);
        const Interval& fa = cache.at(yi);
        ++res.points_checked;
        if (violates(order, fb, fa, sense, cfg.eps_cmp))
            record_failure(res, order, cache.point(xi), ShiftParam{}, cache.point(yi), fb, fa);
    };

    if (exhaustive) {
        for_each_tuple(pairs.size(), n, [&](const std::vector<std::size_t>& slot) {
            for (std::size_t k = 0; k < n; ++k) {
                xi[k] = pairs[slot[k]].first;
                yi[k] = pairs[slot[k]].second;
            }
            compare_pair();
            return true;
        });
    } else {
        // Upward partners per component, sampled per base point.
        std::vector<std::vector<std::size_t>> ups(m);
        for (const auto& [i, j] : pairs) ups[i].push_back(j);
        std::uint64_t base_rank = 0;
        for_each_tuple(m, n, [&](const std::vector<std::size_t>& base_idx) {
            std::uint64_t stream = splitmix64(cfg.seed ^ splitmix64(base_rank));
            ++base_rank;
            for (int s = 0; s < cfg.shift_count; ++s) {
                bool ok = true;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& cands = ups[base_idx[k]];
                    if (cands.empty()) { ok = false; break; }
                    stream = splitmix64(stream);
                    xi[k] = base_idx[k];
                    yi[k] = cands[stream % cands.size()];
                }
                if (ok) compare_pair();
            }
            return true;
        });
    }

    finalize_status(res);
    return res;
}

inline CheckResult check_directional_core(const IVFunction& f, const RealPairDirection& dir,
                                          const OrderSpec& order, const SamplingConfig& cfg,
                                          Sense sense, const std::vector<Interval>& samples) {
    if (dir.arity() != f.arity())
        throw BadParamsError("direction arity " + std::to_string(dir.arity()) +
                             " does not match function arity " + std::to_string(f.arity()));
    CheckResult res;
    res.config = cfg;
    const std::size_t n = static_cast<std::size_t>(f.arity());

    for_each_tuple(samples.size(), n, [&](const std::vector<std::size_t>& idx) {
        IntervalVector base;
        base.reserve(n);
        for (std::size_t k : idx) base.push_back(samples[k]);

        const double kmax = feasible_max_shift(base, dir);
        if (kmax <= 0.0) {
            ++res.shifts_skipped;
            return true;
        }
        const Interval fb = f(base);
        for (int s = 1; s <= cfg.shift_count; ++s) {
            const double c = kmax * s / cfg.shift_count;
            IntervalVector shifted = apply_shift(base, dir, c);
            const Interval fa = f(shifted);
            ++res.points_checked;
            if (violates(order, fb, fa, sense, cfg.eps_cmp)) {
                ShiftParam p;
                p.kind = ShiftParam::Kind::Scalar;
                p.c = c;
                record_failure(res, order, base, p, std::move(shifted), fb, fa);
            }
        }
        return true;
    });

    finalize_status(res);
    return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checkers.  Each samples the quantifiers of its monotonicity notion,
// reports the first violation in canonical sample order, and never folds
// Vacuous into Verified.

// Standard monotonicity w.r.t. the componentwise (product) order induced
// by `order`.
inline CheckResult check_increasing(const IVFunction& f, const OrderSpec& order,
                                    const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    return detail::check_increasing_on(f, order, cfg, sense, sample_intervals(cfg));
}

// Directional monotonicity along real-pair shifts, compared under the
// Kulisch-Miranker order.  Incomparable results violate both senses.
inline CheckResult check_directional_km(const IVFunction& f, const RealPairDirection& dir,
                                        const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    return detail::check_directional_core(f, dir, OrderSpec::km(), cfg, sense,
                                          sample_intervals(cfg));
}

// Weak monotonicity under KM: one real pair replicated across all
// arguments.
inline CheckResult check_weak_km(const IVFunction& f, std::pair<double, double> ab,
                                 const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    std::vector<std::pair<double, double>> pairs(static_cast<std::size_t>(f.arity()), ab);
    return detail::check_directional_core(f, RealPairDirection(std::move(pairs)),
                                          OrderSpec::km(), cfg, sense, sample_intervals(cfg));
}

// Weak monotonicity under an admissible order: every argument shifted by
// the same interval C (non-degenerate C allowed unless the config
// restricts shifts to [c,c]).
inline CheckResult check_weak_adm(const IVFunction& f, const OrderSpec& order,
                                  const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    if (!order.is_total())
        throw BadParamsError("weak monotonicity under an order needs a total order");
    const auto samples = sample_intervals(cfg);

    std::vector<Interval> shifts;
    for (const auto& c : samples) {
        if (c == zero_interval()) continue;
        if (cfg.degenerate_shifts && !c.is_degenerate()) continue;
        shifts.push_back(c);
    }

    CheckResult res;
    res.config = cfg;
    const std::size_t n = static_cast<std::size_t>(f.arity());

    detail::for_each_tuple(samples.size(), n, [&](const std::vector<std::size_t>& idx) {
        IntervalVector base;
        base.reserve(n);
        for (std::size_t k : idx) base.push_back(samples[k]);
        std::optional<Interval> fb;

        for (const auto& c : shifts) {
            bool feasible = true;
            for (const auto& x : base)
                if (x.hi() + c.hi() > 1.0 + 1e-12) {
                    feasible = false;
                    break;
                }
            if (!feasible) {
                ++res.shifts_skipped;
                continue;
            }
            IntervalVector shifted;
            shifted.reserve(n);
            for (const auto& x : base)
                shifted.push_back(detail::snap_unit(x.lo() + c.lo(), x.hi() + c.hi()));
            if (!fb) fb = f(base);
            const Interval fa = f(shifted);
            ++res.points_checked;
            if (detail::violates(order, *fb, fa, sense, cfg.eps_cmp)) {
                ShiftParam p;
                p.kind = ShiftParam::Kind::Shift;
                p.interval = c;
                detail::record_failure(res, order, base, p, std::move(shifted), *fb, fa);
            }
        }
        return true;
    });

    detail::finalize_status(res);
    return res;
}

// Directional monotonicity along degenerate-interval shifts, compared
// under an admissible order.
inline CheckResult check_directional_adm(const IVFunction& f, const DegenerateDirection& dir,
                                         const OrderSpec& order, const SamplingConfig& cfg,
                                         Sense sense) {
    cfg.validate();
    if (!order.is_total())
        throw BadParamsError("directional monotonicity under an order needs a total order");
    return detail::check_directional_core(f, dir.as_pairs(), order, cfg, sense,
                                          sample_intervals(cfg));
}

// G-weak monotonicity: F(G(L,X_1),...,G(L,X_n)) compared against
// F(X_1,...,X_n).  First verifies the G(X,Y) >= Y contract on the sample
// set and throws GContractError when it fails.
inline CheckResult check_g_weak(const IVFunction& f, const IVFunction& g, const OrderSpec& order,
                                const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    if (!order.is_total())
        throw BadParamsError("G-weak monotonicity needs a total order");
    if (g.arity() != 2) throw BadParamsError("G must have arity 2");
    const auto samples = sample_intervals(cfg);
    const std::size_t m = samples.size();

    // Contract pass doubles as a table of G over sample pairs.
    std::vector<Interval> g_table;
    g_table.reserve(m * m);
    std::vector<GContractViolation> contract_examples;
    std::int64_t contract_failures = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Interval gv = g({samples[i], samples[j]});
            if (!order_geq_slack(order, gv, samples[j], cfg.eps_cmp)) {
                ++contract_failures;
                if (contract_examples.size() < 5)
                    contract_examples.push_back({samples[i], samples[j], gv});
            }
            g_table.push_back(gv);
        }
    if (contract_failures > 0)
        throw GContractError(std::move(contract_examples), contract_failures);

    CheckResult res;
    res.config = cfg;
    const std::size_t n = static_cast<std::size_t>(f.arity());
    detail::EvalCache cache(f, samples);

    for (std::size_t li = 0; li < m; ++li) {
        if (cfg.exclude_zero_lambda && samples[li] == zero_interval()) {
            ++res.shifts_skipped;
            continue;
        }
        detail::for_each_tuple(m, n, [&](const std::vector<std::size_t>& idx) {
            IntervalVector transformed;
            transformed.reserve(n);
            for (std::size_t k : idx) transformed.push_back(g_table[li * m + k]);
            const Interval& fb = cache.at(idx);
            const Interval fa = f(transformed);
            ++res.points_checked;
            if (detail::violates(order, fb, fa, sense, cfg.eps_cmp)) {
                ShiftParam p;
                p.kind = ShiftParam::Kind::Lambda;
                p.interval = samples[li];
                detail::record_failure(res, order, cache.point(idx), p, std::move(transformed),
                                       fb, fa);
            }
            return true;
        });
    }

    detail::finalize_status(res);
    return res;
}

// Scalar analogue on [0,1]: f(g(l,x_1),...,g(l,x_n)) >= f(x), with l
// drawn from (0,1].  Serves as a degenerate-interval cross-oracle for the
// interval checker.
inline CheckResult check_g_weak_scalar(const ScalarFn& f,
                                       const std::function<double(double, double)>& g,
                                       const SamplingConfig& cfg, Sense sense) {
    cfg.validate();
    if (f.arity < 1) throw BadParamsError("scalar function arity must be >= 1");
    const auto pts = unit_grid(cfg.grid_step);

    std::vector<GContractViolation> contract_examples;
    std::int64_t contract_failures = 0;
    for (double x : pts)
        for (double y : pts) {
            const double gv = g(x, y);
            if (gv < y - cfg.eps_cmp) {
                ++contract_failures;
                if (contract_examples.size() < 5)
                    contract_examples.push_back({Interval::degenerate(x), Interval::degenerate(y),
                                                 Interval::degenerate(gv)});
            }
        }
    if (contract_failures > 0)
        throw GContractError(std::move(contract_examples), contract_failures);

    CheckResult res;
    res.config = cfg;
    const std::size_t n = static_cast<std::size_t>(f.arity);

    std::vector<double> point(n), mapped(n);
    for (double lambda : pts) {
        if (lambda == 0.0) continue;  // the scalar notion draws shifts from (0,1]
        detail::for_each_tuple(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t k = 0; k < n; ++k) {
                point[k] = pts[idx[k]];
                mapped[k] = g(lambda, point[k]);
            }
            const double before = f.f(point);
            const double after = f.f(mapped);
            ++res.points_checked;
            const bool bad = sense == Sense::Increasing ? after < before - cfg.eps_cmp
                                                        : after > before + cfg.eps_cmp;
            if (bad) {
                ++res.comparisons_failed;
                if (!res.witness) {
                    Witness w;
                    for (std::size_t k = 0; k < n; ++k) {
                        w.base.push_back(Interval::degenerate(point[k]));
                        w.shifted.push_back(Interval::degenerate(mapped[k]));
                    }
                    w.param.kind = ShiftParam::Kind::Lambda;
                    w.param.interval = Interval::degenerate(lambda);
                    w.f_before = Interval::degenerate(before);
                    w.f_after = Interval::degenerate(after);
                    w.relation = after < before    ? OrderRelation::Less
                                 : after > before  ? OrderRelation::Greater
                                                   : OrderRelation::Equal;
                    res.witness = std::move(w);
                }
            }
            return true;
        });
    }

    detail::finalize_status(res);
    return res;
}

// Re-evaluates a witness through eval and the order comparison; true when
// it still exhibits a violation.
inline bool replay_violates(const IVFunction& f, const OrderSpec& order, const Witness& w,
                            Sense sense, double eps) {
    const Interval fb = f(w.base);
    const Interval fa = f(w.shifted);
    return fb == w.f_before && fa == w.f_after && detail::violates(order, fb, fa, sense, eps);
}

}  // namespace ivmono
