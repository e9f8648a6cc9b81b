#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ivmono/errors.hpp"
#include "ivmono/interval.hpp"
#include "ivmono/order.hpp"

namespace ivmono {

// Per-argument monotonicity of a scalar function, used to evaluate its
// best interval representation at box corners.
enum class MonotoneHint { Increasing, Decreasing, Unknown };

// A total scalar function [0,1]^n -> [0,1].
struct ScalarFn {
    int arity;
    std::function<double(const std::vector<double>&)> f;
};

// An interval-valued function I([0,1])^n -> I([0,1]).  Values are
// immutable after construction; evaluation is pure.  Every evaluation
// validates the argument point and the unit range of the result.
class IVFunction {
public:
    int arity() const { return arity_; }
    const std::string& description() const { return desc_; }

    // True when the value comes from dense box sampling rather than an
    // exact corner rule, so results are approximate at grid resolution.
    bool approximate() const { return approx_; }

    Interval operator()(const IntervalVector& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw DomainError(desc_ + ": expected " + std::to_string(arity_) +
                              " arguments, got " + std::to_string(args.size()));
        for (const auto& a : args)
            if (!a.in_unit())
                throw DomainError(desc_ + ": argument " + to_string(a) +
                                  " outside the unit box");
        Interval r = fn_(args);
        // Absorb float noise at the unit boundary, then enforce the range
        // contract.
        double lo = r.lo(), hi = r.hi();
        if (lo < 0.0 && lo > -kEpsFp) lo = 0.0;
        if (hi > 1.0 && hi < 1.0 + kEpsFp) hi = 1.0;
        if (lo > 1.0 && lo < 1.0 + kEpsFp) lo = 1.0;
        if (hi < 0.0 && hi > -kEpsFp) hi = 0.0;
        Interval snapped(lo, hi);
        if (!snapped.in_unit()) {
            std::string point = "(";
            for (std::size_t i = 0; i < args.size(); ++i)
                point += (i ? "," : "") + to_string(args[i]);
            point += ")";
            throw RangeError(desc_ + ": value " + to_string(snapped) +
                             " at " + point + " leaves [0,1]");
        }
        return snapped;
    }

    Interval eval(const IntervalVector& args) const { return (*this)(args); }

    static IVFunction from_raw(int arity, std::string desc,
                               std::function<Interval(const IntervalVector&)> fn,
                               bool approx = false) {
        if (arity < 1) throw BadParamsError("function arity must be >= 1");
        IVFunction out;
        out.arity_ = arity;
        out.desc_ = std::move(desc);
        out.fn_ = std::move(fn);
        out.approx_ = approx;
        return out;
    }

    // Best interval representation of a scalar function: [min f, max f]
    // over the argument box.  Arguments with a known monotone hint
    // contribute only corners; the rest are densely sampled at
    // `resolution` subdivisions and flagged approximate.
    static IVFunction scalar_lift(ScalarFn f, std::vector<MonotoneHint> hints,
                                  std::string desc, int resolution = 48) {
        if (f.arity < 1) throw BadParamsError("scalar function arity must be >= 1");
        if (hints.empty()) hints.assign(static_cast<std::size_t>(f.arity), MonotoneHint::Unknown);
        if (static_cast<int>(hints.size()) != f.arity)
            throw BadParamsError("one monotone hint per argument required");
        if (resolution < 1) throw BadParamsError("lift resolution must be >= 1");
        const bool approx =
            std::any_of(hints.begin(), hints.end(),
                        [](MonotoneHint h) { return h == MonotoneHint::Unknown; });

        auto body = [f = std::move(f), hints = std::move(hints),
                     resolution](const IntervalVector& args) {
            auto extremum = [&](bool want_max) {
                // Candidate coordinates per axis: a single endpoint when
                // the hint decides the extremum, a dense line otherwise.
                std::vector<std::vector<double>> axes(args.size());
                for (std::size_t i = 0; i < args.size(); ++i) {
                    const Interval& a = args[i];
                    switch (hints[i]) {
                        case MonotoneHint::Increasing:
                            axes[i] = {want_max ? a.hi() : a.lo()};
                            break;
                        case MonotoneHint::Decreasing:
                            axes[i] = {want_max ? a.lo() : a.hi()};
                            break;
                        case MonotoneHint::Unknown: {
                            axes[i].reserve(static_cast<std::size_t>(resolution) + 1);
                            for (int k = 0; k <= resolution; ++k)
                                axes[i].push_back(a.lo() + (a.width() * k) / resolution);
                            break;
                        }
                    }
                }
                double best = want_max ? -1.0 : 2.0;
                std::vector<double> point(args.size());
                std::vector<std::size_t> idx(args.size(), 0);
                for (;;) {
                    for (std::size_t i = 0; i < args.size(); ++i) point[i] = axes[i][idx[i]];
                    const double v = f.f(point);
                    best = want_max ? std::max(best, v) : std::min(best, v);
                    std::size_t k = args.size();
                    bool done = true;
                    while (k > 0) {
                        --k;
                        if (++idx[k] < axes[k].size()) { done = false; break; }
                        idx[k] = 0;
                    }
                    if (done) break;
                }
                return best;
            };
            const double lo = extremum(false);
            const double hi = extremum(true);
            return Interval(std::min(lo, hi), std::max(lo, hi));
        };
        return from_raw(f.arity, std::move(desc), std::move(body), approx);
    }

private:
    IVFunction() = default;

    int arity_ = 0;
    std::string desc_;
    std::function<Interval(const IntervalVector&)> fn_;
    bool approx_ = false;
};

inline Interval eval(const IVFunction& f, const IntervalVector& args) { return f(args); }

// ---------------------------------------------------------------------------
// Scalar families behind the lifted builtins.

inline double lukasiewicz_impl(double x, double y) { return std::min(1.0, 1.0 - x + y); }
inline double reichenbach_impl(double x, double y) { return 1.0 - x + x * y; }
inline double truncated_diff(double x, double y) { return std::max(0.0, x - y); }
inline double prob_sum(double x, double y) { return x + y - x * y; }

namespace detail {

inline ScalarFn binary_scalar(double (*g)(double, double)) {
    return ScalarFn{2, [g](const std::vector<double>& v) { return g(v[0], v[1]); }};
}

inline std::string join_params(const std::vector<double>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : "") + format_double(params[i]);
    return out;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "mean",   "wmean",    "prod",       "min-km", "max-km",
        "luk-impl", "rb-impl", "trunc-diff", "g-probsum", "g-max",
    };
    return names;
}

// Builds a registered builtin.
//   mean, prod, min-km, max-km      arity n, no params
//   wmean(w1..wn)                   weights nonnegative, summing to 1
//   luk-impl, rb-impl               lifted implications, arity 2
//   trunc-diff, g-probsum           lifted max(0,x-y) and x+y-xy, arity 2
//   g-max                           order maximum of its two arguments;
//                                   needs the total order it maximizes under
inline IVFunction make_builtin(const std::string& name,
                               const std::vector<double>& params = {}, int arity = 2,
                               const std::optional<OrderSpec>& order = std::nullopt) {
    auto no_params = [&] {
        if (!params.empty())
            throw BadParamsError(name + " takes no numeric parameters");
    };
    auto fixed_arity_2 = [&] {
        if (arity != 2) throw BadParamsError(name + " has arity 2");
    };

    if (name == "mean") {
        no_params();
        if (arity < 1) throw BadParamsError("mean needs arity >= 1");
        return IVFunction::from_raw(arity, "mean", [arity](const IntervalVector& v) {
            double lo = 0.0, hi = 0.0;
            for (const auto& x : v) { lo += x.lo(); hi += x.hi(); }
            return Interval(lo / arity, hi / arity);
        });
    }
    if (name == "wmean") {
        if (params.empty()) throw BadParamsError("wmean needs weights");
        if (arity != static_cast<int>(params.size()))
            throw BadParamsError("wmean weight count must equal the arity");
        double sum = 0.0;
        for (double w : params) {
            if (w < 0.0) throw BadParamsError("wmean weights must be nonnegative");
            sum += w;
        }
        if (std::fabs(sum - 1.0) > kEpsFp)
            throw BadParamsError("wmean weights must sum to 1");
        auto weights = params;
        return IVFunction::from_raw(
            arity, "wmean(" + detail::join_params(params) + ")",
            [weights](const IntervalVector& v) {
                double lo = 0.0, hi = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    lo += weights[i] * v[i].lo();
                    hi += weights[i] * v[i].hi();
                }
                return Interval(lo, hi);
            });
    }
    if (name == "prod") {
        no_params();
        if (arity < 1) throw BadParamsError("prod needs arity >= 1");
        return IVFunction::from_raw(arity, "prod", [](const IntervalVector& v) {
            Interval acc = v[0];
            for (std::size_t i = 1; i < v.size(); ++i) acc = mul_pos(acc, v[i]);
            return acc;
        });
    }
    if (name == "min-km" || name == "max-km") {
        no_params();
        if (arity < 1) throw BadParamsError(name + " needs arity >= 1");
        const bool is_min = name == "min-km";
        return IVFunction::from_raw(arity, name, [is_min](const IntervalVector& v) {
            double lo = v[0].lo(), hi = v[0].hi();
            for (std::size_t i = 1; i < v.size(); ++i) {
                lo = is_min ? std::min(lo, v[i].lo()) : std::max(lo, v[i].lo());
                hi = is_min ? std::min(hi, v[i].hi()) : std::max(hi, v[i].hi());
            }
            return Interval(lo, hi);
        });
    }
    if (name == "luk-impl") {
        no_params();
        fixed_arity_2();
        return IVFunction::scalar_lift(
            detail::binary_scalar(lukasiewicz_impl),
            {MonotoneHint::Decreasing, MonotoneHint::Increasing}, "luk-impl");
    }
    if (name == "rb-impl") {
        no_params();
        fixed_arity_2();
        return IVFunction::scalar_lift(
            detail::binary_scalar(reichenbach_impl),
            {MonotoneHint::Decreasing, MonotoneHint::Increasing}, "rb-impl");
    }
    if (name == "trunc-diff") {
        no_params();
        fixed_arity_2();
        return IVFunction::scalar_lift(
            detail::binary_scalar(truncated_diff),
            {MonotoneHint::Increasing, MonotoneHint::Decreasing}, "trunc-diff");
    }
    if (name == "g-probsum") {
        no_params();
        fixed_arity_2();
        return IVFunction::scalar_lift(
            detail::binary_scalar(prob_sum),
            {MonotoneHint::Increasing, MonotoneHint::Increasing}, "g-probsum");
    }
    if (name == "g-max") {
        no_params();
        fixed_arity_2();
        if (!order || !order->is_total())
            throw BadParamsError("g-max needs a total order parameter");
        const OrderSpec ord = *order;
        return IVFunction::from_raw(2, "g-max(" + ord.name() + ")",
                                    [ord](const IntervalVector& v) {
                                        return cmp(ord, v[0], v[1]) == OrderRelation::Less
                                                   ? v[1]
                                                   : v[0];
                                    });
    }
    throw UnknownBuiltinError("unknown builtin '" + name + "'");
}

}  // namespace ivmono
