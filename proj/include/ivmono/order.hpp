#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "ivmono/errors.hpp"
#include "ivmono/interval.hpp"

namespace ivmono {

// Result of comparing two intervals.  Incomparable can only come out of
// the Kulisch-Miranker partial order; total orders never produce it.
enum class OrderRelation { Less, Equal, Greater, Incomparable };

inline std::string_view to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::Less: return "less";
        case OrderRelation::Equal: return "equal";
        case OrderRelation::Greater: return "greater";
        case OrderRelation::Incomparable: return "incomparable";
    }
    return "?";
}

inline OrderRelation converse(OrderRelation r) {
    switch (r) {
        case OrderRelation::Less: return OrderRelation::Greater;
        case OrderRelation::Greater: return OrderRelation::Less;
        default: return r;
    }
}

// Kulisch-Miranker comparison: X <= Y iff both endpoints are <=.
inline OrderRelation km_compare(const Interval& x, const Interval& y) {
    if (x == y) return OrderRelation::Equal;
    const bool le = x.lo() <= y.lo() && x.hi() <= y.hi();
    const bool ge = x.lo() >= y.lo() && x.hi() >= y.hi();
    if (le) return OrderRelation::Less;
    if (ge) return OrderRelation::Greater;
    return OrderRelation::Incomparable;
}

// Endpoint key functions [0,1]^2 -> [0,1] used to build two-key total
// orders.
using KeyFn = double (*)(double lo, double hi);

inline double key_lower(double lo, double /*hi*/) { return lo; }
inline double key_upper(double /*lo*/, double hi) { return hi; }
inline double key_mid(double lo, double hi) { return (lo + hi) / 2.0; }
inline double key_width(double lo, double hi) { return hi - lo; }

inline KeyFn key_by_name(std::string_view name) {
    if (name == "lower") return key_lower;
    if (name == "upper") return key_upper;
    if (name == "mid") return key_mid;
    if (name == "width") return key_width;
    throw BadParamsError("unknown key function '" + std::string(name) +
                         "' (known: lower, upper, mid, width)");
}

enum class OrderKind { KulischMiranker, LexLower, LexUpper, XuYager, TwoKey };

// Key ties are decided at this tolerance by default.  Zero would be the
// ideal on dyadic endpoints, but decimal literals carry representation
// error (the doubles 0.1+0.5 and 0.2+0.4 differ by one ulp), so exact
// comparison breaks midpoint ties that hold in decimal arithmetic.  At
// 1e-12 the noise clusters (~1e-16 wide) collapse while distinct grid
// keys (>= 1/2k apart on a 1/k grid) stay separated, so transitivity is
// unaffected on every admissible grid.
inline constexpr double kEpsOrd = 1e-12;

// Specification of a comparison on I([0,1]): either the Kulisch-Miranker
// partial order, or a total order generated by two key functions compared
// lexicographically.  Larger tolerances are opt-in for functions whose
// outputs carry real rounding noise; they break transitivity in general.
class OrderSpec {
public:
    static OrderSpec km() { return OrderSpec(OrderKind::KulischMiranker, "km", nullptr, nullptr, 0.0); }
    static OrderSpec lex_lower(double tol = kEpsOrd) {
        return OrderSpec(OrderKind::LexLower, "lex-lower", key_lower, key_upper, tol);
    }
    static OrderSpec lex_upper(double tol = kEpsOrd) {
        return OrderSpec(OrderKind::LexUpper, "lex-upper", key_upper, key_lower, tol);
    }
    static OrderSpec xu_yager(double tol = kEpsOrd) {
        return OrderSpec(OrderKind::XuYager, "xu-yager", key_mid, key_upper, tol);
    }
    static OrderSpec two_key(std::string_view k1, std::string_view k2, double tol = kEpsOrd) {
        OrderSpec s(OrderKind::TwoKey,
                    "two-key:" + std::string(k1) + "," + std::string(k2),
                    key_by_name(k1), key_by_name(k2), tol);
        return s;
    }

    // Accepts the CLI names: km, lex-lower, lex-upper, xu-yager,
    // two-key:<k1>,<k2>.  Inside DSL call arguments a colon may stand in
    // for the comma (two-key:<k1>:<k2>) since commas separate arguments.
    static OrderSpec from_name(std::string_view name, double tol = kEpsOrd) {
        if (name == "km") return km();
        if (name == "lex-lower") return lex_lower(tol);
        if (name == "lex-upper") return lex_upper(tol);
        if (name == "xu-yager") return xu_yager(tol);
        constexpr std::string_view prefix = "two-key:";
        if (name.substr(0, prefix.size()) == prefix) {
            std::string_view rest = name.substr(prefix.size());
            std::size_t sep = rest.find(',');
            if (sep == std::string_view::npos) sep = rest.find(':');
            if (sep == std::string_view::npos)
                throw BadParamsError("two-key order needs two key names, got '" +
                                     std::string(name) + "'");
            return two_key(rest.substr(0, sep), rest.substr(sep + 1), tol);
        }
        throw BadParamsError("unknown order '" + std::string(name) +
                             "' (known: km, lex-lower, lex-upper, xu-yager, two-key:<k1>,<k2>)");
    }

    OrderKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_total() const { return kind_ != OrderKind::KulischMiranker; }
    double tolerance() const { return tol_; }

    double key1(const Interval& x) const { return k1_(x.lo(), x.hi()); }
    double key2(const Interval& x) const { return k2_(x.lo(), x.hi()); }

private:
    OrderSpec(OrderKind kind, std::string name, KeyFn k1, KeyFn k2, double tol)
        : kind_(kind), name_(std::move(name)), k1_(k1), k2_(k2), tol_(tol) {
        if (tol < 0.0) throw BadParamsError("order tolerance must be >= 0");
    }

    OrderKind kind_;
    std::string name_;
    KeyFn k1_;
    KeyFn k2_;
    double tol_;
};

// Compares under the given order.  Total kinds decide by the first key,
// fall through to the second on a tie, and return Equal only when both
// keys tie (within the order's tolerance).
inline OrderRelation cmp(const OrderSpec& order, const Interval& x, const Interval& y) {
    if (order.kind() == OrderKind::KulischMiranker) return km_compare(x, y);
    const double d1 = order.key1(x) - order.key1(y);
    if (std::fabs(d1) > order.tolerance()) return d1 < 0 ? OrderRelation::Less : OrderRelation::Greater;
    const double d2 = order.key2(x) - order.key2(y);
    if (std::fabs(d2) > order.tolerance()) return d2 < 0 ? OrderRelation::Less : OrderRelation::Greater;
    return OrderRelation::Equal;
}

inline bool order_leq(const OrderSpec& order, const Interval& x, const Interval& y) {
    const OrderRelation r = cmp(order, x, y);
    return r == OrderRelation::Less || r == OrderRelation::Equal;
}

// True unless the order finds `a` strictly below `b` with the deciding
// key's gap (or an endpoint gap, for KM) above `slack`.  cmp decides the
// relation, so this cannot disagree with it on near-tie keys.  Under KM
// an incomparable pair fails both directions.
inline bool order_geq_slack(const OrderSpec& order, const Interval& a, const Interval& b,
                            double slack) {
    if (order.kind() == OrderKind::KulischMiranker)
        return a.lo() >= b.lo() - slack && a.hi() >= b.hi() - slack;
    if (cmp(order, a, b) != OrderRelation::Less) return true;
    const double d1 = order.key1(a) - order.key1(b);
    if (std::fabs(d1) > order.tolerance()) return -d1 <= slack;
    return -(order.key2(a) - order.key2(b)) <= slack;
}

}  // namespace ivmono
