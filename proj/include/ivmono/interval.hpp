#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ivmono/errors.hpp"

namespace ivmono {

// Absolute tolerance used by the floating-point identities that are not
// stated bit-exact.
inline constexpr double kEpsFp = 1e-12;

// A closed real interval [lo, hi].  The constructor is the only way in, so
// every live Interval satisfies lo <= hi with non-NaN endpoints.
class Interval {
public:
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (std::isnan(lo) || std::isnan(hi))
            throw ConstructionError("interval endpoint is NaN");
        if (lo > hi)
            throw ConstructionError("interval endpoints out of order: [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    }

    static Interval degenerate(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    double mid() const { return (lo_ + hi_) / 2.0; }

    bool is_degenerate() const { return lo_ == hi_; }
    bool in_unit() const { return lo_ >= 0.0 && hi_ <= 1.0; }
    bool is_positive() const { return lo_ > 0.0; }
    bool is_negative() const { return hi_ < 0.0; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    double lo_;
    double hi_;
};

// [0,0] and [1,1], the degenerate unit endpoints.
inline Interval zero_interval() { return Interval(0.0, 0.0); }
inline Interval one_interval() { return Interval(1.0, 1.0); }

// Sum: [a.lo + b.lo, a.hi + b.hi].
inline Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

// Opposite: -[lo, hi] = [-hi, -lo].
inline Interval opposite(const Interval& a) {
    return Interval(-a.hi(), -a.lo());
}

// Difference: [a.lo - b.hi, a.hi - b.lo].  Note X - X is not [0,0] unless
// X is degenerate.
inline Interval sub(const Interval& a, const Interval& b) {
    return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

// Product of nonnegative intervals: [a.lo * b.lo, a.hi * b.hi].  The
// endpoint formula needs lo >= 0 on both sides; zero endpoints are allowed
// so the unit-box builtins stay total.
inline Interval mul_pos(const Interval& a, const Interval& b) {
    if (a.lo() < 0.0 || b.lo() < 0.0)
        throw DomainError("interval product requires nonnegative endpoints");
    return Interval(a.lo() * b.lo(), a.hi() * b.hi());
}

// Scalar multiple: endpoints swap for negative factors.
inline Interval scale(double alpha, const Interval& a) {
    if (alpha >= 0.0) return Interval(alpha * a.lo(), alpha * a.hi());
    return Interval(alpha * a.hi(), alpha * a.lo());
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a) { return opposite(a); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(double alpha, const Interval& a) { return scale(alpha, a); }

// A point of I([0,1])^n (or a direction of I(R)^n); just a sequence.
using IntervalVector = std::vector<Interval>;

inline bool all_in_unit(const IntervalVector& v) {
    for (const auto& x : v)
        if (!x.in_unit()) return false;
    return true;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace detail

// Locale-independent textual form "[lo,hi]" with shortest round-trip
// decimal endpoints.
inline std::string to_string(const Interval& a) {
    return "[" + detail::format_double(a.lo()) + "," + detail::format_double(a.hi()) + "]";
}

// Parses the textual form emitted by to_string.  Whitespace around tokens
// is tolerated.
inline Interval parse_interval(std::string_view text) {
    auto fail = [&] {
        throw ConstructionError("malformed interval literal: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c) fail();
        ++i;
    };
    auto number = [&]() -> double {
        skip_ws();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) fail();
        i = static_cast<std::size_t>(ptr - text.data());
        return v;
    };
    expect('[');
    double lo = number();
    expect(',');
    double hi = number();
    expect(']');
    skip_ws();
    if (i != text.size()) fail();
    return Interval(lo, hi);
}

}  // namespace ivmono
