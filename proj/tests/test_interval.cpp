#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "ivmono/interval.hpp"

using namespace ivmono;

namespace {

bool approx(const Interval& x, double lo, double hi, double tol = kEpsFp) {
    return std::fabs(x.lo() - lo) <= tol && std::fabs(x.hi() - hi) <= tol;
}

std::vector<Interval> dyadic_grid(int divisions) {
    std::vector<Interval> out;
    const double h = 1.0 / divisions;
    for (int i = 0; i <= divisions; ++i)
        for (int j = i; j <= divisions; ++j) out.emplace_back(i * h, j * h);
    return out;
}

}  // namespace

TEST_CASE("interval construction enforces the invariant") {
    CHECK(Interval(0.2, 0.5).lo() == 0.2);
    CHECK(Interval(0.3, 0.3).is_degenerate());
    CHECK_THROWS_AS(Interval(0.5, 0.2), ConstructionError);
    CHECK_THROWS_AS(Interval(std::nan(""), 0.5), ConstructionError);
    CHECK_THROWS_AS(Interval(0.1, std::nan("")), ConstructionError);
}

TEST_CASE("domain predicates") {
    CHECK(Interval(0.0, 1.0).in_unit());
    CHECK_FALSE(Interval(-0.1, 0.5).in_unit());
    CHECK_FALSE(Interval(0.5, 1.1).in_unit());
    CHECK(Interval(0.1, 0.5).is_positive());
    CHECK_FALSE(Interval(0.0, 0.5).is_positive());
    CHECK(Interval(-0.5, -0.1).is_negative());
    CHECK_FALSE(Interval(-0.5, 0.0).is_negative());
    CHECK(zero_interval().is_degenerate());
    CHECK(one_interval() == Interval(1.0, 1.0));
}

TEST_CASE("sum of intervals") {
    CHECK(approx(add(Interval(0.1, 0.2), Interval(0.3, 0.5)), 0.4, 0.7));
    CHECK(add(zero_interval(), Interval(0.3, 0.5)) == Interval(0.3, 0.5));
    // The sum may legitimately escape the unit box; the caller owns the
    // domain check.
    CHECK(approx(add(Interval(0.6, 0.8), Interval(0.5, 0.9)), 1.1, 1.7));
}

TEST_CASE("opposite of an interval") {
    CHECK(opposite(Interval(0.2, 0.5)) == Interval(-0.5, -0.2));
    CHECK(opposite(zero_interval()) == zero_interval());
    const Interval x(0.2, 0.5);
    CHECK(opposite(opposite(x)) == x);
}

TEST_CASE("difference of intervals") {
    CHECK(approx(sub(Interval(0.4, 0.6), Interval(0.1, 0.3)), 0.1, 0.5));
    // X - X is not the zero interval unless X is degenerate.
    CHECK(approx(sub(Interval(0.4, 0.6), Interval(0.4, 0.6)), -0.2, 0.2));
    CHECK(approx(sub(Interval(0.5, 0.5), Interval(0.2, 0.2)), 0.3, 0.3));
}

TEST_CASE("product of nonnegative intervals") {
    CHECK(approx(mul_pos(Interval(0.2, 0.4), Interval(0.5, 0.5)), 0.1, 0.2));
    CHECK(mul_pos(one_interval(), Interval(0.3, 0.7)) == Interval(0.3, 0.7));
    CHECK_THROWS_AS(mul_pos(Interval(-0.1, 0.4), Interval(0.5, 0.5)), DomainError);
    CHECK_THROWS_AS(mul_pos(Interval(0.5, 0.5), Interval(-0.1, 0.4)), DomainError);
    // Zero endpoints are inside the accepted closure.
    CHECK(mul_pos(Interval(0.0, 0.5), Interval(0.0, 1.0)) == Interval(0.0, 0.5));
}

TEST_CASE("scalar multiple") {
    CHECK(approx(scale(2.0, Interval(0.1, 0.3)), 0.2, 0.6));
    CHECK(approx(scale(-2.0, Interval(0.1, 0.3)), -0.6, -0.2));
    CHECK(scale(0.0, Interval(0.1, 0.3)) == zero_interval());
}

TEST_CASE("arithmetic laws hold bit-exactly on a dyadic grid") {
    const auto grid = dyadic_grid(16);
    const std::vector<double> alphas = {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};

    for (const auto& x : grid) {
        for (const auto& y : grid) {
            const Interval s = add(x, y);
            CHECK(s.lo() <= s.hi());
            CHECK(s == add(y, x));
            CHECK(sub(x, y) == add(x, opposite(y)));
            CHECK(s.width() == x.width() + y.width());
            CHECK(sub(x, y).width() == x.width() + y.width());
        }
        CHECK(add(x, zero_interval()) == x);
        for (double a : alphas)
            for (double b : alphas) CHECK(scale(a, scale(b, x)) == scale(a * b, x));
    }
}

TEST_CASE("scalar-multiple composition within tolerance for generic reals") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
        double lo = unit(rng), hi = unit(rng);
        if (lo > hi) std::swap(lo, hi);
        const Interval x(lo, hi);
        const double a = coef(rng), b = coef(rng);
        const Interval lhs = scale(a, scale(b, x));
        const Interval rhs = scale(a * b, x);
        CHECK(std::fabs(lhs.lo() - rhs.lo()) <= 1e-12);
        CHECK(std::fabs(lhs.hi() - rhs.hi()) <= 1e-12);
    }
}

TEST_CASE("degenerate inputs stay degenerate and follow real arithmetic") {
    const std::vector<double> vals = {0.0, 0.125, 0.25, 0.5, 0.875, 1.0};
    for (double a : vals) {
        for (double b : vals) {
            const Interval x = Interval::degenerate(a);
            const Interval y = Interval::degenerate(b);
            CHECK(add(x, y) == Interval::degenerate(a + b));
            CHECK(sub(x, y) == Interval::degenerate(a - b));
            CHECK(mul_pos(x, y) == Interval::degenerate(a * b));
            CHECK(opposite(x) == Interval::degenerate(-a));
            CHECK(scale(-1.5, x) == Interval::degenerate(-1.5 * a));
        }
    }
}

TEST_CASE("textual form round-trips") {
    CHECK(to_string(Interval(0.1, 0.5)) == "[0.1,0.5]");
    CHECK(to_string(zero_interval()) == "[0,0]");
    CHECK(parse_interval("[0.1,0.5]") == Interval(0.1, 0.5));
    CHECK(parse_interval(" [ 0.25 , 0.75 ] ") == Interval(0.25, 0.75));
    CHECK(parse_interval("[-0.5,-0.2]") == Interval(-0.5, -0.2));
    for (const auto& x : dyadic_grid(8)) CHECK(parse_interval(to_string(x)) == x);
    CHECK_THROWS_AS(parse_interval("[0.5,0.2]"), ConstructionError);
    CHECK_THROWS_AS(parse_interval("0.1,0.5"), ConstructionError);
    CHECK_THROWS_AS(parse_interval("[0.1,0.5] junk"), ConstructionError);
}
