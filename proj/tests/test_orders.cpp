#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ivmono/admissibility.hpp"
#include "ivmono/order.hpp"
#include "ivmono/sampling.hpp"

using namespace ivmono;

namespace {

std::vector<OrderSpec> total_builtins() {
    return {OrderSpec::lex_lower(), OrderSpec::lex_upper(), OrderSpec::xu_yager()};
}

SamplingConfig grid_cfg(double step) {
    SamplingConfig cfg;
    cfg.grid_step = step;
    return cfg;
}

}  // namespace

TEST_CASE("Kulisch-Miranker comparison") {
    CHECK(km_compare(Interval(0.1, 0.4), Interval(0.2, 0.5)) == OrderRelation::Less);
    CHECK(km_compare(Interval(0.1, 0.6), Interval(0.2, 0.5)) == OrderRelation::Incomparable);
    CHECK(km_compare(Interval(0.3, 0.3), Interval(0.3, 0.3)) == OrderRelation::Equal);
    CHECK(km_compare(Interval(0.2, 0.5), Interval(0.1, 0.4)) == OrderRelation::Greater);
    // Shared endpoint with one strict move is still decisive.
    CHECK(km_compare(Interval(0.1, 0.4), Interval(0.1, 0.5)) == OrderRelation::Less);
}

TEST_CASE("total order comparisons decide by keys") {
    const auto lex = OrderSpec::lex_lower();
    CHECK(cmp(lex, Interval(0.2, 0.9), Interval(0.3, 0.4)) == OrderRelation::Less);
    CHECK(cmp(lex, Interval(0.2, 0.4), Interval(0.2, 0.9)) == OrderRelation::Less);

    const auto xy = OrderSpec::xu_yager();
    // Midpoints tie at 0.3; the upper endpoint decides.
    CHECK(cmp(xy, Interval(0.1, 0.5), Interval(0.2, 0.4)) == OrderRelation::Greater);

    for (const auto& order : total_builtins()) {
        const Interval x(0.25, 0.75);
        CHECK(cmp(order, x, x) == OrderRelation::Equal);
    }
}

TEST_CASE("order name registry") {
    CHECK(OrderSpec::from_name("km").kind() == OrderKind::KulischMiranker);
    CHECK(OrderSpec::from_name("lex-lower").name() == "lex-lower");
    CHECK(OrderSpec::from_name("xu-yager").is_total());
    CHECK(OrderSpec::from_name("two-key:mid,width").name() == "two-key:mid,width");
    // Colon form used inside DSL call arguments.
    CHECK(OrderSpec::from_name("two-key:mid:width").name() == "two-key:mid,width");
    CHECK_THROWS_AS(OrderSpec::from_name("frobnicate"), BadParamsError);
    CHECK_THROWS_AS(OrderSpec::from_name("two-key:mid"), BadParamsError);
    CHECK_THROWS_AS(OrderSpec::from_name("two-key:mid,frob"), BadParamsError);
}

TEST_CASE("total builtin orders behave on the dyadic grid") {
    const auto samples = interval_grid(0.25);
    for (const auto& order : total_builtins()) {
        for (const auto& x : samples) {
            for (const auto& y : samples) {
                const OrderRelation r = cmp(order, x, y);
                // Totality and converse symmetry.
                CHECK(r != OrderRelation::Incomparable);
                CHECK(cmp(order, y, x) == converse(r));
                // Exactly one of <, =, > already follows from cmp being a
                // single call; equality must pin both intervals.
                if (r == OrderRelation::Equal) CHECK(x == y);
                // KM refinement.
                const OrderRelation kmr = km_compare(x, y);
                if (kmr == OrderRelation::Less) CHECK(r == OrderRelation::Less);
                if (kmr == OrderRelation::Greater) CHECK(r == OrderRelation::Greater);
            }
        }
    }
}

TEST_CASE("transitivity on sampled triples with zero tolerance") {
    const auto samples = interval_grid(0.25);
    for (const auto& order : total_builtins()) {
        auto leq = [&](const Interval& a, const Interval& b) {
            const OrderRelation r = cmp(order, a, b);
            return r == OrderRelation::Less || r == OrderRelation::Equal;
        };
        for (const auto& x : samples)
            for (const auto& y : samples)
                for (const auto& z : samples)
                    if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    }
}

TEST_CASE("key ties absorb decimal-literal noise") {
    const auto xy = OrderSpec::xu_yager();
    // 0.2+0.4 and 0.1+0.5 differ by one ulp in floating point; the order
    // tolerance must treat the midpoints as tied so the upper endpoint
    // decides, like it would in decimal arithmetic.
    const Interval a(0.2, 0.4), b(0.1, 0.5);
    CHECK(cmp(xy, a, b) == OrderRelation::Less);
    CHECK(order_geq_slack(xy, b, a, 1e-9));
    CHECK_FALSE(order_geq_slack(xy, a, b, 1e-9));  // genuinely below: upper gap 0.1
    // A genuine primary-key gap still registers.
    CHECK_FALSE(order_geq_slack(xy, Interval(0.1, 0.3), Interval(0.3, 0.5), 1e-9));
    // Sub-slack gaps never count as violations.
    CHECK(order_geq_slack(OrderSpec::lex_lower(), Interval(0.3, 0.5),
                          Interval(0.3 + 1e-10, 0.5), 1e-9));
    // KM: incomparable pairs fail dominance in both directions.
    const auto km = OrderSpec::km();
    CHECK_FALSE(order_geq_slack(km, Interval(0.1, 0.6), Interval(0.2, 0.5), 1e-9));
    CHECK_FALSE(order_geq_slack(km, Interval(0.2, 0.5), Interval(0.1, 0.6), 1e-9));
}

TEST_CASE("admissibility validation passes for the builtin total orders") {
    for (const auto& order : total_builtins()) {
        const auto rep = is_admissible(order, grid_cfg(0.25));
        INFO(order.name());
        CHECK(rep.pass);
        CHECK(rep.totality_violations == 0);
        CHECK(rep.antisymmetry_violations == 0);
        CHECK(rep.transitivity_violations == 0);
        CHECK(rep.refinement_violations == 0);
        CHECK(rep.separation_violations == 0);
        CHECK(rep.intervals_sampled == 15);
        CHECK(rep.triples_checked == 15 * 15 * 15);
    }
}

TEST_CASE("admissibility validation flags the partial order") {
    const auto rep = is_admissible(OrderSpec::km(), grid_cfg(0.25));
    CHECK_FALSE(rep.pass);
    CHECK(rep.totality_violations > 0);  // e.g. [0.25,1] vs [0.5,0.75]
}

TEST_CASE("admissibility validation flags non-separating keys") {
    const auto rep = is_admissible(OrderSpec::two_key("mid", "mid"), grid_cfg(0.25));
    CHECK_FALSE(rep.pass);
    CHECK(rep.separation_violations > 0);  // e.g. [0,0.5] vs [0.25,0.25]
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.category == "separation") found = true;
    CHECK(found);
}

TEST_CASE("admissibility validation flags non-refining keys") {
    // Width as the primary key reverses KM on nested pairs.
    const auto rep = is_admissible(OrderSpec::two_key("width", "lower"), grid_cfg(0.25));
    CHECK_FALSE(rep.pass);
    CHECK(rep.refinement_violations > 0);
}

TEST_CASE("order laws hold on random intervals") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_interval = [&] {
        double a = unit(rng), b = unit(rng);
        if (a > b) std::swap(a, b);
        return Interval(a, b);
    };
    for (int t = 0; t < 2000; ++t) {
        const Interval x = random_interval();
        const Interval y = random_interval();
        for (const auto& order : total_builtins()) {
            const OrderRelation r = cmp(order, x, y);
            CHECK(r != OrderRelation::Incomparable);
            CHECK(cmp(order, y, x) == converse(r));
            const OrderRelation kmr = km_compare(x, y);
            if (kmr == OrderRelation::Less) CHECK(r == OrderRelation::Less);
            if (kmr == OrderRelation::Greater) CHECK(r == OrderRelation::Greater);
        }
    }
}

TEST_CASE("random samples extend the grid deterministically") {
    SamplingConfig cfg = grid_cfg(0.5);
    cfg.random_count = 8;
    cfg.seed = 7;
    const auto a = sample_intervals(cfg);
    const auto b = sample_intervals(cfg);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == interval_grid(0.5).size() + 8);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
