#include "doctest.h"
#include "oracles.hpp"

#include "npslab/errors.hpp"
#include "npslab/exact_complexity.hpp"
#include "npslab/limit_shapes.hpp"

#include <cmath>

using namespace nps;

namespace {

const double r2 = std::sqrt(2.0);
const double lower_square = 2.0 / 3.0 * std::log(2.0) - 1.0 / 6.0;

LimitCurve staircase() { return LimitCurve({{-1.0, 1.0}, {1.0, 1.0}}); }

// A lopsided normalized curve: boundary of the shape (3,1) rescaled.
LimitCurve hook_shape() { return partition_boundary(Partition({3, 1}), 4); }

}  // namespace

TEST_CASE("curve validation") {
    CHECK_THROWS_WITH_AS(LimitCurve({}), doctest::Contains("at least one"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{1.0, 1.0}, {-1.0, 1.0}}), doctest::Contains("increasing"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{-1.0, 1.5}, {1.0, 1.0}}), doctest::Contains("first breakpoint"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{-1.0, 1.0}, {1.0, 1.2}}), doctest::Contains("last breakpoint"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{-1.0, 1.0}, {-0.5, 2.0}, {2.0, 2.0}}), doctest::Contains("slope"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{-1.0, 1.0}, {0.0, -0.5}, {1.0, 1.0}}), doctest::Contains("slope"), DomainError);
    CHECK_THROWS_WITH_AS(LimitCurve({{-1.0, 1.0}, {-0.5, 0.2}, {0.0, 0.1}, {0.5, 0.2}, {1.0, 1.0}}),
                         doctest::Contains("slope"), DomainError);
    CHECK_NOTHROW(LimitCurve({{0.0, 0.0}}));
}

TEST_CASE("curve evaluation and area") {
    const LimitCurve sq = LimitCurve::unit_square();
    CHECK(sq(0.0) == doctest::Approx(r2));
    CHECK(sq(5.0) == 5.0);
    CHECK(sq(-5.0) == 5.0);
    CHECK(sq(-0.5 / r2) == doctest::Approx(r2 - 0.5 / r2));
    CHECK(sq.slope(-0.3) == doctest::Approx(1.0));
    CHECK(sq.slope(0.3) == doctest::Approx(-1.0));
    CHECK(sq.slope(-3.0) == -1.0);
    CHECK(sq.area() == doctest::Approx(1.0));
    CHECK(sq.is_normalized());
    CHECK(staircase().is_normalized());
    CHECK_FALSE(LimitCurve::trivial().is_normalized());
    CHECK(LimitCurve::trivial().area() == doctest::Approx(0.0));
    CHECK(sq.mirror().breakpoints().size() == 3);
    CHECK(sup_distance(sq, sq.mirror()) == doctest::Approx(0.0));
}

TEST_CASE("partition boundaries") {
    const LimitCurve sq = LimitCurve::unit_square();
    CHECK(sup_distance(partition_boundary(Partition({1}), 1), sq) < 1e-12);
    for (int m = 2; m <= 12; ++m) {
        const Partition p(std::vector<int>(static_cast<std::size_t>(m), m));
        const LimitCurve g = partition_boundary(p, m * m);
        CHECK(sup_distance(g, sq) < 1e-12);
        CHECK(g.breakpoints().size() == 3);
    }
    const LimitCurve two = partition_boundary(Partition({2}), 2);
    REQUIRE(two.breakpoints().size() == 3);
    CHECK(two.breakpoints()[0].x == doctest::Approx(-0.5));
    CHECK(two.breakpoints()[1].x == doctest::Approx(0.5));
    CHECK(two.breakpoints()[1].y == doctest::Approx(1.5));
    CHECK(two.breakpoints()[2].x == doctest::Approx(1.0));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Partition p = oracle::random_partition(rng, 30);
        CHECK(partition_boundary(p, p.size()).is_normalized());
        CHECK(partition_boundary(p, p.size(), ScalingExponents(Rational(2, 3), Rational(1, 3))).is_normalized());
    }
    CHECK_THROWS_AS(partition_boundary(Partition({2, 1}), 4), DomainError);
    CHECK_THROWS_AS(partition_boundary(Partition(), 0), DomainError);
}

TEST_CASE("scaling exponents") {
    CHECK_THROWS_AS(ScalingExponents(Rational(1, 2), Rational(1, 3)), DomainError);
    CHECK_THROWS_AS(ScalingExponents(Rational(3, 2), Rational(-1, 2)), DomainError);
    CHECK(ScalingExponents::from_p(Rational(3)).beta == Rational(2, 3));
    CHECK(ScalingExponents::from_p(Rational(1)).beta == 0);
    CHECK_THROWS_AS(ScalingExponents::from_p(Rational(1, 2)), DomainError);
}

TEST_CASE("sup distance") {
    const LimitCurve sq = LimitCurve::unit_square();
    CHECK(sup_distance(sq, sq) == 0.0);
    const LimitCurve g = partition_boundary(Partition({2, 1}), 3);
    const double d = sup_distance(sq, g);
    CHECK(d > 0.0);
    double at_breaks = 0.0;
    for (const auto& b : g.breakpoints()) at_breaks = std::max(at_breaks, std::abs(sq(b.x) - g(b.x)));
    for (const auto& b : sq.breakpoints()) at_breaks = std::max(at_breaks, std::abs(sq(b.x) - g(b.x)));
    CHECK(d == doctest::Approx(at_breaks));
    for (int k = 0; k <= 1000; ++k) {
        const double x = -2.0 + 4.0 * k / 1000.0;
        CHECK(std::abs(sq(x) - g(x)) <= d + 1e-12);
    }
    const double eps = 0.01;
    const LimitCurve up({{-1.0 / r2, 1.0 / r2}, {0.0, r2 - eps}, {1.0 / r2, 1.0 / r2}});
    CHECK(sup_distance(sq, up) == doctest::Approx(eps));
}

TEST_CASE("hook distances") {
    const LimitCurve sq = LimitCurve::unit_square();
    const auto h = hook_distances(sq, 0.0, 1.0 / r2);
    CHECK(h.arm == doctest::Approx(0.5));
    CHECK(h.leg == doctest::Approx(0.5));
    CHECK(h.d == doctest::Approx(1.0));
    const auto on = hook_distances(sq, 0.25, sq(0.25));
    CHECK(on.arm == 0.0);
    CHECK(on.leg == 0.0);
    CHECK(on.d == 0.0);
    const auto below = hook_distances(sq, 0.5, 0.1);
    CHECK(below.d == 0.0);
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const auto a = hook_distances(sq, 0.0, r2 - eps);
        CHECK(a.arm <= eps);
        CHECK(a.leg <= eps);
        CHECK(a.d <= 2 * eps);
    }
    // On a partition boundary these are the scaled arm, leg and w + 1 terms.
    const Partition p({4, 2, 1});
    const LimitCurve g = partition_boundary(p, 7);
    const double s = std::sqrt(7.0);
    const double u = 0.5, v = 0.5;  // centre of cell (1,1)
    const auto c = hook_distances(g, (u - v) / s / r2, (u + v) / s / r2);
    CHECK(c.arm * s == doctest::Approx(3.5));
    CHECK(c.leg * s == doctest::Approx(2.5));
    CHECK(c.d * s == doctest::Approx(w_distance(p, {1, 1}) + 1.0));
}

TEST_CASE("pointwise distance inequalities") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const LimitCurve& g : {LimitCurve::unit_square(), staircase(), hook_shape(),
                                partition_boundary(Partition({5, 3, 3, 1}), 12)}) {
        double slack = 0.0;
        for (const auto& b : g.breakpoints()) slack = std::max(slack, b.y - std::abs(b.x));
        int inside = 0;
        for (int k = 0; k < 2000; ++k) {
            const double x = g.span_begin() + (g.span_end() - g.span_begin()) * unit(rng);
            const double y = std::abs(x) + (g(x) - std::abs(x)) * unit(rng);
            const auto h = hook_distances(g, x, y);
            if (h.d == 0.0) continue;
            ++inside;
            CHECK(h.d >= std::max(h.arm, h.leg) - 1e-12);
            CHECK(h.d <= h.arm + h.leg + r2 * slack + 1e-12);
            // round trip through hook coordinates
            const auto st = hook_coordinates(g, x, y);
            const auto back = point_from_hook_coordinates(g, st.s, st.t);
            CHECK(std::abs(back.x - x) < 1e-9);
            CHECK(std::abs(back.y - y) < 1e-9);
        }
        CHECK(inside > 1000);
    }
}

TEST_CASE("worst-case integral") {
    CHECK(worst_case_integral(LimitCurve::unit_square()) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(worst_case_integral(LimitCurve::trivial()) == 0.0);
    const Partition p({2, 1});
    const double n = 3.0;
    CHECK(std::pow(n, 1.5) * worst_case_integral(partition_boundary(p, 3), 1e-8) - n ==
          doctest::Approx(1.0).epsilon(1e-6));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Partition q = oracle::random_partition(rng, 20);
        const double m = q.size();
        CHECK(std::pow(m, 1.5) * worst_case_integral(partition_boundary(q, q.size()), 1e-8) ==
              doctest::Approx(m + static_cast<double>(worst_case(q))).epsilon(1e-6));
    }
    CHECK_THROWS_AS(worst_case_integral(LimitCurve::unit_square(), 0.0), DomainError);
}

TEST_CASE("quadrature reports non-convergence with its best estimate") {
    try {
        (void)worst_case_integral(hook_shape(), 1e-300);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        const double n = 4.0;
        CHECK(std::pow(n, 1.5) * e.best_estimate() == doctest::Approx(n + worst_case(Partition({3, 1}))).epsilon(1e-6));
        CHECK(e.error_estimate() > 1e-300);
    }
}

TEST_CASE("exact cell-wise distance identity") {
    for (const Partition& p : oracle::shapes_up_to(8)) {
        CAPTURE(format_partition(p));
        CHECK(scaled_distance_integral_exact(p) == Rational(p.size() + worst_case(p)));
    }
    for (int m = 1; m <= 30; ++m) {
        const long n = static_cast<long>(m) * m;
        const Partition sq(std::vector<int>(static_cast<std::size_t>(m), m));
        const Rational w(worst_case(sq));
        CHECK(w / Rational(n * m) == Rational(m - 1, m));
    }
}

TEST_CASE("average-case lower integral") {
    const LimitCurve sq = LimitCurve::unit_square();
    const double area = avg_lower_integral(sq, 1e-8);
    const double hook = avg_lower_integral_hook(sq, 1e-8);
    CHECK(area == doctest::Approx(lower_square).epsilon(1e-7));
    CHECK(hook == doctest::Approx(lower_square).epsilon(1e-7));
    CHECK(area < worst_case_integral(sq) / 2.0);
    for (const LimitCurve& g : {staircase(), hook_shape(), partition_boundary(Partition({4, 4, 2, 1, 1, 1}), 13)}) {
        const double a = avg_lower_integral(g, 1e-7);
        CHECK(a > 0.0);
        CHECK(a == doctest::Approx(avg_lower_integral_hook(g, 1e-7)).epsilon(1e-5));
    }
}

TEST_CASE("imbalanced integrals") {
    const LimitCurve sq = LimitCurve::unit_square();
    const auto area = imbalanced_integrals(sq, 1e-8);
    CHECK(area.i1 == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(area.i2 == doctest::Approx(0.5).epsilon(1e-7));
    const auto hook = imbalanced_integrals_hook(sq, 1e-8);
    CHECK(std::abs(hook.i1 - area.i1) < 2e-8);
    CHECK(std::abs(hook.i2 - area.i2) < 2e-8);

    const LimitCurve g = hook_shape();
    const auto a = imbalanced_integrals(g, 1e-8);
    const auto m = imbalanced_integrals(g.mirror(), 1e-8);
    CHECK(a.i1 != doctest::Approx(a.i2));
    CHECK(std::abs(a.i1 - m.i2) < 2e-8);
    CHECK(std::abs(a.i2 - m.i1) < 2e-8);
    const auto gh = imbalanced_integrals_hook(g, 1e-8);
    CHECK(std::abs(gh.i1 - a.i1) < 1e-6);
    CHECK(std::abs(gh.i2 - a.i2) < 1e-6);
    // On a partition boundary the arm integral is the scaled sum of arms plus n/2.
    long arms = 0;
    for (const Cell& c : Partition({3, 1}).cells()) arms += cell_stats(Partition({3, 1}), c).arm;
    CHECK(std::pow(4.0, 1.5) * a.i1 == doctest::Approx(arms + 2.0).epsilon(1e-6));
}

TEST_CASE("two-row boundaries in the imbalanced scaling") {
    const ScalingExponents s(Rational(1), Rational(0));
    double previous = 1.0;
    for (int big : {20, 200, 2000}) {
        const Partition p({big, 5});
        const LimitCurve g = partition_boundary(p, p.size(), s);
        CHECK(g.is_normalized());
        const double gap = std::abs(imbalanced_integrals(g, 1e-7).i1 - 0.5);
        CHECK(gap < previous);
        previous = gap;
    }
    CHECK(previous < 0.01);
}

TEST_CASE("partitions from curves") {
    CHECK(partition_from_curve(LimitCurve::unit_square(), 100) == Partition(std::vector<int>(10, 10)));
    const Partition st = partition_from_curve(staircase(), 55);
    CHECK(st.size() > 40);
    CHECK(st.size() < 70);
    const Partition big = partition_from_curve(hook_shape(), 400);
    CHECK(std::abs(big.size() - 400) < 40);
    CHECK(sup_distance(partition_boundary(big, big.size()), hook_shape()) < 0.1);
    CHECK_THROWS_AS(partition_from_curve(staircase(), 0), DomainError);
}

TEST_CASE("curve files") {
    const LimitCurve g = parse_curve_json(R"({"breakpoints": [["-1", 1], ["0", "3/2"], [1.0, "1.0"]]})");
    CHECK(g(0.0) == doctest::Approx(1.5));
    CHECK(g.area() == doctest::Approx(1.5));
    CHECK_THROWS_WITH_AS(parse_curve_json("{"), doctest::Contains("not valid JSON"), DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json("[]"), doctest::Contains("object"), DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json("{}"), doctest::Contains("breakpoints"), DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json(R"({"breakpoints": 3})"), doctest::Contains("list"), DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json(R"({"breakpoints": [[0]]})"), doctest::Contains("pair"), DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json(R"({"breakpoints": [["a", 0]]})"), doctest::Contains("breakpoint 0"),
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json(R"({"breakpoints": [[-1, 1], [-2, 2]]})"), doctest::Contains("increasing"),
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_curve_json(R"({"breakpoints": [[-1, 1], [0, 3], [1, 1]]})"), doctest::Contains("slope"),
                         DomainError);
    CHECK_THROWS_AS(load_curve_file("/nonexistent/curve.json"), DomainError);
}
