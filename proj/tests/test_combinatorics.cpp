#include "doctest.h"
#include "oracles.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"
#include "npslab/partition.hpp"
#include "npslab/rational.hpp"

using namespace nps;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Rational Q(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(P({1, 2}), DomainError);
    CHECK_THROWS_AS(P({2, 0}), DomainError);
    CHECK_THROWS_AS(P({-1}), DomainError);
    CHECK(P({}).size() == 0);
    CHECK(P({}).empty());
    CHECK(P({4, 4, 2, 1, 1, 1}).size() == 13);
}

TEST_CASE("partition text form") {
    CHECK(parse_partition("4,4,2,1,1,1") == P({4, 4, 2, 1, 1, 1}));
    CHECK(parse_partition("") == P({}));
    CHECK(parse_partition(" 3, 1 ") == P({3, 1}));
    CHECK_THROWS_AS(parse_partition("1,2"), DomainError);
    CHECK_THROWS_AS(parse_partition("3,,1"), DomainError);
    CHECK_THROWS_AS(parse_partition("a"), DomainError);
    CHECK(format_partition(P({3, 2})) == "3,2");
    CHECK(format_partition(P({})).empty());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({4, 4, 2, 1, 1, 1})).parts() == std::vector<int>{6, 3, 2, 2});
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({3})) == P({1, 1, 1}));
    for (const Partition& p : oracle::shapes_up_to(9)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("cell statistics") {
    const Partition fig = P({4, 4, 2, 1, 1, 1});
    CHECK(cell_stats(fig, {1, 1}) == CellStats{3, 5, 9, false});
    CHECK(cell_stats(fig, {2, 4}) == CellStats{0, 0, 1, true});
    CHECK(cell_stats(P({1}), {1, 1}) == CellStats{0, 0, 1, true});
    CHECK_THROWS_AS(cell_stats(fig, {3, 3}), DomainError);
    CHECK_THROWS_AS(cell_stats(fig, {0, 1}), DomainError);
    CHECK(distance_from_origin({1, 1}) == 0);
    CHECK(distance_from_origin({3, 2}) == 3);
}

TEST_CASE("reverse lexicographic order") {
    CHECK(reverse_lex_cells(P({2, 1})) == std::vector<Cell>{{1, 2}, {2, 1}, {1, 1}});
    CHECK(reverse_lex_cells(P({1})) == std::vector<Cell>{{1, 1}});
    CHECK(reverse_lex_cells(P({2, 2})) == std::vector<Cell>{{2, 2}, {1, 2}, {2, 1}, {1, 1}});
    CHECK(reverse_lex_cells(P({})).empty());
    for (const Partition& p : oracle::shapes_up_to(8)) {
        const auto order = reverse_lex_cells(p);
        REQUIRE(order.size() == static_cast<std::size_t>(p.size()));
        for (std::size_t k = 1; k < order.size(); ++k) CHECK(revlex_less(order[k], order[k - 1]));
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        auto cells = p.cells();
        std::sort(cells.begin(), cells.end());
        CHECK(sorted == cells);
    }
}

TEST_CASE("corners and containment") {
    CHECK(P({3, 1}).corners() == std::vector<Cell>{{1, 3}, {2, 1}});
    CHECK(P({2, 2}).contains(P({2, 1})));
    CHECK_FALSE(P({2, 1}).contains(P({1, 1, 1})));
    CHECK(P({2, 1}).contains(P({})));
    CHECK(remove_corner(P({2, 1}), {2, 1}) == P({2}));
    CHECK_THROWS_AS(remove_corner(P({2, 1}), {1, 1}), DomainError);
}

TEST_CASE("partitions_of counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK(partitions_of(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    int total = 0;
    for (int n = 1; n <= 8; ++n) total += static_cast<int>(partitions_of(n).size());
    CHECK(total == 66);
}

TEST_CASE("subpartitions") {
    int count = 0;
    for_each_subpartition(P({2, 2}), [&](const Partition& mu) {
        CHECK(P({2, 2}).contains(mu));
        ++count;
    });
    CHECK(count == 6);  // (), 1, 2, 11, 21, 22
    count = 0;
    for_each_subpartition(P({}), [&](const Partition&) { ++count; });
    CHECK(count == 1);
}

TEST_CASE("hook length formula") {
    CHECK(syt_count(P({2, 2})) == 2);
    CHECK(syt_count(P({3, 2})) == 5);
    CHECK(syt_count(P({1})) == 1);
    CHECK(syt_count(P({})) == 1);
    CHECK(hook_product(P({2, 1})) == 3);
    CHECK(hook_product(P({2, 2})) == 12);
    CHECK(hook_product(P({})) == 1);
    CHECK(syt_count(P({4, 4, 2, 1, 1, 1})) == factorial(13) / hook_product(P({4, 4, 2, 1, 1, 1})));
}

TEST_CASE("hook length formula matches enumeration up to size 8") {
    for (const Partition& p : oracle::shapes_up_to(8)) {
        CAPTURE(format_partition(p));
        CHECK(syt_count(p) == oracle::count_syt(p));
        CHECK(syt_count(p) == syt_count(conjugate(p)));
        CHECK(syt_count(p) * hook_product(p) == factorial(static_cast<unsigned>(p.size())));
    }
}

TEST_CASE("two-row hook formula") {
    for (int l1 = 1; l1 <= 30; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2) {
            const Rational closed = Q(l1 - l2 + 1, l1 + 1) * Rational(binomial(l1 + l2, l2));
            CHECK(Rational(syt_count(P({l1, l2}))) == closed);
        }
}

TEST_CASE("Aitken determinant") {
    CHECK(skew_syt_count(P({2, 2}), P({1})) == 2);
    CHECK(skew_syt_count(P({3, 2}), P({})) == 5);
    CHECK(skew_syt_count(P({2, 1}), P({2, 1})) == 1);
    CHECK(skew_syt_count(P({}), P({})) == 1);
    CHECK(skew_syt_count(P({3, 1}), P({1, 1})) == 1);
    CHECK_THROWS_AS(skew_syt_count(P({2, 1}), P({1, 1, 1})), DomainError);
    CHECK_THROWS_AS(skew_syt_count(P({2}), P({3})), DomainError);
}

TEST_CASE("Aitken determinant matches enumeration up to size 7") {
    for (const Partition& lam : oracle::shapes_up_to(7)) {
        CHECK(skew_syt_count(lam, P({})) == syt_count(lam));
        for_each_subpartition(lam, [&](const Partition& mu) {
            CAPTURE(format_partition(lam));
            CAPTURE(format_partition(mu));
            CHECK(skew_syt_count(lam, mu) == oracle::count_skew_syt(lam, mu));
        });
    }
}

TEST_CASE("rational determinant") {
    CHECK(determinant({}, 0) == 1);
    CHECK(determinant({Rational(0), Rational(1), Rational(1), Rational(0)}, 2) == -1);
    CHECK(determinant({Rational(1), Rational(2), Rational(2), Rational(4)}, 2) == 0);
    CHECK_THROWS(determinant({Rational(1)}, 2));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(3) == Q(11, 6));
    CHECK(harmonic(5) == Q(137, 60));
    Rational h = 0;
    for (unsigned k = 1; k <= 200; ++k) {
        h += Rational(1, k);
        CHECK(harmonic(k) == h);
    }
}

TEST_CASE("rising factorial") {
    CHECK(pochhammer_rising(Q(7, 3), 0) == 1);
    CHECK(pochhammer_rising(Rational(3), 2) == 12);
    CHECK(pochhammer_rising(Q(1, 2), 2) == Q(3, 4));
    CHECK(pochhammer_rising(Rational(1), 5) == 120);
    CHECK(pochhammer_rising(Rational(-2), 3) == 0);
}

TEST_CASE("binomials and powers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(pow2(-3) == Q(1, 8));
    CHECK(pow2(10) == 1024);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational text") {
    CHECK(to_string(Q(2, 3)) == "2/3");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(parse_rational("11/6") == Q(11, 6));
    CHECK(parse_rational("-0.125") == Q(-1, 8));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("4/6") == Q(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK(to_double(Q(1, 4)) == 0.25);
}
