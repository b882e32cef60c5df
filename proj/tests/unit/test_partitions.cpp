#include <doctest.h>

#include <set>

#include "../common/properties.hpp"

using namespace qtails;

namespace {

std::vector<std::vector<int>> lists(const ClassSpec& spec) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_all(spec)) out.push_back(p.parts());
    return out;
}

} // namespace

TEST_SUITE_BEGIN("partitions");

TEST_CASE("enumeration of the named classes") {
    CHECK(lists(ClassSpec::distinct(3)) == std::vector<std::vector<int>>{{3}, {2, 1}});
    CHECK(lists(ClassSpec::smallest_repeats(3)) ==
          std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(lists(ClassSpec::distinct_gt(1, 4)) == std::vector<std::vector<int>>{{4}});
    CHECK(lists(ClassSpec::all(4)) ==
          std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(lists(ClassSpec::largest_repeats(4)) ==
          std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {1, 1, 1, 1}});
    // the empty partition is the single member of every class at n = 0
    CHECK(lists(ClassSpec::distinct(0)) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("enumeration is complete, duplicate-free, lexicographically descending") {
    for (int n = 1; n <= 22; ++n) {
        auto all = lists(ClassSpec::all(n));
        CHECK(all.size() == partition_count(n));
        std::set<std::vector<int>> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);

        // B and B' and D are exactly the filtered subsets of P
        std::vector<std::vector<int>> expect_d, expect_b, expect_bp;
        for (const auto& parts : all) {
            const auto st = stats(std::span<const int>(parts));
            if (st.num_distinct == st.num_parts) expect_d.push_back(parts);
            bool only_smallest_repeats = true, only_largest_repeats = true;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const bool repeated = (i > 0 && parts[i] == parts[i - 1]) ||
                                      (i + 1 < parts.size() && parts[i] == parts[i + 1]);
                if (repeated && parts[i] != st.smallest) only_smallest_repeats = false;
                if (repeated && parts[i] != st.largest) only_largest_repeats = false;
            }
            if (only_smallest_repeats) expect_b.push_back(parts);
            if (only_largest_repeats) expect_bp.push_back(parts);
        }
        CHECK(lists(ClassSpec::distinct(n)) == expect_d);
        CHECK(lists(ClassSpec::smallest_repeats(n)) == expect_b);
        CHECK(lists(ClassSpec::largest_repeats(n)) == expect_bp);
    }
}

TEST_CASE("Dk filters by part size") {
    for (int n = 1; n <= 16; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto got = lists(ClassSpec::distinct_gt(k, n));
            std::vector<std::vector<int>> expect;
            for (const auto& parts : lists(ClassSpec::distinct(n)))
                if (parts.back() > k) expect.push_back(parts);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("statistics") {
    auto st = stats(Partition({2, 1}));
    CHECK(st.rank == 0);
    CHECK(st.num_parts == 2);

    st = stats(Partition({1, 1, 1}));
    CHECK(st.smallest_mult == 3);
    CHECK(st.largest_mult == 3);
    CHECK(st.num_distinct == 1);

    st = stats(Partition({5, 3, 3, 1}));
    CHECK(st.rank == 1);
    CHECK(st.smallest_mult == 1);
    CHECK(st.largest_mult == 1);
    CHECK(st.num_distinct == 3);

    // empty partition: all statistics zero by convention
    st = stats(Partition{});
    CHECK(st.smallest == 0);
    CHECK(st.largest == 0);
    CHECK(st.rank == 0);

    CHECK_THROWS_AS(Partition({1, 2}), ArityError);
    CHECK_THROWS_AS(Partition({0}), ArityError);
}

TEST_CASE("crank") {
    CHECK(crank(Partition({2, 2})) == 2);
    CHECK(crank(Partition({3, 1})) == 0);
    CHECK(crank(Partition({1, 1, 1, 1})) == -4);
    // histogram symmetry M(m, n) = M(-m, n) and total mass p(n), n = 2..30
    for (int n = 2; n <= 30; ++n) {
        std::map<int, long long> hist;
        long long total = 0;
        enumerate(ClassSpec::all(n), [&](std::span<const int> parts) {
            ++hist[crank(parts)];
            ++total;
            return true;
        });
        CHECK(total == static_cast<long long>(partition_count(n)));
        for (const auto& [m, count] : hist) CHECK(count == hist[-m]);
    }
}

TEST_CASE("ffw literal weight") {
    // {1} contributes (-c)^1 * 1
    const Rational c{5, 3};
    CHECK(ffw(1, c) == -c);
    // at c = 1 the literal sum is the negated divisor count
    for (int n = 1; n <= 40; ++n) CHECK(-ffw(n, 1) == Rational(d_divisors(n)));
    CHECK(-ffw(6, 1) == Rational(4));
    CHECK(-ffw(4, 1) == Rational(3));
}

TEST_CASE("scalar statistics") {
    CHECK(spt(1) == 1);
    CHECK(spt(2) == 3);
    CHECK(spt(3) == 5);
    CHECK(lpt(4) == 9);
    CHECK(t_sum(4) == 9);
    CHECK(l_odd(3) == 3);
    CHECK(s_odd(3) == 3);
    for (int n = 1; n <= 30; ++n) {
        CHECK(lpt(n) == t_sum(n));
        CHECK(l_odd(n) == s_odd(n));
    }
    CHECK(d_divisors(6) == 4);
    CHECK(d_distinct(6) == 4);
    CHECK(d_distinct(0) == 1);
    CHECK(sigma_prime(0) == Rational(1, 2));
    CHECK(sigma_prime(4) == Rational(-1));
}

TEST_CASE("weighted sums and the weight vocabulary") {
    // both sides of the distinct-vs-smallest-repeats identity at n = 3
    const auto parity_diff = WeightExpr::parse("(-1)^parts") ;
    Rational lhs = 0;
    enumerate(ClassSpec::distinct(3), [&](std::span<const int> p) {
        const auto st = stats(p);
        lhs += Rational((st.num_parts % 2 == 0 ? 1 : -1) -
                        ((st.rank % 2 + 2) % 2 == 0 ? 1 : -1));
        return true;
    });
    CHECK(lhs == Rational(-2));
    CHECK(weighted_sum(ClassSpec::smallest_repeats(3), parity_diff) * Rational(2) ==
          Rational(-2));

    CHECK(weighted_sum(ClassSpec::distinct(1), parity_diff) == Rational(-1));

    CHECK(weighted_sum(ClassSpec::smallest_repeats(3),
                       WeightExpr::parse("(-2)^smallest_mult-1")) == Rational(6));

    CHECK(weighted_sum(ClassSpec::all(4), WeightExpr::parse("largest_mult")) == Rational(lpt(4)));
    CHECK(weighted_sum(ClassSpec::all(4), WeightExpr::parse("1/2*smallest")) ==
          Rational(t_sum(4), 2));

    CHECK_THROWS_AS(WeightExpr::parse(""), WeightSpecError);
    CHECK_THROWS_AS(WeightExpr::parse("(-1)^frobnitz"), WeightSpecError);
    CHECK_THROWS_AS(WeightExpr::parse("^parts"), WeightSpecError);
}

TEST_CASE("generating series by enumeration") {
    auto dcount = generating_series({StatSeries::class_count, 1, PartitionClass::D}, 6);
    CHECK(dcount == TruncatedSeries::make(6, {1, 1, 1, 2, 2, 3, 4}));

    CHECK(generating_series({StatSeries::crank_moment}, 4)[4] == 6);

    auto s = generating_series({StatSeries::spt}, 3);
    CHECK(s == TruncatedSeries::make(3, {0, 1, 3, 5}));

    EnumerationOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(generating_series({StatSeries::spt}, 12, tight), BudgetExceeded);
}

TEST_CASE("class counts against the series builders") {
    const int order = 40;
    // |D(n)| = [q^n] prod (1 + q^j)
    auto dprod = pochhammer_inf(ParamValue::monomial(-1, 1), 1, order);
    auto dcount = generating_series({StatSeries::class_count, 1, PartitionClass::D}, order);
    CHECK(dcount == dprod);

    // |B(n)| = [q^n] sum_m q^m/(1-q^m) prod_{j>m} (1+q^j)
    TruncatedSeries bseries(order);
    for (int m = 1; m <= order; ++m) {
        auto tail = pochhammer_inf(ParamValue::monomial(-1, m + 1), 1, order);
        tail.div_binomial(-1, m);
        bseries += tail.shifted_up(m);
    }
    auto bcount = generating_series({StatSeries::class_count, 1, PartitionClass::B}, order);
    for (int n = 1; n <= order; ++n) CHECK(bcount[n] == bseries[n]);

    // p(n) against the Euler-product inverse
    auto pseries = inv_pochhammer_inf(ParamValue::monomial(1, 1), 1, 30);
    for (int n = 0; n <= 30; ++n) CHECK(Rational(BigInt(partition_count(n))) == pseries[n]);
}

TEST_SUITE_END();
