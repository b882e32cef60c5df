#include <doctest.h>

#include "../common/properties.hpp"

using namespace qtails;

TEST_SUITE_BEGIN("engine");

TEST_CASE("constant g collapses to the n = 0 bracket") {
    // With g = [1] both sides equal 1 - (t)_N/(a)_N.
    const auto a = ParamValue::rational({1, 2});
    const auto t = ParamValue::monomial(1, 1);
    const int n_finite = 3, order = 30;
    auto [lhs, rhs] = theorem1_engine(GChoice::coefficients({1}), a, t, n_finite, order);
    CHECK(lhs == rhs);
    auto expect = TruncatedSeries::one(order) -
                  pochhammer(t, 1, n_finite, order) * inv_pochhammer(a, 1, n_finite, order);
    CHECK(lhs == expect);
    CHECK(!lhs.is_zero());
}

TEST_CASE("explicit coefficient lists work, including interior zeros") {
    const auto a = ParamValue::monomial(-1, 1);
    const auto t = ParamValue::monomial({1, 2}, 1);
    auto [lhs, rhs] =
        theorem1_engine(GChoice::coefficients({1, 0, {2, 3}, -1}), a, t, 2, 30);
    CHECK(lhs == rhs);
}

TEST_CASE("geometric g at a = 0 reproduces the extra-parameter tails identity") {
    // engine sides equal (t)_N times the thm-1-8-finite sides
    const auto t = ParamValue::monomial(1, 1);
    const Rational c{1, 2};
    const int n_finite = 3, order = 30;
    auto [lhs, rhs] =
        theorem1_engine(GChoice::geometric(c), ParamValue::rational(0), t, n_finite, order);
    CHECK(lhs == rhs);

    BindingSet b;
    b.bind_rational("c", c).bind_monomial("t", 1, 1).bind_int("N", n_finite);
    const auto scale = pochhammer(t, 1, n_finite, order);
    CHECK(lhs == scale * build_side("thm-1-8-finite", 0, b, order));
    CHECK(rhs == scale * build_side("thm-1-8-finite", 1, b, order));
}

TEST_CASE("t = 0 limit uses the pre-cancelled inner sum") {
    for (const Rational& c : {Rational(1), Rational(-1), Rational(1, 2)}) {
        auto [lhs, rhs] = theorem1_engine(GChoice::binomial_negative(2, c),
                                          ParamValue::monomial(1, 1), ParamValue::rational(0), 4,
                                          30);
        CHECK(lhs == rhs);
        CHECK(!lhs.is_zero());
    }
}

TEST_CASE("series-valued g choices") {
    const auto a = ParamValue::monomial(1, 2);
    const auto t = ParamValue::monomial(-1, 1);
    for (auto g : {GChoice::eta_ratio(), GChoice::q_exponential_alt()}) {
        auto [lhs, rhs] = theorem1_engine(g, a, t, 2, 25);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("large N reproduces the infinite-product transformation") {
    // At N = 30 every finite factor matches its infinite counterpart to q^20.
    const int order = 20;
    for (const Rational& c : {Rational(1, 2), Rational(-1)}) {
        BindingSet b;
        b.bind_rational("c", c)
            .bind_rational("a", {1, 3})
            .bind_monomial("t", 1, 1);
        auto af_l = build_side("andrews-freitas-gen", 0, b, order);
        auto af_r = build_side("andrews-freitas-gen", 1, b, order);
        auto [lhs, rhs] = theorem1_engine(GChoice::geometric(c), ParamValue::rational({1, 3}),
                                          ParamValue::monomial(1, 1), 30, order);
        CHECK(af_l == af_r);
        CHECK(lhs == rhs);
        CHECK(lhs == af_l);
        CHECK(rhs == af_r);
    }
}

TEST_CASE("guards and contracts") {
    CHECK_THROWS_AS(theorem1_engine(GChoice::geometric(1), ParamValue::rational(1),
                                    ParamValue::monomial(1, 1), 2, 10),
                    NotAUnit);
    CHECK_THROWS_AS(theorem1_engine(GChoice::geometric(1), ParamValue::rational(0),
                                    ParamValue::rational({1, 2}), 2, 10),
                    BindingError);
    CHECK_THROWS_AS(theorem1_engine(GChoice::geometric(1), ParamValue::rational(0),
                                    ParamValue::monomial(1, 1), 0, 10),
                    BindingError);
}

TEST_SUITE_END();
