#include <doctest.h>

#include <set>

#include "../common/properties.hpp"

using namespace qtails;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("registry shape") {
    const auto& entries = catalog();
    CHECK(entries.size() >= 45);

    std::set<std::string> ids;
    for (const auto& d : entries) {
        CAPTURE(d.id);
        CHECK(ids.insert(d.id).second); // unique
        CHECK(!d.anchor.empty());
        CHECK(d.sides.size() >= 2);
        CHECK(d.sides.size() <= 3);
        CHECK(!d.grid.empty());
        CHECK(d.grid.size() <= 40);
        for (int idx : d.oracle_sides) CHECK(idx < static_cast<int>(d.sides.size()));
        // every grid point binds exactly the declared slots
        for (const auto& bs : d.grid) CHECK(bs.size() == d.slots.size());
    }
    for (const char* required :
         {"ramanujan-lost-notebook", "zagier-eta24", "dems-finite", "dems-limit", "yan-fu",
          "half-c-finite", "c-chain-finite", "agl-c-chain", "thm-1-1-engine",
          "andrews-freitas-gen", "finite-heine", "heine", "sigma-two-forms", "sigma-finite",
          "sigma-new-rep", "sigma-combinatorial", "new-ramanujan-i", "new-ramanujan-ii",
          "delta-general", "delta-at-minus1", "mock-phi", "mock-psi", "af-tails",
          "thm-1-8-finite", "one-param-zagier-a", "zagier-finite-induction", "one-param-zagier-b",
          "remark1-bridge", "agl-crank", "gen-agl", "lerch-half-beta", "agl-alpha-minus-q",
          "agl-alpha-q", "product-subtraction", "q-to-q2", "ffw-c-gen", "ffw-divisor", "spt-rep",
          "crippa", "thm-1-16", "crippa-limit", "crippa-remark", "remark1-a", "remark1-b",
          "remark1-c", "remark1-d", "remark1-e", "lpt-equals-t", "lodd-equals-s", "af-finite-iv",
          "af-finite-vii", "af-finite-ix-a", "af-finite-ix-b", "af-limit-identity",
          "sigma-prime-weighted", "agl-weighted", "new-zagier"}) {
        CHECK(ids.count(required) == 1);
    }
    CHECK(descriptor("agl-crank").anchor.find("prove a sum-of-tails identity") !=
          std::string::npos);
    CHECK_THROWS_AS(descriptor("no-such-id"), BindingError);
}

TEST_CASE("default grids") {
    // pole value c = 1 never appears in the c-chain grid
    for (const auto& bs : default_grid("c-chain-finite"))
        CHECK(!bs.at("c").is_rational_one());

    // heine binds all four of a, b, c, t
    for (const auto& bs : default_grid("heine")) {
        CHECK(bs.find("a"));
        CHECK(bs.find("b"));
        CHECK(bs.find("c"));
        CHECK(bs.find("t"));
    }

    CHECK(default_grid("thm-1-8-finite").size() <= 40);

    // single-rational-slot entries sweep all seven rational grid values
    for (const char* id : {"ffw-c-gen", "delta-general", "new-zagier", "agl-weighted"}) {
        std::set<std::string> values;
        const std::string slot = descriptor(id).slots.front().name;
        for (const auto& bs : default_grid(id)) values.insert(bs.at(slot).str());
        CHECK(values.size() == 7);
    }
}

TEST_CASE("build_side examples") {
    // divisor-series side of the ffw entry
    BindingSet none;
    auto lam = build_side("ffw-divisor", 2, none, 6);
    CHECK(lam == TruncatedSeries::make(6, {0, 1, 2, 2, 3, 2, 4}));

    // closed form of the finite c-chain has zero constant term
    BindingSet cb;
    cb.bind_rational("c", {1, 2}).bind_int("N", 3);
    auto side3 = build_side("c-chain-finite", 2, cb, 0);
    CHECK(side3.is_zero());

    // the two mock theta expansions agree and are independently built
    auto phi_l = build_side("mock-phi", 0, none, 8);
    auto phi_r = build_side("mock-phi", 1, none, 8);
    CHECK(phi_l == phi_r);
    // 1 + q/(1+q^2) + q^4/((1+q^2)(1+q^4)) + ... expanded by hand to q^8
    CHECK(phi_l == TruncatedSeries::make(8, {1, 1, 0, -1, 1, 1, -1, -1, 0}));

    CHECK_THROWS_AS(build_side("mock-phi", 5, none, 8), BindingError);
    CHECK_THROWS_AS(build_side("c-chain-finite", 0, none, 8), BindingError); // unbound slots
    BindingSet pole;
    pole.bind_rational("c", 1).bind_int("N", 3);
    CHECK_THROWS_AS(build_side("c-chain-finite", 2, pole, 8), PoleError);
}

TEST_CASE("verify") {
    BindingSet b4;
    b4.bind_int("N", 4);
    auto rep = verify("dems-finite", b4, 40);
    CHECK(rep.status == VerifyStatus::pass);
    CHECK(rep.order == 40);

    BindingSet pole;
    pole.bind_rational("c", 1).bind_int("N", 3);
    rep = verify("c-chain-finite", pole, 40);
    CHECK(rep.status == VerifyStatus::skipped_pole);
    CHECK(!rep.detail.empty());

    BindingSet t34;
    t34.bind_rational("t", {3, 4});
    rep = verify("delta-general", t34, 60);
    CHECK(rep.status == VerifyStatus::pass);

    // unknown/missing/malformed bindings are caller errors, not statuses
    CHECK_THROWS_AS(verify("delta-general", BindingSet{}, 40), BindingError);
    BindingSet wrong_kind;
    wrong_kind.bind_monomial("t", 1, 1);
    CHECK_THROWS_AS(verify("delta-general", wrong_kind, 40), BindingError);
    BindingSet extra = t34;
    extra.bind_rational("zz", 1);
    CHECK_THROWS_AS(verify("delta-general", extra, 40), BindingError);
}

TEST_CASE("verify_descriptor doubles: fail and non-convergent statuses") {
    // perturb one coefficient of one side of a true identity
    IdentityDescriptor d = descriptor("dems-limit");
    d.id = "dems-limit-broken";
    const SideBuilder original = d.sides[1];
    d.sides[1] = [original](const BindingSet& b, int order, const VerifyOptions& o) {
        auto s = original(b, order, o);
        s.set_coeff(7, s[7] + 1);
        return s;
    };
    auto rep = verify_descriptor(d, {}, 30);
    CHECK(rep.status == VerifyStatus::fail);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->exponent == 7);
    CHECK(rep.first_mismatch->rhs - rep.first_mismatch->lhs == Rational(1));

    // a side whose formal sum stalls is reported, not thrown
    IdentityDescriptor stall;
    stall.id = "stall-double";
    stall.anchor = "(test double)";
    stall.pole = [](const BindingSet&) { return std::nullopt; };
    stall.sides.push_back([](const BindingSet&, int order, const VerifyOptions& o) {
        return sum_formal(order, 0, [order](int) { return TruncatedSeries::one(order); }, o.sum);
    });
    stall.sides.push_back(
        [](const BindingSet&, int order, const VerifyOptions&) { return TruncatedSeries(order); });
    rep = verify_descriptor(stall, {}, 20);
    CHECK(rep.status == VerifyStatus::non_convergent);

    // the guard length is honored
    VerifyOptions tight;
    tight.sum.guard = 3;
    CHECK_THROWS_AS(
        sum_formal(10, 0, [](int) { return TruncatedSeries::one(10); }, tight.sum),
        NonConvergentSum);
}

TEST_CASE("three-sided chains compare pairwise") {
    BindingSet cb;
    cb.bind_rational("c", {1, 2}).bind_int("N", 3);
    auto rep = verify("c-chain-finite", cb, 40);
    CHECK(rep.status == VerifyStatus::pass);

    auto s0 = build_side("c-chain-finite", 0, cb, 40);
    auto s1 = build_side("c-chain-finite", 1, cb, 40);
    auto s2 = build_side("c-chain-finite", 2, cb, 40);
    CHECK(s0 == s1);
    CHECK(s1 == s2);
}

TEST_CASE("delta built two ways, moderate order") {
    auto rep = verify("delta-at-minus1", {}, 300);
    CHECK(rep.status == VerifyStatus::pass);
    auto lhs = build_side("delta-at-minus1", 0, {}, 300);
    // |coefficients| stay <= 2 and the bound is attained first at q^70
    for (int i = 0; i <= 300; ++i) CHECK(lhs[i].abs() <= Rational(2));
    CHECK(lhs[70] == Rational(-2));
    for (int i = 0; i < 70; ++i) CHECK(lhs[i].abs() < Rational(2));
}

TEST_CASE("verify_all") {
    // report count = sum of per-entry grid sizes
    std::size_t expect = 0;
    for (const auto& d : catalog()) expect += d.grid.size();
    auto reports = verify_all(8, {});
    CHECK(reports.size() == expect);
    // deterministic id-then-binding order
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const bool ordered = reports[i - 1].id < reports[i].id ||
                             (reports[i - 1].id == reports[i].id &&
                              reports[i - 1].bindings.str() <= reports[i].bindings.str());
        CHECK(ordered);
    }
    // threading does not change the result set
    auto serial = verify_all(8, {}, nullptr, 1);
    REQUIRE(serial.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(serial[i].id == reports[i].id);
        CHECK(serial[i].status == reports[i].status);
    }

    // explicit grid override runs exactly the requested jobs
    std::vector<std::pair<std::string, BindingSet>> jobs;
    jobs.emplace_back("dems-finite", BindingSet{}.bind_int("N", 2));
    jobs.emplace_back("delta-at-minus1", BindingSet{});
    auto overridden = verify_all(20, {}, &jobs);
    REQUIRE(overridden.size() == 2);
    CHECK(overridden[0].id == "delta-at-minus1");
    CHECK(overridden[1].id == "dems-finite");
    for (const auto& r : overridden) CHECK(r.status == VerifyStatus::pass);
}

TEST_CASE("sigma, delta and mock entries hold at order 60 on their full grids") {
    for (const char* id : {"sigma-two-forms", "sigma-finite", "sigma-new-rep", "delta-general",
                           "delta-at-minus1", "mock-phi", "mock-psi", "new-ramanujan-i",
                           "new-ramanujan-ii"}) {
        const auto& d = descriptor(id);
        CHECK(d.default_order == 60);
        for (const auto& bs : d.grid) {
            auto rep = verify(id, bs, 60);
            CAPTURE(id);
            CAPTURE(bs.str());
            CHECK(rep.status == VerifyStatus::pass);
        }
    }
}

TEST_CASE("oracle agreement on the crank chain") {
    auto series = build_side("agl-crank", 1, {}, 20);
    for (int n = 2; n <= 20; ++n) CHECK(series[n] == Rational(crank_moment(n)));
    CHECK(series[1] == Rational(1)); // the isolated q term
}

TEST_SUITE_END();
