#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcas/mixing.hpp"
#include "lcas/rng.hpp"

#include "oracles.hpp"

#include <algorithm>

using namespace lcas;

namespace {

Window cells(std::vector<ExpVec> v) { return Window(std::move(v)); }

// The three dot system brought to CA form: X_2 = 1 + X_1^-1 over F_2.
CAShift three_dot() { return make_ca_shift(2, 2, "1+x1^-1"); }

// Its annihilator support, translated to start at the origin.
PrimitiveSet three_dot_offsets() {
    return PrimitiveSet{{ExpVec{0, 0}, ExpVec{1, 0}, ExpVec{1, 1}}};
}

BaseEvent origin_is(uint32_t v) { return BaseEvent{cells({{0, 0}}), {v}}; }

} // namespace

TEST_CASE("primitive set validation") {
    CHECK_NOTHROW(PrimitiveSet({ExpVec{0, 0}, ExpVec{1, 2}}));
    CHECK_THROWS_AS(PrimitiveSet(std::vector<ExpVec>{}), DomainError);
    CHECK_THROWS_AS(PrimitiveSet({ExpVec{1, 0}, ExpVec{0, 0}}), DomainError);
    CHECK_THROWS_AS(PrimitiveSet({ExpVec{0, 0}, ExpVec{1, 0}, ExpVec{1, 0}}), DomainError);
}

TEST_CASE("three dot joint measures vanish at two power dilations") {
    CAShift ca = three_dot();
    std::vector<BaseEvent> events{origin_is(1), origin_is(0), origin_is(0)};
    DilationReport report =
        mixing_scan(ca, events, three_dot_offsets(), {2, 4, 8, 16, 32, 64});

    REQUIRE(report.factors.size() == 3);
    for (const MeasureValue& f : report.factors) CHECK(f == MeasureValue::p_power(1));
    REQUIRE(report.rows.size() == 6);
    for (const DilationRow& row : report.rows) {
        CHECK(row.joint == MeasureValue::zero());
        CHECK(row.product == MeasureValue::p_power(3));
        CHECK(!row.equal);
    }
}

TEST_CASE("three dot pairs mix") {
    CAShift ca = three_dot();
    ExpVec all[] = {ExpVec{0, 0}, ExpVec{1, 0}, ExpVec{1, 1}};
    std::vector<int64_t> ms;
    for (int64_t m = 2; m <= 64; ++m) ms.push_back(m);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            PrimitiveSet pair{{ExpVec{0, 0}, vec_sub(all[j], all[i])}};
            std::vector<BaseEvent> events{origin_is(i == 0 ? 1 : 0), origin_is(j == 0 ? 1 : 0)};
            DilationReport report = mixing_scan(ca, events, pair, ms);
            for (const DilationRow& row : report.rows) {
                CHECK(row.joint == MeasureValue::p_power(2));
                CHECK(row.product == MeasureValue::p_power(2));
                CHECK(row.equal);
            }
        }
}

TEST_CASE("single offset scan returns the event's own measure") {
    CAShift ca = make_ca_shift(2, 2, "1+x1");
    BaseEvent pair{cells({{0, 0}, {0, 1}}), {1, 1}};
    DilationReport report =
        mixing_scan(ca, {pair}, PrimitiveSet{{ExpVec{0, 0}}}, {2, 5, 9});
    MeasureValue own = report.factors[0];
    CHECK(own == MeasureValue::p_power(2));
    for (const DilationRow& row : report.rows) {
        CHECK(row.joint == own);
        CHECK(row.product == own);
        CHECK(row.equal);
    }
}

TEST_CASE("mixing scan is translation invariant") {
    CAShift ca = three_dot();
    PrimitiveSet offsets = three_dot_offsets();
    std::vector<int64_t> ms{2, 3, 4, 7, 8};
    std::vector<BaseEvent> base{origin_is(1), origin_is(0), origin_is(0)};
    DilationReport plain = mixing_scan(ca, base, offsets, ms);

    for (const ExpVec& shift : {ExpVec{5, -3}, ExpVec{-2, 2}}) {
        std::vector<BaseEvent> moved;
        for (const BaseEvent& ev : base) moved.push_back({ev.window.translated(shift), ev.values});
        DilationReport report = mixing_scan(ca, moved, offsets, ms);
        REQUIRE(report.rows.size() == plain.rows.size());
        for (size_t i = 0; i < report.rows.size(); ++i) {
            CHECK(report.rows[i].joint == plain.rows[i].joint);
            CHECK(report.rows[i].product == plain.rows[i].product);
        }
    }
}

TEST_CASE("joint exponent never exceeds the sum of the factors") {
    CounterRng rng(77);
    for (int round = 0; round < 10; ++round) {
        uint32_t p = round % 2 ? 3 : 2;
        CAShift ca(Prime(p), oracles::random_phi(rng, Prime(p), 2, 3, 1));
        std::vector<BaseEvent> events;
        std::vector<ExpVec> offs{ExpVec{0, 0}};
        for (int k = 0; k < 2; ++k) {
            Window w = oracles::random_window(rng, 2, 1 + rng.below(2), 1);
            std::vector<uint32_t> vals(w.size());
            for (auto& v : vals) v = rng.residue(p);
            events.push_back({w, vals});
            if (k > 0)
                offs.push_back(ExpVec{int64_t(rng.below(3)) - 1, int64_t(rng.below(2)) + 1});
        }
        DilationReport report = mixing_scan(ca, events, PrimitiveSet{offs}, {1, 2, 3});
        uint64_t bound = 0;
        bool any_zero = false;
        for (const MeasureValue& f : report.factors) {
            if (f.is_zero) any_zero = true;
            else bound += f.exponent;
        }
        for (const DilationRow& row : report.rows) {
            if (any_zero) {
                CHECK(row.joint == MeasureValue::zero());
            } else if (!row.joint.is_zero) {
                CHECK(row.joint.exponent <= bound);
            }
        }
    }
}

TEST_CASE("scan rows agree with directly translated cylinders") {
    CAShift ca = three_dot();
    PrimitiveSet offsets = three_dot_offsets();
    std::vector<BaseEvent> events{origin_is(1), origin_is(0), origin_is(0)};
    for (int64_t m : {2, 3, 5, 8}) {
        DilationReport report = mixing_scan(ca, events, offsets, {m});
        std::vector<CylinderEvent> translated;
        for (size_t i = 0; i < events.size(); ++i)
            translated.push_back(
                {events[i].window, events[i].values, vec_scale(-m, offsets.offsets[i])});
        CHECK(report.rows[0].joint == cylinder_measure(ca, translated));
        CHECK(report.rows[0].joint ==
              oracles::brute_cylinder(ca, translated, uint64_t(1) << 18));
    }
}

TEST_CASE("certificates witness non mixing") {
    CAShift ca = three_dot();

    CertificateReport plain =
        nonmixing_certificate(ca, LaurentPoly::constant(Prime(2), 2, 1), 5);
    CHECK(plain.witnessed);
    CHECK(plain.q == ca.annihilator());
    CHECK(plain.offsets.offsets.size() == 3);
    CHECK(plain.product == MeasureValue::p_power(3));
    REQUIRE(plain.rows.size() == 5);
    for (size_t j = 0; j < plain.rows.size(); ++j) {
        CHECK(plain.rows[j].j == j + 1);
        CHECK(plain.rows[j].m == int64_t(1) << (j + 1));
        CHECK(plain.rows[j].joint == MeasureValue::zero());
    }

    LaurentPoly r = parse_poly("1+x1", Prime(2), 2);
    CertificateReport wider = nonmixing_certificate(ca, r, 4);
    CHECK(wider.witnessed);
    CHECK(wider.q == r * ca.annihilator());
    CHECK(wider.product == MeasureValue::p_power(uint64_t(wider.offsets.offsets.size())));

    // a monomial multiplier only translates the support
    CertificateReport mono =
        nonmixing_certificate(ca, parse_poly("x1^3", Prime(2), 2), 5);
    CHECK(mono.witnessed);
    CHECK(mono.offsets.offsets == plain.offsets.offsets);

    CHECK_THROWS_AS(nonmixing_certificate(ca, LaurentPoly(Prime(2), 2), 3), DomainError);
}

TEST_CASE("random multipliers stay witnessed") {
    CAShift ca = three_dot();
    CounterRng rng(101);
    int tested = 0;
    while (tested < 20) {
        LaurentPoly r = oracles::random_poly(rng, Prime(2), 2, 3, 2);
        if (r.is_zero()) continue;
        ++tested;
        CertificateReport report = nonmixing_certificate(ca, r, 3);
        CHECK(report.witnessed);
    }
}

TEST_CASE("horizontal offsets reach the product") {
    CAShift ca = make_ca_shift(2, 2, "1+x1");

    HorizontalReport two = horizontal_mixing_check(
        ca, PrimitiveSet{{ExpVec{0, 0}, ExpVec{1, 0}}}, {}, 16);
    CHECK(two.found);
    CHECK(two.m0 == 1);
    for (const HorizontalRow& row : two.rows) {
        CHECK(row.joint == MeasureValue::p_power(2));
        CHECK(row.equal);
    }

    HorizontalReport three = horizontal_mixing_check(
        ca, PrimitiveSet{{ExpVec{0, 0}, ExpVec{1, 0}, ExpVec{2, 0}}}, {}, 16);
    CHECK(three.found);
    CHECK(three.m0 == 1);
    for (const HorizontalRow& row : three.rows) CHECK(row.product == MeasureValue::p_power(3));

    HorizontalReport lone =
        horizontal_mixing_check(ca, PrimitiveSet{{ExpVec{0, 0}}}, {}, 8);
    CHECK(lone.found);
    CHECK(lone.m0 == 1);

    CHECK_THROWS_AS(horizontal_mixing_check(
                        ca, PrimitiveSet{{ExpVec{0, 0}, ExpVec{1, 1}}}, {}, 8),
                    DomainError);
}

TEST_CASE("default dilations include the prime powers") {
    std::vector<int64_t> two = default_dilations(2, 64);
    std::vector<int64_t> want{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 32, 64};
    CHECK(two == want);

    std::vector<int64_t> three = default_dilations(3, 30);
    CHECK(std::find(three.begin(), three.end(), 27) != three.end());
    CHECK(std::is_sorted(three.begin(), three.end()));
    CHECK(std::adjacent_find(three.begin(), three.end()) == three.end());
    CHECK(three.back() == 27);
}
