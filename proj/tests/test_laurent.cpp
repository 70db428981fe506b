#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcas/factor.hpp"
#include "lcas/laurent.hpp"
#include "lcas/rng.hpp"

#include "oracles.hpp"

using namespace lcas;

namespace {

LaurentPoly pp(const char* text, uint32_t p = 2, size_t dim = 2) {
    return parse_poly(text, Prime(p), dim);
}

} // namespace

TEST_CASE("prime validation") {
    CHECK_NOTHROW(Prime(2));
    CHECK_NOTHROW(Prime(3));
    CHECK_NOTHROW(Prime(65521));
    CHECK_THROWS_AS(Prime(0), DomainError);
    CHECK_THROWS_AS(Prime(1), DomainError);
    CHECK_THROWS_AS(Prime(4), DomainError);
    CHECK_THROWS_AS(Prime(65536), DomainError);
    CHECK_THROWS_AS(Prime(65537), DomainError);
}

TEST_CASE("modular arithmetic") {
    for (uint32_t p : {2u, 3u, 7u, 65521u}) {
        CounterRng rng(p);
        for (int i = 0; i < 50; ++i) {
            uint32_t a = rng.residue(p), b = rng.residue(p);
            CHECK(add_mod(a, b, p) == (uint64_t(a) + b) % p);
            CHECK(sub_mod(a, b, p) == (uint64_t(a) + p - b) % p);
            CHECK(mul_mod(a, b, p) == uint64_t(a) * b % p);
            CHECK(add_mod(a, neg_mod(a, p), p) == 0);
            if (a % p != 0) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
        }
        CHECK_THROWS_AS(inv_mod(0, p), DomainError);
    }
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(pow_mod(3, 6, 7) == 1);
    CHECK(pow_mod(2, 10, 65521) == 1024);
}

TEST_CASE("smallest primitive roots") {
    CHECK(primitive_root(2) == 1);
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(41) == 6);
    uint32_t g = primitive_root(65521);
    uint32_t order = 1;
    uint64_t x = g;
    while (x != 1) {
        x = x * g % 65521;
        ++order;
    }
    CHECK(order == 65520);
}

TEST_CASE("counter rng determinism and range") {
    CounterRng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        uint64_t x = a.next();
        all_equal = all_equal && x == b.next();
        any_diff = any_diff || x != c.next();
    }
    CHECK(all_equal);
    CHECK(any_diff);
    for (int i = 0; i < 200; ++i) CHECK(a.below(7) < 7);
}

TEST_CASE("parse examples") {
    LaurentPoly a = pp("1 + x1^-1 + x2^-1");
    CHECK(a.coeff({0, 0}) == 1);
    CHECK(a.coeff({-1, 0}) == 1);
    CHECK(a.coeff({0, -1}) == 1);
    CHECK(a.terms().size() == 3);

    CHECK(parse_poly("0", Prime(3), 1).is_zero());
    CHECK(parse_poly("2*x1 + x1", Prime(3), 1).is_zero());

    LaurentPoly b = parse_poly("3*x1^2x2 + 5", Prime(7), 2);
    CHECK(b.coeff({2, 1}) == 3);
    CHECK(b.coeff({0, 0}) == 5);

    // one leading sign is tolerated
    LaurentPoly c = pp("-1 + x2");
    CHECK(c.coeff({0, 0}) == 1);
    CHECK(c.coeff({0, 1}) == 1);
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const char* text) {
        try {
            parse_poly(text, Prime(2), 2);
        } catch (const ParseError& e) {
            return e.position;
        }
        return size_t(9999);
    };
    CHECK(pos_of("") != 9999);
    CHECK(pos_of("x3") != 9999);      // index out of range
    CHECK(pos_of("1+") == 2);         // missing term
    CHECK(pos_of("x1^") == 3);        // missing exponent
    CHECK(pos_of("1+@") == 2);        // stray character
    CHECK(pp("x1 x2") == pp("x1x2")); // whitespace is ignored inside a term
    CHECK_THROWS_AS(pp("x0"), ParseError);
}

TEST_CASE("print parse round trip") {
    CHECK(to_string(pp("0")) == "0");
    CHECK(to_string(pp("x2 + 1 + x1")) == "1 + x2 + x1");
    CounterRng rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 40; ++i) {
            LaurentPoly a = oracles::random_poly(rng, Prime(p), 2, 5, 3);
            CHECK(parse_poly(to_string(a), Prime(p), 2) == a);
        }
    }
}

TEST_CASE("ring laws") {
    CounterRng rng(11);
    for (uint32_t p : {2u, 3u, 5u}) {
        LaurentPoly one = LaurentPoly::constant(Prime(p), 2, 1);
        LaurentPoly zero(Prime(p), 2);
        for (int i = 0; i < 25; ++i) {
            LaurentPoly a = oracles::random_poly(rng, Prime(p), 2, 4, 3);
            LaurentPoly b = oracles::random_poly(rng, Prime(p), 2, 4, 3);
            LaurentPoly c = oracles::random_poly(rng, Prime(p), 2, 4, 3);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * zero == zero);
            CHECK(a * one == a);
            CHECK((a - a).is_zero());
            CHECK((a + (-a)).is_zero());
            CHECK(pow(a, 3) == a * a * a);
        }
    }
    CHECK(pp("1+x1") * pp("1+x1") == pp("1+x1^2"));
    LaurentPoly t = pp("x2+1+x1");
    CHECK(t * LaurentPoly::constant(Prime(2), 2, 1) == t);
}

TEST_CASE("mismatched rings are rejected") {
    LaurentPoly a = pp("1+x1", 2, 2);
    LaurentPoly b = pp("1+x1", 3, 2);
    LaurentPoly c = pp("1+x1", 2, 3);
    CHECK_THROWS_AS(a * b, DomainError);
    CHECK_THROWS_AS(a + c, DomainError);
}

TEST_CASE("shape and primitive translate") {
    Shape s = shape(pp("1+x1^-1+x2^-1"));
    CHECK(s == Shape{{0, 0}, {-1, 0}, {0, -1}});
    CHECK(shape(pp("x2+1+x1")) == Shape{{0, 1}, {0, 0}, {1, 0}});
    CHECK_THROWS_AS(shape(LaurentPoly(Prime(2), 2)), DomainError);

    auto [t, off] = primitive_translate(Shape{{1, 1}, {2, 1}});
    CHECK(t == Shape{{0, 0}, {1, 0}});
    CHECK(off == ExpVec{1, 1});
}

TEST_CASE("frobenius power") {
    CHECK(frobenius_power(pp("x2+1+x1"), 1) == pp("x2^2+1+x1^2"));
    CHECK(frobenius_power(pp("1+x1^-1+x2^-1"), 2) == pp("1+x1^-4+x2^-4"));
    CounterRng rng(13);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 10; ++i) {
            LaurentPoly a = oracles::random_poly(rng, Prime(p), 2, 3, 2);
            CHECK(frobenius_power(a, 0) == a);
            LaurentPoly b = a;
            for (int e = 1; e <= 3; ++e) {
                b = pow(b, p);
                CHECK(frobenius_power(a, uint32_t(e)) == b);
                if (!a.is_zero()) {
                    Shape scaled;
                    int64_t f = 1;
                    for (int j = 0; j < e; ++j) f *= p;
                    for (const ExpVec& v : shape(a)) scaled.insert(vec_scale(f, v));
                    CHECK(shape(b) == scaled);
                }
            }
        }
    }
}

TEST_CASE("collinear support") {
    auto r = collinear_support(pp("1+x1^2+x1^4"));
    REQUIRE(r.has_value());
    CHECK(r->direction == ExpVec{1, 0});
    CHECK(r->step == 2);

    CHECK_FALSE(collinear_support(pp("x2+1+x1")).has_value());
    CHECK_FALSE(collinear_support(pp("x1^3")).has_value());

    auto diag = collinear_support(parse_poly("1+x1^2x2^2+2*x1^4x2^4", Prime(3), 2));
    REQUIRE(diag.has_value());
    CHECK(diag->direction == ExpVec{1, 1});
    CHECK(diag->step == 2);

    // line through non-origin points, negative direction normalized
    auto neg = collinear_support(pp("x1^-3 + x1^3"));
    REQUIRE(neg.has_value());
    CHECK(neg->direction == ExpVec{1, 0});
    CHECK(neg->step == 6);
}

TEST_CASE("exact division") {
    CounterRng rng(17);
    for (uint32_t p : {2u, 5u}) {
        for (int i = 0; i < 30; ++i) {
            LaurentPoly a = oracles::random_poly(rng, Prime(p), 2, 4, 2);
            LaurentPoly b = oracles::random_poly(rng, Prime(p), 2, 4, 2);
            if (b.is_zero()) continue;
            auto q = divide_exact(a * b, b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
    // monomials are units of the laurent ring, so division always succeeds
    auto unit_div = divide_exact(pp("1+x1"), pp("x2"));
    REQUIRE(unit_div.has_value());
    CHECK(*unit_div * pp("x2") == pp("1+x1"));
    CHECK_FALSE(divide_exact(pp("1+x1"), pp("1+x1+x2")).has_value());
}

TEST_CASE("axis inversion and translation") {
    LaurentPoly a = pp("1 + x1^-1 + x2^-1");
    LaurentPoly inv2 = invert_axes(a, 2);
    CHECK(inv2 == pp("1 + x1^-1 + x2"));
    CHECK(invert_axes(inv2, 2) == a);
    CHECK(translated(pp("1+x1"), ExpVec{0, 1}) == pp("x2+x1x2"));
    CHECK(eval_all_ones(pp("x2+1+x1")) == 1);
    CHECK(eval_all_ones(parse_poly("2*x1+x1^5", Prime(3), 2)) == 0);
}

TEST_CASE("factor examples") {
    Factorization f1 = univariate_factor(pp("1+x1^2"));
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].first == pp("1+x1"));
    CHECK(f1.factors[0].second == 2);
    CHECK(f1.unit == 1);

    Factorization f2 = univariate_factor(pp("1+x1+x1^2"));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == pp("1+x1+x1^2"));
    CHECK(f2.factors[0].second == 1);

    Factorization f3 = univariate_factor(pp("1+x1^3"));
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0].first == pp("1+x1"));
    CHECK(f3.factors[1].first == pp("1+x1+x1^2"));
    CHECK(f3.factors[0].second == 1);
    CHECK(f3.factors[1].second == 1);
}

TEST_CASE("factor normalizes laurent units") {
    Factorization f = univariate_factor(pp("x1^-2 + x1"));
    CHECK(f.monomial == ExpVec{-2, 0});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == pp("1+x1"));
    CHECK(f.factors[1].first == pp("1+x1+x1^2"));

    Factorization g = univariate_factor(parse_poly("2+2*x1", Prime(5), 2));
    CHECK(g.unit == 2);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == parse_poly("1+x1", Prime(5), 2));

    // second variable works the same way
    Factorization h = univariate_factor(pp("1+x2^2"));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].first == pp("1+x2"));
    CHECK(h.factors[0].second == 2);
}

TEST_CASE("factor rejects bad inputs") {
    CHECK_THROWS_AS(univariate_factor(pp("x1+x2")), DomainError);
    CHECK_THROWS_AS(univariate_factor(LaurentPoly(Prime(2), 2)), DomainError);
    Factorization m = univariate_factor(pp("x1^5"));
    CHECK(m.factors.empty());
    CHECK(m.monomial == ExpVec{5, 0});
}

TEST_CASE("factor randomized product and irreducibility") {
    CounterRng rng(23);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 12; ++i) {
            LaurentPoly a(Prime(p), 1);
            size_t deg = 1 + rng.below(9);
            for (size_t e = 0; e <= deg; ++e) a.add_term(ExpVec{int64_t(e)}, rng.residue(p));
            if (a.is_zero()) continue;
            Factorization f = univariate_factor(a);
            CHECK(factorization_product(f, Prime(p), 1) == a);
            for (const auto& [g, mult] : f.factors) {
                CHECK(mult >= 1);
                CHECK(oracles::dense_irreducible(oracles::dense_coeffs(g, 0), p));
            }
        }
    }
}

TEST_CASE("factor output is deterministic") {
    LaurentPoly a = parse_poly("1+x1^4+x1^9+2*x1^13", Prime(3), 1);
    Factorization f1 = univariate_factor(a);
    Factorization f2 = univariate_factor(a);
    REQUIRE(f1.factors.size() == f2.factors.size());
    for (size_t i = 0; i < f1.factors.size(); ++i) {
        CHECK(f1.factors[i].first == f2.factors[i].first);
        CHECK(f1.factors[i].second == f2.factors[i].second);
    }
    CHECK(factorization_product(f1, Prime(3), 1) == a);
}

TEST_CASE("larger prime factorization") {
    // x^2 - 2 is irreducible mod 5 (2 is not a square), splits mod 7 (3^2=2)
    LaurentPoly mod5 = parse_poly("3+x1^2", Prime(5), 1);
    Factorization f5 = univariate_factor(mod5);
    REQUIRE(f5.factors.size() == 1);
    CHECK(f5.factors[0].second == 1);

    LaurentPoly mod7 = parse_poly("5+x1^2", Prime(7), 1);
    Factorization f7 = univariate_factor(mod7);
    REQUIRE(f7.factors.size() == 2);
    CHECK(factorization_product(f7, Prime(7), 1) == mod7);
}
