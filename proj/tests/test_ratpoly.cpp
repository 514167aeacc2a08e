#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fxgy/poly.hpp"
#include "test_util.hpp"

using namespace fxgy;
using testutil::rand_monic_poly;
using testutil::rand_nonzero_rational;
using testutil::rand_poly;
using testutil::rand_rational;

namespace {

Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("rational canonical form and exact arithmetic") {
    Rational a(4, 6);
    CHECK(a.num() == 2);
    CHECK(a.den() == 3);
    Rational b(-3, -9);
    CHECK(b.num() == 1);
    CHECK(b.den() == 3);
    CHECK((a + b) == Rational(1));
    CHECK((a - b) == Rational(1, 3));
    CHECK((a * b) == Rational(2, 9));
    CHECK((a / b) == Rational(2));
    CHECK(Rational(1, 3) + Rational(1, 3) + Rational(1, 3) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK(!Rational::from_string("1/0").has_value());
    CHECK(!Rational::from_string("x").has_value());
    CHECK(!Rational::from_string("1/2/3").has_value());
}

TEST_CASE("rational powers and roots") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(5) == Rational(0));
    CHECK(Rational(8, 27).nth_root(3) == Rational(2, 3));
    CHECK(Rational(-8, 27).nth_root(3) == Rational(-2, 3));
    CHECK(Rational(9, 4).nth_root(2) == Rational(3, 2));
    CHECK(!Rational(-9, 4).nth_root(2).has_value());
    CHECK(!Rational(2).nth_root(2).has_value());
    CHECK(Rational(1).nth_root(7) == Rational(1));
    CHECK(Rational(49, 16).is_square());
    CHECK(!Rational(50, 16).is_square());
}

TEST_CASE("poly basics: degree sentinel, arithmetic, evaluation") {
    Poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == kZeroPolyDegree);
    CHECK(z.degree() != -1);
    Poly f = P({1, 0, 3});  // 3x^2 + 1
    CHECK(f.degree() == 2);
    CHECK(f.lc() == Rational(3));
    CHECK(f.eval(Rational(2)) == Rational(13));
    CHECK((f - f).is_zero());
    CHECK(f + z == f);
    CHECK(f * z == z);
    CHECK((f * f).degree() == 4);
    CHECK(f.derivative() == P({0, 6}));
    CHECK(P({5}).derivative().is_zero());
    CHECK_THROWS_AS(z.lc(), std::domain_error);
    CHECK(f.shift(Rational(1)) == P({4, 6, 3}));  // 3(x+1)^2+1
    CHECK(f.shift(Rational(0)) == f);
    Poly g = P({-2, 0, 0, 1});
    CHECK(g.shift(Rational(1, 2)).shift(Rational(-1, 2)) == g);
}

TEST_CASE("poly division") {
    Poly a = P({-1, 0, 0, 1});  // x^3 - 1
    Poly b = P({-1, 1});        // x - 1
    auto [q, r] = divrem(a, b);
    CHECK(q == P({1, 1, 1}));
    CHECK(r.is_zero());
    auto [q2, r2] = divrem(P({1, 1}), P({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == P({1, 1}));
    CHECK_THROWS_AS(divrem(a, Poly()), std::domain_error);
    CHECK_THROWS_AS(exact_div(P({1, 1}), P({1, 1, 1})), std::domain_error);
}

TEST_CASE("gcd examples") {
    // (x^2-1, x^3-1) -> x-1
    CHECK(gcd(P({-1, 0, 1}), P({-1, 0, 0, 1})) == P({-1, 1}));
    // gcd with zero: f made monic
    CHECK(gcd(P({2, 0, 4}), Poly()) == P({1, 0, 2}).monic());
    CHECK(gcd(Poly(), P({2, 0, 4})) == P({1, 0, 2}).monic());
    // ((x^2-1)^2, 4x^3-4x) -> x^2-1
    Poly f = P({-1, 0, 1}) * P({-1, 0, 1});
    Poly g = P({0, -4, 0, 4});
    CHECK(gcd(f, g) == P({-1, 0, 1}));
    CHECK_THROWS_AS(gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("gcd properties on random inputs") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 60; ++it) {
        Poly f = rand_poly(rng, 1 + static_cast<int>(rng() % 8), -5, 5);
        Poly g = rand_poly(rng, 1 + static_cast<int>(rng() % 8), -5, 5);
        Poly d = gcd(f, g);
        CHECK(divrem(f, d).second.is_zero());
        CHECK(divrem(g, d).second.is_zero());
        Poly w = rand_poly(rng, 1 + static_cast<int>(rng() % 3), -4, 4);
        CHECK(gcd(f * w, g * w) == (w.monic() * d));
    }
}

TEST_CASE("squarefree decomposition examples") {
    // already squarefree
    auto s1 = squarefree_decompose(P({0, -3, 0, 1}));
    REQUIRE(s1.parts.size() == 1);
    CHECK(s1.parts[0].factor == P({0, -3, 0, 1}));
    CHECK(s1.parts[0].multiplicity == 1);
    CHECK(s1.unit == Rational(1));

    // (x^2+1)^2
    auto s2 = squarefree_decompose(P({1, 0, 1}) * P({1, 0, 1}));
    REQUIRE(s2.parts.size() == 1);
    CHECK(s2.parts[0].factor == P({1, 0, 1}));
    CHECK(s2.parts[0].multiplicity == 2);

    // x^2(x-1)^4 = x^6-4x^5+6x^4-4x^3+x^2
    auto s3 = squarefree_decompose(P({0, 0, 1}) * P({-1, 1}).pow(4));
    REQUIRE(s3.parts.size() == 2);
    CHECK(s3.parts[0].factor == P({0, 1}));
    CHECK(s3.parts[0].multiplicity == 2);
    CHECK(s3.parts[1].factor == P({-1, 1}));
    CHECK(s3.parts[1].multiplicity == 4);
    // and the expanded form agrees
    CHECK(s3.reassemble() == P({0, 0, 1, -4, 6, -4, 1}));

    CHECK_THROWS_AS(squarefree_decompose(Poly()), std::domain_error);
}

TEST_CASE("yun reconstruction on random factor products") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        Poly f = Poly::constant(rand_nonzero_rational(rng, -4, 4, 3));
        int nfac = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < nfac; ++j) {
            int d = 1 + static_cast<int>(rng() % 2);
            Poly fac = rand_monic_poly(rng, d, -3, 3);
            unsigned mult = 1 + static_cast<unsigned>(rng() % 5);
            f = f * fac.pow(mult);
        }
        auto sq = squarefree_decompose(f);
        CHECK(sq.reassemble() == f);
        for (size_t i = 0; i < sq.parts.size(); ++i) {
            CHECK(!sq.parts[i].factor.is_constant());
            CHECK(sq.parts[i].factor.lc() == Rational(1));
            if (i > 0) CHECK(sq.parts[i].multiplicity > sq.parts[i - 1].multiplicity);
            for (size_t j = i + 1; j < sq.parts.size(); ++j)
                CHECK(gcd(sq.parts[i].factor, sq.parts[j].factor).is_constant());
            CHECK(squarefree_part(sq.parts[i].factor) == sq.parts[i].factor);
        }
    }
}

TEST_CASE("resultant examples and sign convention") {
    // (x - 3, x - 5) -> 3 - 5 = -2
    CHECK(resultant(P({-3, 1}), P({-5, 1})) == Rational(-2));
    // (x^2 - 1, x) -> -1
    CHECK(resultant(P({-1, 0, 1}), P({0, 1})) == Rational(-1));
    // common roots -> 0
    CHECK(resultant(P({1, 0, 1}), P({1, 0, 1})) == Rational(0));
    CHECK_THROWS_AS(resultant(Poly(), P({1})), std::domain_error);
    // swap symmetry
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 40; ++it) {
        Poly a = rand_poly(rng, 1 + static_cast<int>(rng() % 5), -4, 4, 2);
        Poly b = rand_poly(rng, 1 + static_cast<int>(rng() % 5), -4, 4, 2);
        long sgn = (static_cast<long>(a.degree()) * b.degree()) % 2 == 0 ? 1 : -1;
        CHECK(resultant(a, b) == Rational(sgn) * resultant(b, a));
    }
}

TEST_CASE("resultant equals product formula over known roots") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
        // a = lc * prod (x - r_i) with distinct rational roots
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> roots;
        while (static_cast<int>(roots.size()) < n) {
            Rational r = rand_rational(rng, -6, 6, 2);
            bool dup = false;
            for (const auto& s : roots) dup |= (s == r);
            if (!dup) roots.push_back(r);
        }
        Rational alc = rand_nonzero_rational(rng, -3, 3, 2);
        Poly a = Poly::constant(alc);
        for (const auto& r : roots) a = a * (Poly::x() - Poly::constant(r));
        Poly b = rand_poly(rng, 1 + static_cast<int>(rng() % 4), -4, 4, 2);
        Rational expected = alc.pow(b.degree());
        for (const auto& r : roots) expected *= b.eval(r);
        CHECK(resultant(a, b) == expected);
    }
}

TEST_CASE("resultant vanishes exactly when gcd is nonconstant") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 120; ++it) {
        Poly a = rand_poly(rng, 1 + static_cast<int>(rng() % 6), -4, 4);
        Poly b = rand_poly(rng, 1 + static_cast<int>(rng() % 6), -4, 4);
        if (rng() % 3 == 0) {
            Poly common = rand_monic_poly(rng, 1 + static_cast<int>(rng() % 2), -3, 3);
            a = a * common;
            b = b * common;
        }
        bool zero = resultant(a, b).is_zero();
        bool shared = !gcd(a, b).is_constant();
        CHECK(zero == shared);
    }
}

TEST_CASE("compose examples") {
    // (5x^2+5x+1) o (x^2+x) = (1+x)^5 - x^5 expanded
    Poly outer = P({1, 5, 5});
    Poly inner = P({0, 1, 1});
    CHECK(compose(outer, inner) == P({1, 5, 10, 10, 5}));
    // g o x = g
    Poly g = P({3, -2, 0, 7});
    CHECK(compose(g, Poly::x()) == g);
    // D2(x,1) o D3(x,1) = (x^3-3x)^2 - 2 = x^6-6x^4+9x^2-2
    Poly d2 = P({-2, 0, 1});
    Poly d3 = P({0, -3, 0, 1});
    CHECK(compose(d2, d3) == P({-2, 0, 9, 0, -6, 0, 1}));
    // degree multiplies
    CHECK(compose(d2, d3).degree() == d2.degree() * d3.degree());
}

TEST_CASE("compose associativity on random triples") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 40; ++it) {
        Poly f = rand_poly(rng, 1 + static_cast<int>(rng() % 4), -3, 3);
        Poly g = rand_poly(rng, 1 + static_cast<int>(rng() % 4), -3, 3);
        Poly h = rand_poly(rng, 1 + static_cast<int>(rng() % 4), -3, 3);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("interpolation examples") {
    CHECK(interpolate({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}}) == P({1, 1}));
    CHECK(interpolate({{Rational(0), Rational(0)},
                       {Rational(1), Rational(1)},
                       {Rational(-1), Rational(1)}}) == P({0, 0, 1}));
    // evaluate x^3-3x-2 on four abscissae, interpolate back
    Poly target = P({-2, -3, 0, 1});
    std::vector<std::pair<Rational, Rational>> pts;
    for (long v : {0L, 1L, 2L, -1L}) pts.push_back({Rational(v), target.eval(Rational(v))});
    CHECK(interpolate(pts) == target);
    CHECK_THROWS_AS(interpolate({{Rational(1), Rational(0)}, {Rational(1), Rational(2)}}),
                    std::domain_error);
}

TEST_CASE("interpolation round-trips random polynomials") {
    std::mt19937_64 rng(5150);
    for (int it = 0; it < 50; ++it) {
        Poly f = rand_poly(rng, static_cast<int>(rng() % 7), -5, 5, 3);
        std::vector<std::pair<Rational, Rational>> pts;
        long v = 0;
        for (int i = 0; i <= f.degree() || i == 0; ++i) {
            Rational xi(v);
            v = v <= 0 ? -v + 1 : -v;  // 0, 1, -1, 2, -2, ...
            pts.push_back({xi, f.eval(xi)});
        }
        CHECK(interpolate(pts) == f);
    }
}

TEST_CASE("poly rendering") {
    CHECK(P({1, 5, 10}).str() == "10*x^2+5*x+1");
    CHECK(P({0, -3, 0, 1}).str() == "x^3-3*x");
    CHECK(Poly().str() == "0");
    CHECK(P({-1}).str() == "-1");
    CHECK(Poly::from_coeffs({Rational(1, 2), Rational(-3, 2)}).str() == "-3/2*x+1/2");
    CHECK(P({0, 1}).str() == "x");
    CHECK(P({0, -1}).str() == "-x");
}
