#include <doctest.h>

#include <random>

#include "fwcodes/lowfactor.hpp"

using namespace fwc;
using namespace fwc::lowfactor;
using gf2n::Elt;
using gf2n::Field;

TEST_SUITE("lowfactor") {

TEST_CASE("Artin-Schreier solver matches exhaustive search, odd and even degrees") {
    for (int n = 1; n <= 10; ++n) {
        auto Fp = Field::make_any(n);
        const Field& K = *Fp;
        for (Elt c = 0; c < K.order(); ++c) {
            auto z = solve_artin_schreier(K, c);
            Elt best = 0;
            bool found = false;
            for (Elt y = 0; y < K.order(); ++y)
                if ((K.sqr(y) ^ y) == c) {
                    best = found ? std::min(best, y) : y;
                    found = true;
                }
            CHECK(z.has_value() == found);
            if (found) {
                CHECK((K.sqr(*z) ^ *z) == c);
                CHECK(*z == best);
            }
            CHECK(found == (K.trace(c) == 0));
        }
    }
}

TEST_CASE("general quadratic solver") {
    auto Fp = Field::make_any(6);
    const Field& K = *Fp;
    std::mt19937 rng(2);
    for (int it = 0; it < 500; ++it) {
        Elt b = rng() & 63, c = rng() & 63;
        auto r = solve_quadratic(K, b, c);
        int roots = 0;
        for (Elt y = 0; y < K.order(); ++y)
            if ((K.sqr(y) ^ K.mul(b, y) ^ c) == 0) ++roots;
        if (b == 0) {
            REQUIRE(r.has_value());
            CHECK((*r)[0] == (*r)[1]);
            CHECK(roots == 1);
        } else {
            CHECK(r.has_value() == (roots == 2));
        }
        if (r)
            for (Elt y : *r) CHECK((K.sqr(y) ^ K.mul(b, y) ^ c) == 0);
    }
}

TEST_CASE("quadratic extension arithmetic") {
    auto Fp = Field::make_any(5);
    const Field& K = *Fp;
    Ext2 X(K);
    CHECK(K.trace(X.delta()) == 1);
    std::mt19937 rng(3);
    auto rnd = [&]() { return Ext2::E{static_cast<Elt>(rng() & 31), static_cast<Elt>(rng() & 31)}; };
    for (int it = 0; it < 300; ++it) {
        auto x = rnd(), y = rnd();
        CHECK(X.mul(x, y) == X.mul(y, x));
        CHECK(X.conj(X.conj(x)) == x);
        CHECK(X.norm(X.mul(x, y)) == K.mul(X.norm(x), X.norm(y)));
        if (x.lo || x.hi) {
            CHECK(X.mul(x, X.inv(x)) == X.embed(1));
            // multiplicative order divides q^2 - 1
            CHECK(X.pow(x, (static_cast<std::uint64_t>(K.order()) * K.order()) - 1) == X.embed(1));
        }
        // Frobenius^n fixes exactly the base field
        CHECK((X.conj(x) == x) == X.in_base(x));
        auto c = x;
        auto as = X.artin_schreier(X.add(X.sqr(c), c));
        REQUIRE(as.has_value());
        CHECK(X.add(X.sqr(*as), *as) == X.add(X.sqr(c), c));
    }
}

TEST_CASE("cubic classification: hand values") {
    auto F1 = Field::make_any(1);
    CHECK(cubic_type(*F1, 1, 1) == FactorPattern::P3);   // x^3+x+1 irreducible over GF(2)
    CHECK(cubic_type(*F1, 0, 1) == FactorPattern::P12);  // x^3+1 = (x+1)(x^2+x+1)
    CHECK(cubic_root(*F1, 0, 1) == 1);
    CHECK_THROWS_WITH_AS(cubic_type(*F1, 1, 0), doctest::Contains("ZeroConstantTerm"), Error);
    CHECK_THROWS_WITH_AS(cubic_root(*F1, 1, 1), doctest::Contains("NoRootInField"), Error);
}

TEST_CASE("cubic classification against the brute-force oracle, small grids") {
    for (int m = 1; m <= 4; ++m) {
        auto Fp = Field::make_any(m);
        const Field& K = *Fp;
        for (Elt a = 0; a < K.order(); ++a)
            for (Elt b = 1; b < K.order(); ++b) {
                auto got = cubic_type(K, a, b);
                CHECK(got == brute_factor_type(K, {b, a, 0, 1}));
                auto roots = cubic_roots(K, a, b);
                if (got == FactorPattern::P3) CHECK(roots.empty());
                if (got == FactorPattern::P12) CHECK(roots.size() == 1);
                if (got == FactorPattern::P111) CHECK(roots.size() == 3);
                for (Elt r : roots) CHECK((K.mul(r, K.sqr(r)) ^ K.mul(a, r) ^ b) == 0);
            }
    }
}

TEST_CASE("quartic classification: hand values and small grids") {
    auto F1 = Field::make_any(1);
    CHECK(quartic_type(*F1, 0, 1, 1) == FactorPattern::P4);  // x^4+x+1 irreducible over GF(2)
    auto F2 = Field::make_any(2);
    CHECK(quartic_type(*F2, 0, 1, 1) == FactorPattern::P22);  // splits into two quadratics over GF(4)
    CHECK_THROWS_WITH_AS(quartic_type(*F2, 1, 0, 1), doctest::Contains("DegenerateCoefficients"), Error);

    for (int n = 1; n <= 3; ++n) {
        auto Fp = Field::make_any(n);
        const Field& K = *Fp;
        for (Elt a2 = 0; a2 < K.order(); ++a2)
            for (Elt a1 = 1; a1 < K.order(); ++a1)
                for (Elt a0 = 1; a0 < K.order(); ++a0)
                    CHECK(quartic_type(K, a2, a1, a0) == brute_factor_type(K, {a0, a1, a2, 0, 1}));
    }
}

TEST_CASE("brute-force oracle: construction round trip") {
    auto Fp = Field::make_any(4);
    const Field& K = *Fp;
    CHECK(brute_factor_type(*Field::make_any(1), {1, 0, 0, 1}) == FactorPattern::P12);  // x^3+1 over GF(2)
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        // (x+a)(x+b)(x+c) from distinct elements
        Elt a = rng() & 15, b = rng() & 15, c = rng() & 15;
        if (a == b || a == c || b == c) continue;
        Elt e2 = a ^ b ^ c;
        Elt e1 = K.mul(a, b) ^ K.mul(a, c) ^ K.mul(b, c);
        Elt e0 = K.mul(a, K.mul(b, c));
        CHECK(brute_factor_type(K, {e0, e1, e2, 1}) == FactorPattern::P111);
    }
}

}  // TEST_SUITE
