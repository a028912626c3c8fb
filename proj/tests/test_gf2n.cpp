#include <doctest.h>

#include <random>

#include "fwcodes/gf2n.hpp"

using namespace fwc;
using namespace fwc::gf2n;

namespace {

// independent schoolbook reference: carry-less multiply into 64 bits, then
// long division by the reduction polynomial
Elt schoolbook_mul(int n, std::uint64_t poly, Elt a, Elt b) {
    std::uint64_t prod = 0;
    for (int i = 0; i < n; ++i)
        if ((b >> i) & 1u) prod ^= static_cast<std::uint64_t>(a) << i;
    for (int d = 2 * n - 2; d >= n; --d)
        if ((prod >> d) & 1u) prod ^= poly << (d - n);
    return static_cast<Elt>(prod);
}

}  // namespace

TEST_SUITE("gf2n") {

TEST_CASE("reduction polynomial table entries are the smallest irreducibles") {
    // the public range is 2..24; the internal GF(2) entry is the conventional x+1
    CHECK(kReductionPoly[1] == 0x3);
    CHECK(poly_irreducible(0x3));
    for (int n = 2; n <= 24; ++n) {
        std::uint32_t p = kReductionPoly[n];
        REQUIRE((p >> n) == 1u);  // monic, degree n
        CHECK(poly_irreducible(p));
        CHECK(p == smallest_irreducible_poly(n));
    }
}

TEST_CASE("field construction validates degree and irreducibility") {
    CHECK(field_new(3)->reduction_poly() == 0xb);
    CHECK_THROWS_WITH_AS(field_new(1), doctest::Contains("DegreeOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(field_new(25), doctest::Contains("DegreeOutOfRange"), Error);
    // x^4 + x^2 + 1 = (x^2+x+1)^2
    CHECK_THROWS_WITH_AS(field_new(4, 0x15), doctest::Contains("NotIrreducible"), Error);
    CHECK_THROWS_WITH_AS(field_new(4, 0xb), doctest::Contains("DegreeOutOfRange"), Error);
    CHECK(field_new(4, 0x13)->order() == 16);
}

TEST_CASE("multiplication: hand value and schoolbook oracle") {
    auto F = field_new(3);
    // alpha * alpha^2 = alpha^3 = alpha + 1 mod x^3+x+1
    CHECK(F->mul(2, 4) == 3);

    auto G = field_new(16);
    std::mt19937 rng(7);
    for (int it = 0; it < 10000; ++it) {
        Elt a = rng() & 0xffff, b = rng() & 0xffff;
        CHECK(G->mul(a, b) == schoolbook_mul(16, G->reduction_poly(), a, b));
    }
}

TEST_CASE("field axioms: inverses exhaustive, associativity and distributivity sampled") {
    for (int n = 2; n <= 12; ++n) {
        auto F = Field::make(n);
        for (Elt x = 1; x < F->order(); ++x) CHECK(F->mul(x, F->inv(x)) == 1);
        std::mt19937 rng(n);
        for (int it = 0; it < 2000; ++it) {
            Elt a = rng() & (F->order() - 1), b = rng() & (F->order() - 1), c = rng() & (F->order() - 1);
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, b ^ c) == (F->mul(a, b) ^ F->mul(a, c)));
            CHECK(F->mul(a, b) == F->mul(b, a));
        }
    }
    for (int n : {13, 14, 15, 16}) {
        auto F = Field::make(n);
        std::mt19937 rng(n);
        for (int it = 0; it < 100000; ++it) {
            Elt a = rng() & (F->order() - 1), b = rng() & (F->order() - 1), c = rng() & (F->order() - 1);
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, b ^ c) == (F->mul(a, b) ^ F->mul(a, c)));
        }
    }
}

TEST_CASE("pow conventions and Frobenius identity") {
    auto F = field_new(8);
    for (std::uint32_t x = 0; x < F->order(); ++x) CHECK(F->pow(x, F->order()) == x);
    CHECK(F->pow(0, 0) == 1);  // empty product
    CHECK(F->inv(1) == 1);
    CHECK_THROWS_WITH_AS(F->inv(0), doctest::Contains("DivisionByZero"), Error);
    for (std::uint32_t x = 1; x < F->order(); ++x) CHECK(F->pow(x, F->group_order()) == 1);
    // big-integer exponents reduce mod 2^n-1 with the zero special case
    BigInt huge = (BigInt(1) << 200) + 5;
    for (std::uint32_t x = 0; x < F->order(); ++x) {
        std::uint64_t r = static_cast<std::uint64_t>(huge % F->group_order());
        CHECK(F->pow(x, huge) == F->pow(x, r == 0 ? F->group_order() : r));
    }
}

TEST_CASE("trace: balance, additivity, Frobenius invariance") {
    auto F = field_new(8);
    CHECK(F->trace(0) == 0);
    int zeros = 0;
    for (std::uint32_t x = 0; x < F->order(); ++x) zeros += F->trace(x) == 0;
    CHECK(zeros == 128);
    auto F7 = field_new(7);
    CHECK(F7->trace(1) == 1);  // n odd
    std::mt19937 rng(3);
    for (int it = 0; it < 2000; ++it) {
        Elt a = rng() & 0x7f, b = rng() & 0x7f;
        CHECK(F7->trace(a ^ b) == (F7->trace(a) ^ F7->trace(b)));
        CHECK(F7->trace(F7->sqr(a)) == F7->trace(a));
    }
}

TEST_CASE("trace pairing agrees with dual coordinates") {
    auto F = field_new(9);
    std::mt19937 rng(11);
    for (int it = 0; it < 5000; ++it) {
        Elt a = rng() & (F->order() - 1), x = rng() & (F->order() - 1);
        CHECK(F->trace_pair(a, x) == F->trace(F->mul(a, x)));
    }
    const auto& inv = F->dual_inverse_table();
    const auto& M = F->dual_table();
    for (std::uint32_t v = 0; v < F->order(); ++v) CHECK(inv[M[v]] == v);
}

TEST_CASE("relative trace: subfield membership, transitivity, fiber sizes") {
    auto F = field_new(6);
    for (std::uint32_t x = 0; x < F->order(); ++x) {
        Elt y = F->rel_trace(x, 3);
        CHECK(F->pow(y, 8) == y);  // lands in GF(8)
        // transitivity: absolute trace = GF(8)-trace of the relative trace
        Elt t = y ^ F->sqr(y) ^ F->sqr(F->sqr(y));
        CHECK(static_cast<int>(t) == F->trace(x));
        CHECK(F->rel_trace(x, 6) == x);
    }
    CHECK_THROWS_WITH_AS(F->rel_trace(5, 4), doctest::Contains("NotASubfield"), Error);

    auto F12 = field_new(12);
    for (int m : {1, 2, 3, 4, 6}) {
        std::vector<int> fiber(1u << 12, 0);
        for (std::uint32_t x = 0; x < F12->order(); ++x) ++fiber[F12->rel_trace(x, m)];
        int count_nonzero = 0;
        for (std::uint32_t y = 0; y < F12->order(); ++y)
            if (fiber[y]) {
                CHECK(fiber[y] == 1 << (12 - m));
                CHECK(F12->pow(y, 1u << m) == y);
                ++count_nonzero;
            }
        CHECK(count_nonzero == 1 << m);  // onto the subfield
    }
}

TEST_CASE("omega: defining equation, order three, determinism") {
    for (int n : {2, 4, 6, 8, 10, 12}) {
        auto F = Field::make(n);
        Elt w = F->omega();
        CHECK((F->sqr(w) ^ w ^ 1u) == 0);
        CHECK(F->pow(w, 3) == 1);
        CHECK(w != 1);
    }
    // frozen picks (primitivity search in ascending integer order)
    CHECK(field_new(4)->omega() == 6);
    CHECK(field_new(6)->omega() == 59);
    CHECK_THROWS_WITH_AS(field_new(5)->omega(), doctest::Contains("NoGF4Subfield"), Error);
}

TEST_CASE("Frobenius is an additive bijection") {
    auto F = field_new(9);
    std::vector<bool> seen(F->order(), false);
    for (std::uint32_t x = 0; x < F->order(); ++x) {
        Elt y = F->sqr(x);
        CHECK(!seen[y]);
        seen[y] = true;
    }
    std::mt19937 rng(5);
    for (int it = 0; it < 2000; ++it) {
        Elt a = rng() & (F->order() - 1), b = rng() & (F->order() - 1);
        CHECK(F->sqr(a ^ b) == (F->sqr(a) ^ F->sqr(b)));
    }
}

}  // TEST_SUITE
