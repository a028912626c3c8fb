#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "fwcodes/fexpr.hpp"

using namespace fwc;
using namespace fwc::fexpr;
using gf2n::Elt;
using gf2n::Field;

namespace {

// independent evaluator for a sum-of-monomials list, using only pow/mul/add
Elt direct_eval(const Field& K, const std::vector<std::pair<BigInt, Elt>>& terms, Elt x) {
    Elt acc = 0;
    for (const auto& [e, c] : terms) acc ^= K.mul(c, K.pow(x, e));
    return acc;
}

}  // namespace

TEST_SUITE("fexpr") {

TEST_CASE("parser handles the documented syntax") {
    auto F = gf2n::field_new(6);
    auto f = parse("x^13 + x^8 + w*x", F);
    Elt w = F->omega();
    std::vector<std::pair<BigInt, Elt>> terms{{13, 1}, {8, 1}, {1, w}};
    for (std::uint32_t x = 0; x < F->order(); ++x) CHECK(f.eval(x) == direct_eval(*F, terms, x));

    auto mono = f.monomials();
    REQUIRE(mono.has_value());
    CHECK(mono->size() == 3);
    CHECK(mono->at(13) == 1);
    CHECK(mono->at(8) == 1);
    CHECK(mono->at(1) == w);

    auto g = parse("x^(2^4+2) + x^(2^3) + w*x", F);
    for (std::uint32_t x = 0; x < F->order(); ++x)
        CHECK(g.eval(x) == direct_eval(*F, {{18, 1}, {8, 1}, {1, w}}, x));

    // integer arithmetic in exponents is exact
    auto h = parse("x^((2^5+2^3-1)/3)", F);
    CHECK(h.eval(2) == F->pow(2, 13));

    auto F9 = gf2n::field_new(9);
    auto t = parse("tr[9/3](x^(2^3+1)) + x", F9);
    for (std::uint32_t x = 0; x < F9->order(); x += 7)
        CHECK(t.eval(x) == (F9->rel_trace(F9->pow(x, 9), 3) ^ x));

    auto p = parse("(x^(2^1)+x)^5", gf2n::field_new(7));
    CHECK(p.eval(3) != 0);  // shape parses; semantics checked below
}

TEST_CASE("parser rejects malformed input with positions") {
    auto F = gf2n::field_new(6);
    CHECK_THROWS_WITH_AS(parse("x^", F), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse("(x", F), doctest::Contains("position"), Error);
    CHECK_THROWS_WITH_AS(parse("y + x", F), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse("x^(7/2)", F), doctest::Contains("inexact"), Error);
    CHECK_THROWS_WITH_AS(parse("x^(1/0)", F), doctest::Contains("division by zero"), Error);
    CHECK_THROWS_WITH_AS(parse("tr[5/1](x)", F), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse("tr[6/4](x)", F), doctest::Contains("NotASubfield"), Error);
    CHECK_THROWS_WITH_AS(parse("64", F), doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(parse("x x", F), doctest::Contains("trailing"), Error);
    CHECK_THROWS_WITH_AS(parse("tr[6/3](x) * x", F), doctest::Contains("not supported"), Error);
}

TEST_CASE("eval basics") {
    auto F = gf2n::field_new(5);
    auto f = parse("x^2 + x", F);
    CHECK(f.eval(1) == 0);
    CHECK(f.eval(0) == 0);

    // big exponents vanish at zero like any positive power
    auto F9 = gf2n::field_new(9);
    auto t41 = parse("tr[9/3](x^(2^3+1)) + x", F9);
    CHECK(t41.eval(0) == 0);
}

TEST_CASE("value tables match pointwise evaluation") {
    auto F = gf2n::field_new(7);
    auto f = parse("(x^2+x)^(2^2+1) + x^3", F);
    const auto& vt = f.value_table();
    CHECK(vt.size() == F->order());
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        Elt x = rng() & (F->order() - 1);
        CHECK(vt[x] == f.eval(x));
    }
    auto id = parse("x", F);
    const auto& ivt = id.value_table();
    for (std::uint32_t x = 0; x < F->order(); ++x) CHECK(ivt[x] == x);
}

TEST_CASE("monomial expansion is exact where defined") {
    auto F = gf2n::field_new(7);
    // weight-2 power of a binomial: (x^2+x)^5 expands exactly
    auto f = parse("(x^2+x)^5", F);
    auto mono = f.monomials();
    REQUIRE(mono.has_value());
    std::vector<std::pair<BigInt, Elt>> terms;
    for (auto [e, c] : *mono) terms.push_back({e, c});
    for (std::uint32_t x = 0; x < F->order(); ++x) CHECK(f.eval(x) == direct_eval(*F, terms, x));

    // relative-trace expansion
    auto F9 = gf2n::field_new(9);
    auto t = parse("tr[9/3](x^(2^3+1)) + x", F9);
    auto mono2 = t.monomials();
    REQUIRE(mono2.has_value());
    terms.clear();
    for (auto [e, c] : *mono2) terms.push_back({e, c});
    for (std::uint32_t x = 0; x < F9->order(); ++x) CHECK(t.eval(x) == direct_eval(*F9, terms, x));

    // weight-3 power exponent falls back to nothing
    auto k = parse("(x^2+x)^13", F);
    CHECK(!k.monomials().has_value());
}

TEST_CASE("trace tables for fixed multipliers") {
    auto F = gf2n::field_new(6);
    auto f = parse("x^13 + x^8 + w*x", F);
    auto tt = truth_tables(f);
    for (Elt b : {Elt(0), Elt(1), Elt(5), Elt(63)}) {
        auto bits = tt.trace_bits(b);
        REQUIRE(bits.size() == F->order());
        for (std::uint32_t x = 0; x < F->order(); x += 3)
            CHECK(bits[x] == F->trace(F->mul(b, f.eval(x))));
    }
}

TEST_CASE("substitution by any coprime exponent preserves the image multiset") {
    auto F = gf2n::field_new(6);
    auto f = parse("x^13 + x^8 + w*x", F);
    std::vector<int> base(F->order(), 0);
    for (std::uint32_t x = 0; x < F->order(); ++x) ++base[f.eval(x)];
    std::mt19937 rng(41);
    int tried = 0;
    while (tried < 8) {
        std::uint64_t d = 1 + (rng() % 1000);
        if (std::gcd(d, F->group_order()) != 1) continue;
        ++tried;
        auto g = quadratize(f, BigInt(d));
        std::vector<int> hist(F->order(), 0);
        for (std::uint32_t x = 0; x < F->order(); ++x) ++hist[g.eval(x)];
        CHECK(hist == base);
    }
}

TEST_CASE("defining-set size equals distinct images minus zero membership") {
    std::mt19937 rng(77);
    for (int n : {4, 6, 9}) {
        auto F = gf2n::field_new(n);
        for (int it = 0; it < 6; ++it) {
            std::vector<FuncExpr> terms;
            for (int t = 0; t < 3; ++t)
                terms.push_back(FuncExpr::monomial(F, 1 + (rng() % (F->order() - 1)), rng() % F->order()));
            auto f = FuncExpr::sum(terms);
            std::set<Elt> images;
            for (std::uint32_t x = 0; x < F->order(); ++x) images.insert(f.eval(x));
            auto D = defining_set(f);
            CHECK(D.elements.size() == images.size() - images.count(0));
        }
    }
}

TEST_CASE("two-to-one verdicts") {
    for (int n : {5, 8}) {
        auto F = gf2n::field_new(n);
        CHECK(is_two_to_one(parse("x^2 + x", F)).two_to_one);
    }
    auto F4 = gf2n::field_new(4);
    auto v = is_two_to_one(parse("x^3", F4));
    CHECK(!v.two_to_one);
    CHECK(v.witness == 0);  // fiber of 0 is {0}, size 1, found first in ascending order
    CHECK(v.fiber_size == 1);
}

TEST_CASE("defining sets") {
    auto F7 = gf2n::field_new(7);
    auto f = parse("x^2 + x", F7);
    auto D = defining_set(f);
    CHECK(D.is_defining_set);
    CHECK(D.elements.size() == 63);
    CHECK(std::is_sorted(D.elements.begin(), D.elements.end()));

    auto F3 = gf2n::field_new(3);
    auto id3 = parse("x", F3);
    CHECK(defining_set(id3).elements.size() == 7);

    auto g = parse("x^2 + x", F3);
    auto Dg = defining_set(g);
    CHECK(Dg.elements.size() == 3);
    for (Elt d : Dg.elements) CHECK(F3->trace(d) == 0);  // image is the trace-zero hyperplane
}

TEST_CASE("power substitution rewrites exponents and preserves the image") {
    auto F = gf2n::field_new(6);
    Elt w = F->omega();
    auto f = FuncExpr::sum({FuncExpr::monomial(F, 1, 13), FuncExpr::monomial(F, 1, 8), FuncExpr::monomial(F, w, 1)});
    auto g = quadratize(f, 34);  // 2^5 + 2
    CHECK(is_quadratic(g));
    auto mono = g.monomials();
    REQUIRE(mono.has_value());
    for (auto [e, c] : *mono) CHECK(std::popcount(e) <= 2);

    // x -> x^34 is a bijection, so the value multiset is preserved
    std::vector<int> histf(F->order(), 0), histg(F->order(), 0);
    for (std::uint32_t x = 0; x < F->order(); ++x) {
        ++histf[f.eval(x)];
        ++histg[g.eval(x)];
    }
    CHECK(histf == histg);

    CHECK_THROWS_WITH_AS(quadratize(f, 3), doctest::Contains("NotCoprime"), Error);  // gcd(3,63) = 3
    auto same = quadratize(f, 1);
    for (std::uint32_t x = 0; x < F->order(); ++x) CHECK(same.eval(x) == f.eval(x));
}

TEST_CASE("quadratic classification") {
    auto F5 = gf2n::field_new(5);
    CHECK(is_quadratic(parse("x^(2^2+1)", F5)));
    CHECK(!is_quadratic(parse("x^7", F5)));
    CHECK(algebraic_degree(parse("x^7", F5)) == 3);

    auto F9 = gf2n::field_new(9);
    CHECK(is_quadratic(parse("x^(2^7+1) + x^(2^4+1) + x^4 + x^3", F9)));

    // Kasami-composed function has algebraic degree 3: the ANF fallback decides
    auto F7 = gf2n::field_new(7);
    auto kas = parse("(x^2+x)^13", F7);
    CHECK(!is_quadratic(kas));
    CHECK(algebraic_degree(kas) == 3);

    // exponent normalization: x^9 over GF(8) is x^2
    auto F3 = gf2n::field_new(3);
    CHECK(is_quadratic(parse("x^9", F3)));
}

TEST_CASE("value table respects the size cap") {
    auto F = gf2n::field_new(12);
    auto f = parse("x^3", F);
    CHECK_THROWS_WITH_AS(f.value_table(10), doctest::Contains("SizeCapExceeded"), Error);
    CHECK(f.value_table(12).size() == 4096);
}

}  // TEST_SUITE
