#include <doctest.h>

#include <bit>
#include <random>

#include "fwcodes/catalog.hpp"
#include "fwcodes/walsh.hpp"

using namespace fwc;
using namespace fwc::walsh;
using fexpr::parse;
using gf2n::Elt;

TEST_SUITE("walsh") {

TEST_CASE("fwht basics and the naive-summation oracle") {
    std::vector<std::int64_t> ones(16, 1);
    fwht(ones);
    CHECK(ones[0] == 16);
    for (int i = 1; i < 16; ++i) CHECK(ones[i] == 0);

    std::vector<std::int64_t> bad(3, 1);
    CHECK_THROWS_WITH_AS(fwht(bad), doctest::Contains("BadLength"), Error);

    std::mt19937 rng(23);
    const int n = 8;
    std::vector<std::int64_t> v(1 << n);
    for (auto& x : v) x = (rng() & 1) ? 1 : -1;
    auto w = v;
    fwht(w);
    // involution up to scale
    auto ww = w;
    fwht(ww);
    for (int i = 0; i < (1 << n); ++i) CHECK(ww[i] == v[i] << n);
    // naive O(4^n) double loop
    for (int a = 0; a < (1 << n); ++a) {
        std::int64_t s = 0;
        for (int x = 0; x < (1 << n); ++x) s += v[x] * (std::popcount(unsigned(a & x)) & 1 ? -1 : 1);
        CHECK(w[a] == s);
    }
}

TEST_CASE("spectrum_full counts: frozen values and grid size") {
    auto F = gf2n::field_new(7);
    auto f = parse("x^(2^4+2) + x^(2^4) + x^2 + x", F);  // the n=7 member of the first quadrinomial family
    auto s = spectrum_full(f);
    CHECK(s.total() == 1u << 14);
    CHECK(s.count_of(128) == 1);
    CHECK(s.count_of(16) == 4572);
    CHECK(s.count_of(0) == 8255);
    CHECK(s.count_of(-16) == 3556);
    CHECK(s.k_dimension() == 0);
}

TEST_CASE("rows agree with the naive transform and Parseval holds") {
    auto F = gf2n::field_new(6);
    auto f = parse("x^13 + x^8 + w*x", F);
    std::mt19937 rng(5);
    for (int it = 0; it < 12; ++it) {
        Elt b = rng() & (F->order() - 1);
        auto row = walsh_row(f, b);
        std::int64_t parseval = 0;
        for (Elt a = 0; a < F->order(); ++a) {
            parseval += row[a] * row[a];
            if (it < 4 || a % 17 == 0) CHECK(row[a] == walsh_value_naive(f, a, b));
        }
        CHECK(parseval == std::int64_t(1) << 12);
    }
}

TEST_CASE("b-slice equals the a=0 column of the full grid") {
    auto F = gf2n::field_new(6);
    auto f = parse("x^13 + x^8 + w*x", F);
    auto vals = b_slice_values(f);
    std::map<std::int64_t, std::uint64_t> hist;
    for (Elt b = 0; b < F->order(); ++b) {
        CHECK(vals[b] == walsh_row(f, b)[0]);
        ++hist[vals[b]];
    }
    auto slice = spectrum_b_slice(f);
    CHECK(slice.counts == hist);
    CHECK(slice.count_of(64) == 1);  // b = 0 contributes 2^n
    CHECK(slice.total() == 64);
}

TEST_CASE("Gold composite slice values stay in the three-valued set") {
    auto F = gf2n::field_new(5);
    auto f = parse("(x^2+x)^3", F);
    auto s = spectrum_b_slice(f);
    for (auto [v, c] : s.counts) CHECK((v == 0 || v == 8 || v == -8 || v == 32));
}

TEST_CASE("k_dimension rejects non-power-of-two counts") {
    WalshSpectrum s;
    s.kind = SpectrumKind::BSlice;
    s.n = 3;
    s.counts[8] = 3;
    CHECK_THROWS_WITH_AS(s.k_dimension(), doctest::Contains("NonPowerOfTwoCount"), Error);
}

TEST_CASE("quadratic kernels: dimensions, exhaustive membership, closure") {
    auto F = gf2n::field_new(5);
    auto gold = parse("x^3", F);
    auto k0 = quad_kernel(gold, 0);
    CHECK(k0.dim == 5);  // zero form

    auto k1 = quad_kernel(gold, 1);
    CHECK(k1.dim == 1);
    CHECK(quad_rank(gold, 1) == 4);
    CHECK(quad_rank(gold, 0) == 0);

    // exhaustive membership oracle: y in V_phi iff B(x,y) = 0 for every x
    auto phi = [&](Elt x) { return F->trace(F->mul(1, gold.eval(x))); };
    auto in_kernel = [&](Elt y) {
        for (Elt x = 0; x < F->order(); ++x)
            if ((phi(x ^ y) ^ phi(x) ^ phi(y)) != 0) return false;
        return true;
    };
    int members = 0;
    for (Elt y = 0; y < F->order(); ++y) members += in_kernel(y);
    CHECK(members == 1 << k1.dim);
    for (Elt y : k1.basis) CHECK(in_kernel(y));

    // closure under addition, spot-checked on random pairs of basis sums
    auto F9 = gf2n::field_new(9);
    auto f9 = parse("x^(2^7+1) + x^(2^4+1) + x^4 + x^3", F9);
    std::mt19937 rng(9);
    for (int it = 0; it < 20; ++it) {
        Elt b = 1 + (rng() % (F9->order() - 1));
        auto k = quad_kernel(f9, b);
        auto phib = [&](Elt x) { return F9->trace(F9->mul(b, f9.eval(x))); };
        for (std::size_t i = 0; i < k.basis.size(); ++i)
            for (std::size_t j = i + 1; j < k.basis.size(); ++j) {
                Elt y = k.basis[i] ^ k.basis[j];
                for (int probe = 0; probe < 8; ++probe) {
                    Elt x = rng() & (F9->order() - 1);
                    CHECK((phib(x ^ y) ^ phib(x) ^ phib(y)) == 0);
                }
            }
        CHECK((9 - k.dim) % 2 == 0);  // alternating form has even rank
    }

    CHECK_THROWS_WITH_AS(quad_kernel(parse("x^7", F), 1), doctest::Contains("NotQuadratic"), Error);
}

TEST_CASE("spectra of random functions match the naive transform, nonzero constant terms included") {
    std::mt19937 rng(31);
    auto F = gf2n::field_new(5);
    for (int it = 0; it < 4; ++it) {
        std::vector<fexpr::FuncExpr> terms;
        terms.push_back(fexpr::FuncExpr::constant(F, 1 + (rng() % 31)));  // f(0) != 0 on purpose
        for (int t = 0; t < 3; ++t)
            terms.push_back(fexpr::FuncExpr::monomial(F, rng() % 32, rng() % 64));
        auto f = fexpr::FuncExpr::sum(terms);
        std::map<std::int64_t, std::uint64_t> naive;
        for (Elt a = 0; a < 32; ++a)
            for (Elt b = 0; b < 32; ++b) ++naive[walsh_value_naive(f, a, b)];
        CHECK(spectrum_full(f).counts == naive);
        std::map<std::int64_t, std::uint64_t> nslice;
        for (Elt b = 0; b < 32; ++b) ++nslice[walsh_value_naive(f, 0, b)];
        CHECK(spectrum_b_slice(f).counts == nslice);
    }
}

TEST_CASE("Parseval holds on every b-row for catalog functions") {
    using catalog::FamilyId;
    using catalog::Params;
    for (auto [id, p] : {std::pair{FamilyId::L32_2, Params{{}, 2, {}, {}, {}}},
                         {FamilyId::L33_2, Params{{}, 2, {}, {}, {}}},
                         {FamilyId::T42, Params{{}, 3, {}, {}, {}}}}) {
        auto f = catalog::build(id, p);
        const int n = f.field()->n();
        for (Elt b = 0; b < f.field()->order(); ++b) {
            auto row = walsh_row(f, b);
            std::int64_t sum = 0;
            for (auto v : row) sum += v * v;
            CHECK(sum == std::int64_t(1) << (2 * n));
        }
    }
}

TEST_CASE("caps are enforced") {
    auto F = gf2n::field_new(5);
    auto f = parse("x^3", F);
    Caps tight{4, 22};
    CHECK_THROWS_WITH_AS(spectrum_full(f, tight), doctest::Contains("SizeCapExceeded"), Error);
    Caps tight2{16, 4};
    CHECK_THROWS_WITH_AS(spectrum_b_slice(f, tight2), doctest::Contains("SizeCapExceeded"), Error);
}

}  // TEST_SUITE
