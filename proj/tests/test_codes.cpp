#include <doctest.h>

#include <bit>

#include "fwcodes/catalog.hpp"

using namespace fwc;
using namespace fwc::codes;
using catalog::FamilyId;
using catalog::Params;

namespace {

Params PM(int m) { return Params{{}, m, {}, {}, {}}; }
Params PKM(int k, int m) { return Params{{}, m, k, {}, {}}; }

WeightDistribution wd_from(std::uint32_t length, std::uint64_t total,
                           std::initializer_list<std::pair<std::uint32_t, std::uint64_t>> es) {
    WeightDistribution wd;
    wd.length = length;
    wd.total = total;
    for (auto [w, c] : es) wd.entries[w] = c;
    return wd;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("dimensions via K1/K2") {
    auto d1 = dims(catalog::build(FamilyId::L31, PM(3)));
    CHECK(d1.dim_cf == 12);
    CHECK(d1.dim_cdf == 6);
    CHECK(d1.dk1 == 0);
    CHECK(d1.dk2 == 0);

    auto d2 = dims(catalog::build(FamilyId::L32_2, PM(3)));
    CHECK(d2.dim_cf == 13);
    CHECK(d2.dim_cdf == 6);
    CHECK(d2.dk1 == 1);
    CHECK(d2.dk2 == 1);

    auto d3 = dims(catalog::build(FamilyId::L33_1, PM(3)));
    CHECK(d3.dim_cf == 15);  // 5m
    CHECK(d3.dk1 == 3);
}

TEST_CASE("weight distributions from spectra: frozen desk-scale values") {
    auto wd1 = wd_cf(catalog::build(FamilyId::L31, PM(3)));
    CHECK(wd1 == wd_from(63, 4096, {{0, 1}, {24, 630}, {32, 3087}, {40, 378}}));
    CHECK(wd1.nonzero_weight_count() == 3);

    auto wd2 = wd_cf(catalog::build(FamilyId::L32_1, PM(3)));
    CHECK(wd2 == wd_from(127, 16384, {{0, 1}, {56, 4572}, {64, 8255}, {72, 3556}}));

    auto wd3 = wd_cdf(catalog::build(FamilyId::L32_2, PM(3)));
    CHECK(wd3 == wd_from(63, 64, {{0, 1}, {32, 63}}));
    CHECK(wd3.nonzero_weight_count() == 1);

    auto wd4 = wd_cdf(catalog::build(FamilyId::L32_1, PM(3)));
    CHECK(wd4 == wd_from(63, 128, {{0, 1}, {28, 36}, {32, 63}, {36, 28}}));

    auto wd5 = wd_cdf(catalog::build(FamilyId::T42, PM(3)));
    CHECK(wd5 == wd_from(255, 512, {{0, 1}, {64, 3}, {128, 507}, {192, 1}}));
}

TEST_CASE("wd translation rejects malformed spectra") {
    walsh::WalshSpectrum s;
    s.kind = walsh::SpectrumKind::FullGrid;
    s.n = 3;
    s.counts[8] = 1;
    s.counts[3] = 63;  // odd Walsh value cannot happen
    CHECK_THROWS_WITH_AS(wd_cf(s), doctest::Contains("DivisibilityBreach"), Error);

    walsh::WalshSpectrum t;
    t.kind = walsh::SpectrumKind::FullGrid;
    t.n = 3;
    t.counts[8] = 2;  // |K1| = 2
    t.counts[0] = 33; // not divisible by 2
    t.counts[4] = 29;
    CHECK_THROWS_WITH_AS(wd_cf(t), doctest::Contains("DivisibilityBreach"), Error);

    CHECK_THROWS_WITH_AS(wd_cdf(s), doctest::Contains("BadLength"), Error);
}

TEST_CASE("wd_cdf demands a two-to-one function with f(0) = 0") {
    auto F = gf2n::field_new(4);
    CHECK_THROWS_WITH_AS(wd_cdf(fexpr::parse("x^3", F)), doctest::Contains("NotTwoToOne"), Error);
    auto F5 = gf2n::field_new(5);
    CHECK_THROWS_WITH_AS(wd_cdf(fexpr::parse("x^2 + x + 1", F5)), doctest::Contains("NotTwoToOne"), Error);
}

TEST_CASE("brute-force enumeration equals the spectrum route") {
    for (auto [id, p] : {std::pair{FamilyId::L31, PM(3)}, {FamilyId::L32_1, PM(2)}, {FamilyId::T42, PM(1)}}) {
        auto f = catalog::build(id, p);
        auto spec = wd_cf(f);
        auto bf = wd_bruteforce_cf(f);
        CHECK(spec == bf);
        CHECK(spec.total == bf.total);
        CHECK(std::has_single_bit(bf.total));
    }
    auto f = catalog::build(FamilyId::T41, PKM(3, 3));
    auto spec = wd_cdf(f);
    auto bf = wd_bruteforce_cdf(f);
    CHECK(spec == bf);
    CHECK(bf.total == 512);
    CHECK_THROWS_WITH_AS(wd_bruteforce_cf(catalog::build(FamilyId::L33_1, PM(3))),
                         doctest::Contains("SizeCapExceeded"), Error);
}

TEST_CASE("power-moment systems solve exactly") {
    auto a = pless_solve_3({28, 32, 36}, 63, 7);
    CHECK(a[0] == 36);
    CHECK(a[1] == 63);
    CHECK(a[2] == 28);

    auto b = pless_solve_3({12, 16, 20}, 31, 6);
    CHECK(b[0] == 10);
    CHECK(b[1] == 47);
    CHECK(b[2] == 6);

    CHECK_THROWS_WITH_AS(pless_solve_3({16, 16, 20}, 31, 6), doctest::Contains("SingularSystem"), Error);
    CHECK_THROWS_WITH_AS(pless_solve_3({1, 2, 3}, 63, 7), doctest::Contains("NonIntegralSolution"), Error);

    auto x = spectrum_moments_solve({-16, 0, 16}, 7, 0);
    CHECK(x[0] == 3556);
    CHECK(x[1] == 8255);
    CHECK(x[2] == 4572);

    auto y = spectrum_moments_solve({-16, 0, 16}, 6, 0);
    CHECK(y[0] == 378);
    CHECK(y[1] == 3087);
    CHECK(y[2] == 630);

    CHECK_THROWS_WITH_AS(spectrum_moments_solve({4, 4, 8}, 5, 0), doctest::Contains("SingularSystem"), Error);
}

TEST_CASE("Pless solver reproduces every three-weight defining-set table") {
    using catalog::TableId;
    struct Row {
        TableId table;
        Params p;
        int n;
    };
    std::vector<Row> rows;
    for (int m : {3, 5}) rows.push_back({TableId::T2, PM(m), 2 * m});
    for (int m : {1, 2, 3, 4, 5}) rows.push_back({TableId::T4, PM(m), 2 * m + 1});
    for (auto [k, m] : {std::pair{3, 3}, {3, 5}, {5, 3}, {5, 5}}) rows.push_back({TableId::T8, PKM(k, m), k * m});
    for (int m : {3, 5, 7}) rows.push_back({TableId::T44D, PM(m), 3 * m});
    for (int n : {3, 5, 7, 9, 11}) rows.push_back({TableId::T52, Params{n, {}, {}, {}, {}}, n});
    for (const Row& r : rows) {
        auto wd = catalog::expected_wd(r.table, r.p);
        std::array<std::uint32_t, 3> w{};
        std::array<std::uint64_t, 3> mult{};
        int i = 0;
        for (auto [weight, count] : wd.entries)
            if (weight != 0) {
                w[i] = weight;
                mult[i] = count;
                ++i;
            }
        REQUIRE(i == 3);
        auto sol = pless_solve_3(w, wd.length, r.n);
        for (int j = 0; j < 3; ++j) CHECK(sol[j] == mult[j]);
    }
}

TEST_CASE("sphere-packing equality check") {
    CHECK(sphere_packing_check(63, 57, 3));
    CHECK(!sphere_packing_check(63, 56, 3));
    CHECK(sphere_packing_check(7, 4, 3));
    CHECK(sphere_packing_check(23, 12, 7));  // the classic perfect binary code
}

TEST_CASE("dual analysis: frozen distances at desk scale") {
    // three-weight family: weight-3 dual words exist on both sides
    auto f1 = catalog::build(FamilyId::L31, PM(3));
    auto r1 = dual_analysis(f1, CodeKind::Cf);
    REQUIRE(r1.dmin.has_value());
    CHECK(*r1.dmin == 3);
    CHECK(r1.weight3_witness.has_value());
    auto r1d = dual_analysis(f1, CodeKind::CDf);
    CHECK(*r1d.dmin == 3);

    // the first quadrinomial family has dual distance 5 on the C_f side
    auto f2 = catalog::build(FamilyId::L32_1, PM(2));
    auto r2 = dual_analysis(f2, CodeKind::Cf);
    REQUIRE(r2.dmin.has_value());
    CHECK(*r2.dmin == 5);
    REQUIRE(r2.oracle_dmin.has_value());  // null-space enumeration is in range at n=5
    CHECK(*r2.oracle_dmin == 5);

    auto f3 = catalog::build(FamilyId::L32_1, PM(3));
    auto r3 = dual_analysis(f3, CodeKind::Cf);
    REQUIRE(r3.dmin.has_value());
    CHECK(*r3.dmin == 5);  // found by the dependency ladder

    // Hamming dual of a one-weight defining-set code
    auto f4 = catalog::build(FamilyId::L32_2, PM(2));
    auto r4 = dual_analysis(f4, CodeKind::CDf);
    CHECK(r4.code_dim == 4);
    CHECK(r4.dual_dim == 11);
    CHECK(*r4.dmin == 3);
    CHECK(r4.sphere_packing_equality);
}

TEST_CASE("dual analysis: boundary cases on GF(2^3)") {
    // [7,6] code whose dual is the even-weight word: distance 7, outside the
    // generic [3,6] window (the packing argument is void at n = 3)
    auto f = catalog::build(FamilyId::L32_1, PM(1));
    auto r = dual_analysis(f, CodeKind::Cf);
    REQUIRE(r.dmin.has_value());
    CHECK(*r.dmin == 7);
    REQUIRE(r.oracle_dmin.has_value());
    CHECK(*r.oracle_dmin == 7);

    // [3,3] defining-set code: the dual is zero-dimensional
    auto g = catalog::build(FamilyId::L33_2, PM(1));
    auto rg = dual_analysis(g, CodeKind::CDf);
    CHECK(rg.dual_dim == 0);
    CHECK(!rg.has_dual_words);

    // [3,2] defining-set code: dual is the repetition code, a perfect one
    auto h = catalog::build(FamilyId::L32_2, PM(1));
    auto rh = dual_analysis(h, CodeKind::CDf);
    CHECK(rh.dual_dim == 1);
    CHECK(*rh.dmin == 3);
    CHECK(rh.sphere_packing_equality);
}

TEST_CASE("dual analysis reports an interval when the oracle is out of range") {
    // n = 11: length 2047 exceeds the oracle cap; no weight-3 word exists for
    // this family, so only the packing bracket [4,6] can be reported
    auto f = catalog::build(FamilyId::L32_1, PM(5));
    auto r = dual_analysis(f, CodeKind::Cf);
    CHECK(!r.dmin.has_value());
    CHECK(!r.oracle_dmin.has_value());
    CHECK(r.dmin_lo == 4);
    CHECK(r.dmin_hi == 6);
}

TEST_CASE("dual analysis brackets from 3 when the pair scan is out of its work cap") {
    // n = 17: the defining set has 2^16 - 1 elements, past the quadratic-scan cap
    auto F = gf2n::field_new(17);
    auto f = fexpr::parse("x^2 + x", F);
    auto r = dual_analysis(f, CodeKind::CDf);
    CHECK(!r.dmin.has_value());
    CHECK(r.dmin_lo == 3);
    CHECK(r.dmin_hi == 4);
}

TEST_CASE("analyze_code produces a coherent report") {
    auto f = catalog::build(FamilyId::L31, PM(3));
    auto rep = analyze_code(f, CodeKind::Cf, {}, 0, true, true);
    CHECK(rep.length == 63);
    CHECK(rep.dimension == 12);
    CHECK(rep.two_to_one);
    CHECK(rep.t_weights == 3);
    CHECK(rep.pass());
    auto repd = analyze_code(f, CodeKind::CDf, {}, 0, true, true);
    CHECK(repd.length == 31);
    CHECK(repd.dimension == 6);
    CHECK(repd.pass());
}

}  // TEST_SUITE
