#include "fwcodes/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace fwc::catalog {

using fexpr::FuncExpr;
using gf2n::Field;

namespace {

[[noreturn]] void violated(const std::string& cond) { fail(Err::ConstraintViolation, cond); }

int need(const std::optional<int>& v, const char* name) {
    if (!v) violated(std::string("missing parameter ") + name);
    return *v;
}

std::uint64_t pw2(int e) { return std::uint64_t(1) << e; }

BigInt big2(int e) { return BigInt(1) << e; }

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

FuncExpr polynomial(const FieldPtr& F, const std::vector<BigInt>& exponents) {
    std::vector<FuncExpr> terms;
    for (const auto& e : exponents) terms.push_back(FuncExpr::monomial(F, 1, e));
    return FuncExpr::sum(std::move(terms));
}

}  // namespace

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::L31: return "L31";
        case FamilyId::L32_1: return "L32_1";
        case FamilyId::L32_2: return "L32_2";
        case FamilyId::L32_3: return "L32_3";
        case FamilyId::L32_4: return "L32_4";
        case FamilyId::L33_1: return "L33_1";
        case FamilyId::L33_2: return "L33_2";
        case FamilyId::T41: return "T41";
        case FamilyId::T42: return "T42";
        case FamilyId::T53_GOLD: return "T53_GOLD";
        case FamilyId::AB_GOLD: return "AB_GOLD";
        case FamilyId::AB_KASAMI: return "AB_KASAMI";
        case FamilyId::AB_WELCH: return "AB_WELCH";
        case FamilyId::AB_NIHO1: return "AB_NIHO1";
        case FamilyId::AB_NIHO2: return "AB_NIHO2";
        case FamilyId::CONJ1: return "CONJ1";
    }
    return "?";
}

std::vector<FamilyId> all_families() {
    return {FamilyId::L31,      FamilyId::L32_1,    FamilyId::L32_2,  FamilyId::L32_3,
            FamilyId::L32_4,    FamilyId::L33_1,    FamilyId::L33_2,  FamilyId::T41,
            FamilyId::T42,      FamilyId::T53_GOLD, FamilyId::AB_GOLD, FamilyId::AB_KASAMI,
            FamilyId::AB_WELCH, FamilyId::AB_NIHO1, FamilyId::AB_NIHO2, FamilyId::CONJ1};
}

std::optional<FamilyId> family_from_string(const std::string& s) {
    for (FamilyId id : all_families())
        if (s == family_name(id)) return id;
    return std::nullopt;
}

std::string Params::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* nm, const std::optional<int>& v) {
        if (!v) return;
        if (!first) os << ",";
        first = false;
        os << nm << "=" << *v;
    };
    put("n", n);
    put("m", m);
    put("k", k);
    put("t", t);
    put("i", i);
    return os.str();
}

int field_degree(FamilyId id, const Params& p) {
    switch (id) {
        case FamilyId::L31:
            return 2 * need(p.m, "m");
        case FamilyId::L32_1:
        case FamilyId::L32_2:
        case FamilyId::L32_3:
        case FamilyId::L32_4:
        case FamilyId::CONJ1:
            return 2 * need(p.m, "m") + 1;
        case FamilyId::L33_1:
        case FamilyId::L33_2:
        case FamilyId::T42:
            return 3 * need(p.m, "m");
        case FamilyId::T41:
            return need(p.k, "k") * need(p.m, "m");
        default:
            return need(p.n, "n");
    }
}

BigInt ab_exponent(FamilyId id, const Params& p) {
    const int n = need(p.n, "n");
    const int m = (n - 1) / 2;
    switch (id) {
        case FamilyId::T53_GOLD:
        case FamilyId::AB_GOLD:
            return big2(need(p.i, "i")) + 1;
        case FamilyId::AB_KASAMI:
            return big2(2 * need(p.i, "i")) - big2(need(p.i, "i")) + 1;
        case FamilyId::AB_WELCH:
            return big2(m) + 3;
        case FamilyId::AB_NIHO1:
            if (m % 2 != 0) violated("Niho-1 needs m = (n-1)/2 even");
            return big2(m) + big2(m / 2) - 1;
        case FamilyId::AB_NIHO2:
            if (m % 2 != 1) violated("Niho-2 needs m = (n-1)/2 odd");
            return big2(m) + big2((3 * m + 1) / 2) - 1;
        default:
            violated("not a power-composite family");
    }
}

FuncExpr build(FamilyId id, const Params& p) {
    switch (id) {
        case FamilyId::L31: {
            const int m = need(p.m, "m");
            if (m <= 1 || m % 2 == 0) violated("L31 needs m odd and m > 1");
            const int n = 2 * m;
            auto F = Field::make(n);
            BigInt e = (big2(n - 1) + big2(m) - 1) / 3;
            return FuncExpr::sum({FuncExpr::monomial(F, 1, e), FuncExpr::monomial(F, 1, big2(m)),
                                  FuncExpr::monomial(F, F->omega(), 1)});
        }
        case FamilyId::L32_1:
        case FamilyId::L32_2:
        case FamilyId::L32_3:
        case FamilyId::L32_4: {
            const int m = need(p.m, "m");
            if (m < 1) violated("needs m >= 1");
            const int n = 2 * m + 1;
            auto F = Field::make(n);
            switch (id) {
                case FamilyId::L32_1: return polynomial(F, {big2(m + 1) + 2, big2(m + 1), 2, 1});
                case FamilyId::L32_2: return polynomial(F, {big2(m + 1) + 2, big2(m + 1) + 1, 2, 1});
                case FamilyId::L32_3: return polynomial(F, {big2(m + 2) + 4, big2(m + 1) + 2, 2, 1});
                default: return polynomial(F, {big2(n) - big2(m + 1) + 2, big2(m + 1), 2, 1});
            }
        }
        case FamilyId::L33_1: {
            const int m = need(p.m, "m");
            if (m % 3 == 1) violated("L33_1 needs m != 1 (mod 3)");
            if (m < 2) violated("L33_1 needs m >= 2");
            auto F = Field::make(3 * m);
            return polynomial(F, {big2(2 * m) + 1, big2(m + 1), big2(m) + 1, 1});
        }
        case FamilyId::L33_2: {
            const int m = need(p.m, "m");
            if (m < 1) violated("needs m >= 1");
            auto F = Field::make(3 * m);
            return polynomial(F, {big2(2 * m) + big2(m), big2(2 * m) + 1, big2(m) + 1, 1});
        }
        case FamilyId::T41: {
            const int k = need(p.k, "k"), m = need(p.m, "m");
            if (k < 3 || k % 2 == 0) violated("T41 needs k >= 3 odd");
            if (m < 1 || m % 2 == 0) violated("T41 needs m odd");
            auto F = Field::make(k * m);
            return FuncExpr::sum({FuncExpr::rel_trace(FuncExpr::monomial(F, 1, big2(m) + 1), m), FuncExpr::x(F)});
        }
        case FamilyId::T42: {
            const int m = need(p.m, "m");
            if (m % 2 == 0) violated("T42 needs m odd");
            auto F = Field::make(3 * m);
            return polynomial(F, {big2(2 * m + 1) + 1, big2(m + 1) + 1, 4, 3});
        }
        case FamilyId::CONJ1: {
            const int m = need(p.m, "m");
            if (m < 1) violated("needs m >= 1");
            auto F = Field::make(2 * m + 1);
            return polynomial(F, {3 * big2(m + 1), big2(m + 2) + 1, big2(m + 1) + 1, 1});
        }
        default: {
            const int n = need(p.n, "n");
            if (n % 2 == 0) violated("power-composite families need n odd");
            const int t = p.t.value_or(1);
            if (!coprime(t, n)) violated("needs gcd(t, n) = 1");
            if (id == FamilyId::T53_GOLD || id == FamilyId::AB_GOLD || id == FamilyId::AB_KASAMI)
                if (!coprime(need(p.i, "i"), n)) violated("needs gcd(i, n) = 1");
            auto F = Field::make(n);
            BigInt e = ab_exponent(id, p);
            BigInt eg = boost::multiprecision::gcd(BigInt(e % F->group_order()), BigInt(F->group_order()));
            if (eg != 1) violated("needs gcd(e, 2^n - 1) = 1");
            auto psi = FuncExpr::sum({FuncExpr::monomial(F, 1, big2(t)), FuncExpr::x(F)});
            return FuncExpr::power(psi, e);
        }
    }
}

std::optional<BigInt> quadratizing_exponent(FamilyId id, const Params& p) {
    if (id != FamilyId::L31) return std::nullopt;
    return big2(need(p.m, "m") + 2) + 2;
}

std::vector<Params> smallest_params(FamilyId id) {
    auto P = [](std::optional<int> n, std::optional<int> m, std::optional<int> k, std::optional<int> t,
                std::optional<int> i) { return Params{n, m, k, t, i}; };
    const auto none = std::nullopt;
    switch (id) {
        case FamilyId::L31: return {P(none, 3, none, none, none), P(none, 5, none, none, none)};
        case FamilyId::L32_1:
        case FamilyId::L32_2:
        case FamilyId::L32_3:
        case FamilyId::L32_4: return {P(none, 1, none, none, none), P(none, 2, none, none, none)};
        case FamilyId::L33_1: return {P(none, 2, none, none, none), P(none, 3, none, none, none)};
        case FamilyId::L33_2: return {P(none, 1, none, none, none), P(none, 2, none, none, none)};
        case FamilyId::T41: return {P(none, 1, 3, none, none), P(none, 1, 5, none, none)};
        case FamilyId::T42: return {P(none, 1, none, none, none), P(none, 3, none, none, none)};
        case FamilyId::T53_GOLD:
        case FamilyId::AB_GOLD:
        case FamilyId::AB_KASAMI: return {P(3, none, none, 1, 1), P(5, none, none, 1, 1)};
        case FamilyId::AB_WELCH: return {P(3, none, none, 1, none), P(5, none, none, 1, none)};
        case FamilyId::AB_NIHO1: return {P(5, none, none, 1, none), P(9, none, none, 1, none)};
        case FamilyId::AB_NIHO2: return {P(3, none, none, 1, none), P(7, none, none, 1, none)};
        case FamilyId::CONJ1: return {P(none, 3, none, none, none), P(none, 4, none, none, none)};
    }
    return {};
}

const char* table_name(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3: return "T3";
        case TableId::T4: return "T4";
        case TableId::T5: return "T5";
        case TableId::T6: return "T6";
        case TableId::T7: return "T7";
        case TableId::T8: return "T8";
        case TableId::T44D: return "T44D";
        case TableId::T52: return "T52";
    }
    return "?";
}

namespace {

WeightDistribution three_weight(std::uint32_t length, std::uint64_t total, std::uint32_t w1, std::uint64_t a1,
                                std::uint32_t w2, std::uint64_t a2, std::uint32_t w3, std::uint64_t a3) {
    WeightDistribution wd;
    wd.length = length;
    wd.total = total;
    wd.entries[0] = 1;
    wd.entries[w1] += a1;
    wd.entries[w2] += a2;
    wd.entries[w3] += a3;
    wd.validate();
    return wd;
}

}  // namespace

WeightDistribution expected_wd(TableId id, const Params& p) {
    switch (id) {
        case TableId::T1: {
            const int m = need(p.m, "m");
            if (m < 3 || m % 2 == 0) violated("T1 needs m odd >= 3");
            const int n = 2 * m;
            return three_weight(pw2(n) - 1, pw2(2 * n),
                                pw2(n - 1) - pw2(m), pw2(4 * m - 3) + pw2(3 * m - 2) - pw2(2 * m - 3) - pw2(m - 2),
                                pw2(n - 1), 3 * pw2(4 * m - 2) + pw2(2 * m - 2) - 1,
                                pw2(n - 1) + pw2(m), pw2(4 * m - 3) + pw2(m - 2) - pw2(3 * m - 2) - pw2(2 * m - 3));
        }
        case TableId::T2: {
            const int m = need(p.m, "m");
            if (m < 3 || m % 2 == 0) violated("T2 needs m odd >= 3");
            const int n = 2 * m;
            return three_weight(pw2(n - 1) - 1, pw2(n),
                                pw2(n - 2) - pw2(m - 1), pw2(n - 3) + pw2(m - 2),
                                pw2(n - 2), 3 * pw2(n - 2) - 1,
                                pw2(n - 2) + pw2(m - 1), pw2(n - 3) - pw2(m - 2));
        }
        case TableId::T3: {
            const int m = need(p.m, "m");
            if (m < 1) violated("T3 needs m >= 1");
            const int n = 2 * m + 1;
            return three_weight(pw2(n) - 1, pw2(2 * n),
                                pw2(n - 1) - pw2(m), pw2(4 * m) + pw2(3 * m) - pw2(2 * m - 1) - pw2(m - 1),
                                pw2(n - 1), pw2(4 * m + 1) + pw2(2 * m) - 1,
                                pw2(n - 1) + pw2(m), pw2(4 * m) + pw2(m - 1) - pw2(3 * m) - pw2(2 * m - 1));
        }
        case TableId::T4: {
            const int m = need(p.m, "m");
            if (m < 1) violated("T4 needs m >= 1");
            const int n = 2 * m + 1;
            return three_weight(pw2(n - 1) - 1, pw2(n),
                                pw2(n - 2) - pw2(m - 1), pw2(n - 2) + pw2(m - 1),
                                pw2(n - 2), pw2(n - 1) - 1,
                                pw2(n - 2) + pw2(m - 1), pw2(n - 2) - pw2(m - 1));
        }
        case TableId::T5: {
            const int m = need(p.m, "m");
            if (m < 1) violated("T5 needs m >= 1");
            const int n = 2 * m + 1;
            return three_weight(pw2(n) - 1, pw2(2 * n - 1),
                                pw2(n - 1) - pw2(m), pw2(4 * m - 1) + pw2(3 * m - 1) - pw2(2 * m - 1) - pw2(m - 1),
                                pw2(n - 1), pw2(4 * m) + pw2(2 * m) - 1,
                                pw2(n - 1) + pw2(m), pw2(4 * m - 1) + pw2(m - 1) - pw2(3 * m - 1) - pw2(2 * m - 1));
        }
        case TableId::T6: {
            const int m = need(p.m, "m");
            if (m < 3 || m % 3 != 0) violated("T6 needs m = 0 (mod 3)");
            const int n = 3 * m;
            return three_weight(pw2(n) - 1, pw2(5 * m),
                                pw2(n - 1) - pw2(2 * m - 1),
                                pw2(4 * m - 1) + pw2(3 * m - 1) - pw2(2 * m - 1) - pw2(m - 1),
                                pw2(n - 1), pw2(5 * m) + pw2(2 * m) - pw2(4 * m) - 1,
                                pw2(n - 1) + pw2(2 * m - 1),
                                pw2(4 * m - 1) + pw2(m - 1) - pw2(3 * m - 1) - pw2(2 * m - 1));
        }
        case TableId::T7: {
            const int k = need(p.k, "k"), m = need(p.m, "m");
            if (k < 3 || k % 2 == 0 || m % 2 == 0) violated("T7 needs k >= 3 and k, m odd");
            const int n = k * m;
            return three_weight(pw2(n) - 1, pw2(n + m),
                                pw2(n - 1) - pw2((n + m - 2) / 2),
                                pw2(n - 1) + pw2((n + m) / 2 - 1) - pw2(n - m - 1) - pw2((n - m) / 2 - 1),
                                pw2(n - 1), pw2(n + m) + pw2(n - m) - pw2(n) - 1,
                                pw2(n - 1) + pw2((n + m - 2) / 2),
                                pw2((n - m) / 2 - 1) + pw2(n - 1) - pw2((n + m) / 2 - 1) - pw2(n - m - 1));
        }
        case TableId::T8: {
            const int k = need(p.k, "k"), m = need(p.m, "m");
            if (k < 3 || k % 2 == 0 || m % 2 == 0) violated("T8 needs k >= 3 and k, m odd");
            const int n = k * m;
            return three_weight(pw2(n - 1) - 1, pw2(n),
                                pw2(n - 2) - pw2((n + m - 4) / 2), pw2(n - m - 1) + pw2((n - m - 2) / 2),
                                pw2(n - 2), pw2(n) - pw2(n - m) - 1,
                                pw2(n - 2) + pw2((n + m - 4) / 2), pw2(n - m - 1) - pw2((n - m - 2) / 2));
        }
        case TableId::T44D: {
            const int m = need(p.m, "m");
            if (m < 3 || m % 2 == 0) violated("T44D needs m odd >= 3");
            const int n = 3 * m;
            return three_weight(pw2(n - 1) - 1, pw2(n),
                                pw2(n - 2) - pw2((n + 2 * m - 3) / 2), pw2(m - 2) + pw2((m - 3) / 2),
                                pw2(n - 2), pw2(n) - pw2(m - 1) - 1,
                                pw2(n - 2) + pw2((n + 2 * m - 3) / 2), pw2(m - 2) - pw2((m - 3) / 2));
        }
        case TableId::T52: {
            const int n = need(p.n, "n");
            if (n < 3 || n % 2 == 0) violated("T52 needs n odd >= 3");
            const int m = (n - 1) / 2;
            return three_weight(pw2(n - 1) - 1, pw2(n),
                                pw2(n - 2) - pw2(m - 1), pw2(n - 2) + pw2(m - 1),
                                pw2(n - 2), pw2(n - 1) - 1,
                                pw2(n - 2) + pw2(m - 1), pw2(n - 2) - pw2(m - 1));
        }
    }
    violated("unknown table");
}

WeightDistribution expected_constant_weight_cdf(int n) {
    WeightDistribution wd;
    wd.length = (1u << (n - 1)) - 1;
    wd.total = 1ull << (n - 1);
    wd.entries[0] = 1;
    wd.entries[1u << (n - 2)] = (1ull << (n - 1)) - 1;
    wd.validate();
    return wd;
}

std::vector<std::uint32_t> five_weight_set_gold(int n) {
    const std::uint32_t h = 1u << (n - 1);
    return {0, static_cast<std::uint32_t>(h - pw2((n + 1) / 2)), static_cast<std::uint32_t>(h - pw2((n - 1) / 2)), h,
            static_cast<std::uint32_t>(h + pw2((n - 1) / 2)), static_cast<std::uint32_t>(h + pw2((n + 1) / 2))};
}

std::vector<std::uint32_t> five_weight_set_t42(int m) {
    const int n = 3 * m;
    const std::uint32_t h = 1u << (n - 1);
    return {0,
            static_cast<std::uint32_t>(h - pw2((n + 2 * m - 1) / 2)),
            static_cast<std::uint32_t>(h - pw2((n + m - 2) / 2)),
            h,
            static_cast<std::uint32_t>(h + pw2((n + m - 2) / 2)),
            static_cast<std::uint32_t>(h + pw2((n + 2 * m - 1) / 2))};
}

std::vector<std::uint32_t> conj1_weight_set(int m) {
    const int n = 2 * m + 1;
    const std::uint32_t h = 1u << (n - 2);
    return {0, static_cast<std::uint32_t>(h - pw2((n - 1) / 2)), static_cast<std::uint32_t>(h - pw2((n - 3) / 2)), h,
            static_cast<std::uint32_t>(h + pw2((n - 3) / 2)), static_cast<std::uint32_t>(h + pw2((n - 1) / 2))};
}

namespace {

std::string wd_brief(const WeightDistribution& wd) { return "[" + std::to_string(wd.length) + "] " + wd.enumerator(); }

bool subset_of(const WeightDistribution& wd, const std::vector<std::uint32_t>& allowed) {
    for (auto [w, c] : wd.entries) {
        if (c == 0) continue;
        if (std::find(allowed.begin(), allowed.end(), w) == allowed.end()) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<FamilyId, Params>> ab_rows_at(int n, int t) {
    std::vector<std::pair<FamilyId, Params>> rows;
    if (n % 2 == 0 || std::gcd(t, n) != 1) return rows;
    const int m = (n - 1) / 2;
    rows.push_back({FamilyId::AB_GOLD, Params{n, {}, {}, t, 1}});
    for (int i = 2; i < n + 2; ++i)
        if (std::gcd(i, n) == 1) {
            rows.push_back({FamilyId::AB_KASAMI, Params{n, {}, {}, t, i}});
            break;
        }
    rows.push_back({FamilyId::AB_WELCH, Params{n, {}, {}, t, {}}});
    if (m % 2 == 0) rows.push_back({FamilyId::AB_NIHO1, Params{n, {}, {}, t, {}}});
    if (m % 2 == 1 && m >= 1) rows.push_back({FamilyId::AB_NIHO2, Params{n, {}, {}, t, {}}});
    return rows;
}

ExperimentReport run_conjecture(ConjectureId id, const Params& p, const codes::Caps& caps, int jobs) {
    ExperimentReport rep;
    rep.id = id;
    rep.params = p;
    if (id == ConjectureId::CONJ1) {
        const int m = need(p.m, "m");
        const int n = 2 * m + 1;
        auto f = build(FamilyId::CONJ1, p);
        auto verdict = fexpr::is_two_to_one(f, caps.n_cap_slice);
        rep.observations.push_back({"two_to_one", verdict ? "true" : "false", bool(verdict)});
        if (verdict && m >= 4) {
            auto wd = codes::wd_cdf(f, caps);
            const int dim = static_cast<int>(std::countr_zero(wd.total));
            std::uint32_t dmin = 0;
            for (auto [w, c] : wd.entries)
                if (w != 0 && c != 0) {
                    dmin = w;
                    break;
                }
            bool params_ok = wd.length == pw2(n - 1) - 1 && dim == n &&
                             dmin == pw2(n - 2) - pw2((n - 1) / 2);
            rep.observations.push_back({"cdf_parameters",
                                        "[" + std::to_string(wd.length) + "," + std::to_string(dim) + "," +
                                            std::to_string(dmin) + "]",
                                        params_ok});
            rep.observations.push_back({"cdf_weight_set_contained", wd_brief(wd), subset_of(wd, conj1_weight_set(m))});
        }
    } else {
        // conjecture: C_f from every almost bent row matches the Gold-case result
        const int n = need(p.n, "n");
        const int t = p.t.value_or(1);
        for (const auto& [fid, fp] : ab_rows_at(n, t)) {
            auto f = build(fid, fp);
            auto wd = codes::wd_cf(f, caps, jobs);
            const int dim = static_cast<int>(std::countr_zero(wd.total));
            bool ok = dim == 2 * n && subset_of(wd, five_weight_set_gold(n));
            rep.observations.push_back({std::string("cf_matches_gold_case_") + family_name(fid), wd_brief(wd), ok});
        }
    }
    return rep;
}

}  // namespace fwc::catalog
