#ifndef FWCODES_CATALOG_HPP
#define FWCODES_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fwcodes/codes.hpp"

namespace fwc::catalog {

using codes::WeightDistribution;
using fexpr::FuncExpr;
using gf2n::FieldPtr;

enum class FamilyId {
    L31,      // x^((2^(n-1)+2^m-1)/3) + x^(2^m) + w*x, n = 2m, m odd > 1
    L32_1,    // x^(2^(m+1)+2) + x^(2^(m+1)) + x^2 + x, n = 2m+1
    L32_2,    // x^(2^(m+1)+2) + x^(2^(m+1)+1) + x^2 + x
    L32_3,    // x^(2^(m+2)+4) + x^(2^(m+1)+2) + x^2 + x
    L32_4,    // x^(2^n-2^(m+1)+2) + x^(2^(m+1)) + x^2 + x
    L33_1,    // x^(2^(2m)+1) + x^(2^(m+1)) + x^(2^m+1) + x, n = 3m, m != 1 mod 3
    L33_2,    // x^(2^(2m)+2^m) + x^(2^(2m)+1) + x^(2^m+1) + x, n = 3m
    T41,      // tr[n/m](x^(2^m+1)) + x, n = km, k >= 3 odd, m odd
    T42,      // x^(2^(2m+1)+1) + x^(2^(m+1)+1) + x^4 + x^3, n = 3m, m odd
    T53_GOLD,  // (x^(2^t)+x)^(2^i+1), n odd
    AB_GOLD,
    AB_KASAMI,  // e = 2^(2i)-2^i+1
    AB_WELCH,   // e = 2^m+3, n = 2m+1
    AB_NIHO1,   // e = 2^m+2^(m/2)-1, m even
    AB_NIHO2,   // e = 2^m+2^((3m+1)/2)-1, m odd
    CONJ1,      // x^(3*2^(m+1)) + x^(2^(m+2)+1) + x^(2^(m+1)+1) + x, n = 2m+1
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_string(const std::string& s);
std::vector<FamilyId> all_families();

struct Params {
    std::optional<int> n, m, k, t, i;
    std::string to_string() const;
};

// the extension degree the family lives on (validates the parameter shape)
int field_degree(FamilyId id, const Params& p);

// the family's function over the standard field for its degree;
// ConstraintViolation names the violated condition
FuncExpr build(FamilyId id, const Params& p);

// Table IX exponent for the composite families (x^(2^t)+x)^e
BigInt ab_exponent(FamilyId id, const Params& p);

// substitution exponent that turns the family into a genuine quadratic, where
// the analysis uses one (L31 -> 2^(m+2)+2)
std::optional<BigInt> quadratizing_exponent(FamilyId id, const Params& p);

// the two smallest valid parameter sets (ascending field degree)
std::vector<Params> smallest_params(FamilyId id);

enum class TableId { T1, T2, T3, T4, T5, T6, T7, T8, T44D, T52 };
const char* table_name(TableId id);

// closed-form expected weight distribution for one table at given parameters
WeightDistribution expected_wd(TableId id, const Params& p);
// the constant-weight distribution 1 + (2^(n-1)-1) z^(2^(n-2))
WeightDistribution expected_constant_weight_cdf(int n);

// stated weight sets for the codes whose distributions the source results
// bound but do not pin down
std::vector<std::uint32_t> five_weight_set_gold(int n);   // also the L32_4 C_f set
std::vector<std::uint32_t> five_weight_set_t42(int m);    // n = 3m
std::vector<std::uint32_t> conj1_weight_set(int m);       // C_D(f) set, n = 2m+1

// Table IX rows valid at (n, t), with the canonical picks i = 1 for the Gold
// exponent and the smallest coprime i >= 2 for Kasami
std::vector<std::pair<FamilyId, Params>> ab_rows_at(int n, int t);

enum class ConjectureId { CONJ1, CONJ2 };

struct Observation {
    std::string name;
    std::string observed;
    bool consistent = true;  // consistent with the conjectured statement
};

struct ExperimentReport {
    ConjectureId id;
    Params params;
    std::vector<Observation> observations;
};

ExperimentReport run_conjecture(ConjectureId id, const Params& p, const codes::Caps& caps = {}, int jobs = 0);

}  // namespace fwc::catalog

#endif
