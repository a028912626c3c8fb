#ifndef FWCODES_CODES_HPP
#define FWCODES_CODES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fwcodes/walsh.hpp"

namespace fwc::codes {

using fexpr::FuncExpr;
using gf2n::Elt;
using walsh::Caps;
using walsh::WalshSpectrum;

enum class CodeKind { Cf, CDf };
const char* code_kind_name(CodeKind k);

struct WeightDistribution {
    std::map<std::uint32_t, std::uint64_t> entries;  // weight -> multiplicity
    std::uint32_t length = 0;
    std::uint64_t total = 0;  // number of codewords, including the zero word

    int nonzero_weight_count() const;
    std::string enumerator() const;  // "1 + 630 z^24 + ..."
    void validate() const;           // sum/total/zero-word/range invariants
    bool operator==(const WeightDistribution& o) const { return entries == o.entries && length == o.length; }
};

struct Dims {
    int dim_cf = 0;
    int dim_cdf = 0;
    int dk1 = 0;
    int dk2 = 0;
};

// dimensions via K1/K2: dk = log2(count of the Walsh value 2^n)
Dims dims(const FuncExpr& f, const Caps& caps = {}, int jobs = 0);
int dk2_of(const FuncExpr& f, const Caps& caps = {});  // slice-only variant

// spectrum -> weight distribution translations
WeightDistribution wd_cf(const WalshSpectrum& full);
WeightDistribution wd_cdf(const WalshSpectrum& slice);
WeightDistribution wd_cf(const FuncExpr& f, const Caps& caps = {}, int jobs = 0);
WeightDistribution wd_cdf(const FuncExpr& f, const Caps& caps = {});

// literal codeword enumeration (the independent oracle for the two functions above)
WeightDistribution wd_bruteforce_cf(const FuncExpr& f, int n_cap = 8);
WeightDistribution wd_bruteforce_cdf(const FuncExpr& f, int n_cap = 12);

using BigInt = boost::multiprecision::cpp_int;

// first three Pless power moments for a 3-weight code of given length and
// dimension with dual distance >= 3; exact arithmetic, errors on non-integral
// or negative solutions
std::array<BigInt, 3> pless_solve_3(const std::array<std::uint32_t, 3>& weights, std::uint32_t length, int dim);

// first three power-moment identities for a Walsh spectrum with values
// {2^n (on K1), v1, v2, v3}; returns the occurrence counts X1, X2, X3
std::array<BigInt, 3> spectrum_moments_solve(const std::array<std::int64_t, 3>& values, int n, int dk1);

bool sphere_packing_check(std::uint32_t length, std::uint32_t dim, std::uint32_t d);

struct DualReport {
    std::uint32_t length = 0;
    int code_dim = 0;
    int dual_dim = 0;
    bool has_dual_words = true;            // false when dual_dim == 0
    std::optional<int> dmin;               // exact value when known
    int dmin_lo = 0, dmin_hi = 0;          // bracket when !dmin (and has_dual_words)
    std::optional<std::array<Elt, 3>> weight3_witness;
    bool sphere_packing_equality = false;
    std::optional<int> oracle_dmin;        // from the brute-force oracle when it ran
    std::optional<int> oracle_lower_bound; // oracle exhausted all dependencies below this
};

// Characterization-based dual-distance analysis per the dual-code theorem,
// with a brute-force oracle (null-space enumeration / dependency search) when
// the length is within cap.
DualReport dual_analysis(const FuncExpr& f, CodeKind kind, const Caps& caps = {}, bool run_oracle = true,
                         std::uint32_t oracle_length_cap = 1u << 10);
// same, with the code dimension already known (spares recomputing the spectrum)
DualReport dual_analysis_given_dim(const FuncExpr& f, CodeKind kind, int code_dim, const Caps& caps = {},
                                   bool run_oracle = true, std::uint32_t oracle_length_cap = 1u << 10);

struct CodeReport {
    CodeKind kind = CodeKind::Cf;
    std::string family;                           // family id or "expr"
    std::string source;                           // textual function
    std::map<std::string, std::int64_t> params;   // n, m, k, t, i, e as applicable
    std::uint32_t length = 0;
    int dimension = 0;
    bool two_to_one = false;
    std::optional<WalshSpectrum> spectrum;  // attached on request only
    WeightDistribution wd;
    int t_weights = 0;
    DualReport dual;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass() const;
};

// full pipeline for one code construction
CodeReport analyze_code(const FuncExpr& f, CodeKind kind, const Caps& caps = {}, int jobs = 0,
                        bool with_dual = true, bool with_oracle = false);

}  // namespace fwc::codes

#endif
