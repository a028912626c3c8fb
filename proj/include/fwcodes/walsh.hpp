#ifndef FWCODES_WALSH_HPP
#define FWCODES_WALSH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fwcodes/fexpr.hpp"

namespace fwc::walsh {

using fexpr::FuncExpr;
using gf2n::Elt;
using gf2n::Field;

struct Caps {
    int n_cap_full = 16;   // spectrum_full does 2^(2n) work
    int n_cap_slice = 22;  // b-slice and value tables do 2^n work
};

enum class SpectrumKind { FullGrid, BSlice };

struct WalshSpectrum {
    SpectrumKind kind = SpectrumKind::FullGrid;
    int n = 0;
    bool includes_b0 = true;
    std::map<std::int64_t, std::uint64_t> counts;  // Walsh value -> occurrences

    std::uint64_t total() const;
    std::uint64_t count_of(std::int64_t v) const;
    // dimension of K1 (full grid) or K2 (b-slice): log2 of the count of the
    // value 2^n; NonPowerOfTwoCount if that count is not a power of two
    int k_dimension() const;
};

// in-place Walsh-Hadamard butterfly; length must be a power of two
void fwht(std::vector<std::int64_t>& v);

// multiset of W_f(a,b) over the full (a,b) grid, b=0 rows included
WalshSpectrum spectrum_full(const FuncExpr& f, const Caps& caps = {}, int jobs = 0);

// multiset of W_f(b) = W_f(0,b) over all b
WalshSpectrum spectrum_b_slice(const FuncExpr& f, const Caps& caps = {});

// one b-row of the full grid: out[a] = W_f(a,b)
std::vector<std::int64_t> walsh_row(const FuncExpr& f, Elt b, const Caps& caps = {});

// out[b] = W_f(b) for every b
std::vector<std::int64_t> b_slice_values(const FuncExpr& f, const Caps& caps = {});

// naive O(2^n) reference for a single (a,b); test oracle
std::int64_t walsh_value_naive(const FuncExpr& f, Elt a, Elt b);

struct QuadKernel {
    std::vector<Elt> basis;  // spans V_phi for phi(x) = tr(b f(x))
    int dim = 0;
    Elt b = 0;
};

QuadKernel quad_kernel(const FuncExpr& f, Elt b);  // NotQuadratic unless deg(f) <= 2
int quad_rank(const FuncExpr& f, Elt b);

}  // namespace fwc::walsh

#endif
