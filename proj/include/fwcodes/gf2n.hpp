#ifndef FWCODES_GF2N_HPP
#define FWCODES_GF2N_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fwcodes/error.hpp"

namespace fwc {

using BigInt = boost::multiprecision::cpp_int;

namespace gf2n {

// One element of GF(2^n) as an n-bit word in polynomial basis (bit i = coeff of x^i).
using Elt = std::uint32_t;

bool poly_irreducible(std::uint64_t poly);
std::uint32_t smallest_irreducible_poly(int n);

// Built-in reduction polynomials, index = extension degree.
// Each entry is the lexicographically smallest (as an integer) monic irreducible
// polynomial of its degree over GF(2), so element representations are stable
// across runs and machines.
extern const std::array<std::uint32_t, 25> kReductionPoly;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 24;

    int n() const { return n_; }
    std::uint32_t order() const { return order_; }           // 2^n
    std::uint64_t group_order() const { return order_ - 1; }  // 2^n - 1
    std::uint32_t reduction_poly() const { return poly_; }

    Elt add(Elt x, Elt y) const { return x ^ y; }

    Elt mul(Elt x, Elt y) const {
        std::uint32_t r = 0;
        while (y) {
            r ^= x & (0u - (y & 1u));
            y >>= 1;
            x <<= 1;
            x ^= poly_ & (0u - ((x >> n_) & 1u));
        }
        return r;
    }

    Elt sqr(Elt x) const { return mul(x, x); }

    Elt pow(Elt x, std::uint64_t e) const;
    Elt pow(Elt x, const BigInt& e) const;
    Elt inv(Elt x) const;

    // Reduce an exponent to the canonical range used throughout: 0 stays 0,
    // everything else lands in 1..2^n-1.  x^e == x^reduce_exponent(e) for all x,
    // including x = 0 (0^0 = 1 by the empty-product convention).
    std::uint32_t reduce_exponent(const BigInt& e) const;

    int trace(Elt x) const { return std::popcount(x & trace_mask_) & 1; }
    Elt rel_trace(Elt x, int m) const;
    std::uint32_t trace_mask() const { return trace_mask_; }

    // tr(a*x) without a field multiplication.
    int trace_pair(Elt a, Elt x) const { return std::popcount(a & dual_coord(x)) & 1; }

    // Dual coordinates of v: bit i = tr(beta_i * v).  v -> dual_coord(v) is a
    // GF(2)-linear bijection; it carries the trace pairing onto the plain dot
    // product, which is what lets one standard FWHT per b cover all a.
    std::uint32_t dual_coord(Elt v) const { return dual_table()[v]; }
    const std::vector<std::uint32_t>& dual_table() const;
    const std::vector<std::uint32_t>& dual_inverse_table() const;

    Elt primitive_element() const;
    Elt omega() const;  // the GF(4) element with w^2+w+1=0; needs n even

    // log/antilog tables over the fixed primitive element (built on first use)
    const std::vector<std::uint32_t>& exp_table() const;
    const std::vector<std::uint32_t>& log_table() const;

    bool same(const Field& other) const { return n_ == other.n_ && poly_ == other.poly_; }

    // validated public construction, degree 2..24
    static FieldPtr make(int n);
    static FieldPtr make(int n, std::uint32_t reduction_poly);
    // degree 1..24, used internally (GF(2) shows up as a base field for the
    // low-degree factorization classifiers)
    static FieldPtr make_any(int n);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int n, std::uint32_t poly);

    int n_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::uint32_t trace_mask_;

    mutable std::once_flag dual_once_;
    mutable std::vector<std::uint32_t> dual_;
    mutable std::vector<std::uint32_t> dual_inv_;

    mutable std::once_flag log_once_;
    mutable Elt primitive_ = 0;
    mutable std::vector<std::uint32_t> exp_;
    mutable std::vector<std::uint32_t> log_;
};

inline FieldPtr field_new(int n) { return Field::make(n); }
inline FieldPtr field_new(int n, std::uint32_t reduction_poly) { return Field::make(n, reduction_poly); }

}  // namespace gf2n
}  // namespace fwc

#endif
