#ifndef FWCODES_LOWFACTOR_HPP
#define FWCODES_LOWFACTOR_HPP

#include <array>
#include <optional>
#include <vector>

#include "fwcodes/gf2n.hpp"

namespace fwc::lowfactor {

using gf2n::Elt;
using gf2n::Field;
using gf2n::FieldPtr;

// factorization shape over the coefficient field: part sizes are the degrees
// of the irreducible factors (with multiplicity)
enum class FactorPattern { P111, P12, P3, P1111, P22, P13, P112, P4 };
const char* pattern_name(FactorPattern p);
int pattern_degree(FactorPattern p);

// z^2 + z = c: solvable iff tr(c) = 0; returns the solution with the smaller
// integer representation (the other one is z+1).  Half-trace for odd n, a
// linear solve for even n.
std::optional<Elt> solve_artin_schreier(const Field& K, Elt c);

// z^2 + bz + c = 0; roots ascending (equal for b = 0)
std::optional<std::array<Elt, 2>> solve_quadratic(const Field& K, Elt b, Elt c);

// GF(q^2) as GF(q)[w]/(w^2 + w + delta) with tr(delta) = 1; delta is the
// smallest trace-one element, so the construction is deterministic.
class Ext2 {
public:
    struct E {
        Elt lo = 0, hi = 0;
        bool operator==(const E&) const = default;
    };

    explicit Ext2(const Field& base);

    const Field& base() const { return *base_; }
    Elt delta() const { return delta_; }

    E embed(Elt x) const { return {x, 0}; }
    bool in_base(E x) const { return x.hi == 0; }

    E add(E x, E y) const { return {static_cast<Elt>(x.lo ^ y.lo), static_cast<Elt>(x.hi ^ y.hi)}; }
    E mul(E x, E y) const;
    E sqr(E x) const { return mul(x, x); }
    E pow(E x, std::uint64_t e) const;
    E inv(E x) const;
    E conj(E x) const { return {static_cast<Elt>(x.lo ^ x.hi), x.hi}; }  // Frobenius^n, fixes the base field
    Elt norm(E x) const;
    int trace_bit(E x) const;                  // absolute trace of GF(q^2)
    std::optional<E> artin_schreier(E c) const;  // z^2 + z = c in the extension

private:
    const Field* base_;
    Elt delta_;
};

// x^3 + ax + b over GF(2^m), b != 0
FactorPattern cubic_type(const Field& K, Elt a, Elt b);
// one root of x^3 + ax + b via the solve-quadratic / cube-root construction
Elt cubic_root(const Field& K, Elt a, Elt b);
// all roots in the field (empty for type (3))
std::vector<Elt> cubic_roots(const Field& K, Elt a, Elt b);

// x^4 + a2 x^2 + a1 x + a0 over GF(2^n), a0*a1 != 0
FactorPattern quartic_type(const Field& K, Elt a2, Elt a1, Elt a0);

// verification oracle: monic degree-3/4 polynomial given by all coefficients
// (low to high, leading 1), classified by exhaustive root finding
FactorPattern brute_factor_type(const Field& K, const std::vector<Elt>& coeffs);

}  // namespace fwc::lowfactor

#endif
