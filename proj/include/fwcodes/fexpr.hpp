#ifndef FWCODES_FEXPR_HPP
#define FWCODES_FEXPR_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwcodes/gf2n.hpp"

namespace fwc::fexpr {

using gf2n::Elt;
using gf2n::Field;
using gf2n::FieldPtr;

// Symbolic function GF(2^n) -> GF(2^n): sums of monomials c*x^e, relative-trace
// wrappers and power wrappers.  Exponents are arbitrary-precision on input and
// normalized mod 2^n-1 at construction (0 only for the literal zero exponent),
// which preserves values everywhere including x = 0.
class FuncExpr {
public:
    enum class Kind { Monomial, Sum, RelTrace, Power };

    static FuncExpr monomial(FieldPtr f, Elt coeff, const BigInt& exponent);
    static FuncExpr x(FieldPtr f) { return monomial(std::move(f), 1, 1); }
    static FuncExpr constant(FieldPtr f, Elt c) { return monomial(std::move(f), c, 0); }
    static FuncExpr sum(std::vector<FuncExpr> terms);
    static FuncExpr rel_trace(FuncExpr inner, int m);
    static FuncExpr power(FuncExpr inner, const BigInt& exponent);

    const FieldPtr& field() const { return field_; }
    Kind kind() const;

    Elt eval(Elt x) const;

    // full value table, built once and shared afterwards
    const std::vector<Elt>& value_table(int n_cap = 22) const;

    std::string to_string() const;

    // substitute x -> x^d (exponent rewrite; requires gcd(d, 2^n-1) = 1)
    FuncExpr substitute_power(const BigInt& d) const;

    // sum-of-monomials form (exponent -> coefficient, zero coefficients dropped);
    // nullopt when a Power node cannot be expanded exactly
    std::optional<std::map<std::uint32_t, Elt>> monomials() const;

    struct Node;

private:
    FuncExpr(FieldPtr f, std::shared_ptr<const Node> root) : field_(std::move(f)), root_(std::move(root)) {}
    FieldPtr field_;
    std::shared_ptr<const Node> root_;
};

struct ImageSet {
    std::vector<Elt> elements;  // ascending integer representation
    bool is_defining_set = false;
};

struct ValueTable {
    FieldPtr field;
    const std::vector<Elt>* values;  // indexed by x, size 2^n
    std::vector<std::uint8_t> trace_bits(Elt b) const;  // x -> tr(b*f(x))
};

ValueTable truth_tables(const FuncExpr& f, int n_cap = 22);

struct TwoToOneVerdict {
    bool two_to_one;
    Elt witness = 0;      // image point with |fiber| != 2 (valid when !two_to_one)
    int fiber_size = 0;
    explicit operator bool() const { return two_to_one; }
};

TwoToOneVerdict is_two_to_one(const FuncExpr& f, int n_cap = 22);
ImageSet defining_set(const FuncExpr& f, int n_cap = 22);
FuncExpr quadratize(const FuncExpr& f, const BigInt& d);  // NotCoprime unless gcd(d,2^n-1)=1
bool is_quadratic(const FuncExpr& f);

// algebraic degree of the coordinate functions (ANF route, exact)
int algebraic_degree(const FuncExpr& f);

// textual syntax, e.g. "x^(2^4+2) + x^(2^3) + w*x" or "tr[9/3](x^(2^3+1)) + x"
FuncExpr parse(std::string_view text, FieldPtr field);

}  // namespace fwc::fexpr

#endif
