#include "fwcodes/gf2n.hpp"

#include <algorithm>

namespace fwc {

const char* err_name(Err e) {
    switch (e) {
        case Err::DegreeOutOfRange: return "DegreeOutOfRange";
        case Err::NotIrreducible: return "NotIrreducible";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::NotASubfield: return "NotASubfield";
        case Err::NoGF4Subfield: return "NoGF4Subfield";
        case Err::SizeCapExceeded: return "SizeCapExceeded";
        case Err::NotCoprime: return "NotCoprime";
        case Err::ParseError: return "ParseError";
        case Err::BadLength: return "BadLength";
        case Err::NotQuadratic: return "NotQuadratic";
        case Err::NotTwoToOne: return "NotTwoToOne";
        case Err::DivisibilityBreach: return "DivisibilityBreach";
        case Err::NonPowerOfTwoCount: return "NonPowerOfTwoCount";
        case Err::SingularSystem: return "SingularSystem";
        case Err::NonIntegralSolution: return "NonIntegralSolution";
        case Err::ZeroConstantTerm: return "ZeroConstantTerm";
        case Err::DegenerateCoefficients: return "DegenerateCoefficients";
        case Err::NoRootInField: return "NoRootInField";
        case Err::ConstraintViolation: return "ConstraintViolation";
        case Err::CacheError: return "CacheError";
    }
    return "UnknownError";
}

namespace gf2n {

namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p | 1); }

std::uint64_t poly_mod64(std::uint64_t a, std::uint64_t m) {
    int dm = poly_degree(m);
    while (a && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            ps.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) ps.push_back(v);
    return ps;
}

}  // namespace

bool poly_irreducible(std::uint64_t poly) {
    int n = poly_degree(poly);
    if (n < 1) return false;
    if ((poly & 1) == 0) return n == 1;  // divisible by x
    for (int d = 1; d <= n / 2; ++d)
        for (std::uint64_t q = (1ull << d) | 1; q < (2ull << d); q += 2)
            if (poly_mod64(poly, q) == 0) return false;
    return true;
}

std::uint32_t smallest_irreducible_poly(int n) {
    for (std::uint64_t p = 1ull << n; p < (2ull << n); ++p)
        if (poly_irreducible(p)) return static_cast<std::uint32_t>(p);
    fail(Err::DegreeOutOfRange, "no irreducible polynomial of degree " + std::to_string(n));
}

// smallest_irreducible_poly(n) for n = 1..24, frozen for reproducibility
const std::array<std::uint32_t, 25> kReductionPoly = {
    0,         0x3,       0x7,       0xb,       0x13,      0x25,      0x43,
    0x83,      0x11b,     0x203,     0x409,     0x805,     0x1009,    0x201b,
    0x4021,    0x8003,    0x1002b,   0x20009,   0x40009,   0x80027,   0x100009,
    0x200005,  0x400003,  0x800021,  0x100001b,
};

Field::Field(int n, std::uint32_t poly) : n_(n), order_(1u << n), poly_(poly) {
    // trace(beta_i) = sum of the conjugates beta_i^(2^j); the sum lands in {0,1}
    trace_mask_ = 0;
    for (int i = 0; i < n_; ++i) {
        Elt y = 1u << i;
        Elt acc = 0;
        for (int j = 0; j < n_; ++j) {
            acc ^= y;
            y = mul(y, y);
        }
        trace_mask_ |= (acc & 1u) << i;
    }
}

FieldPtr Field::make(int n) {
    if (n < kMinDegree || n > kMaxDegree)
        fail(Err::DegreeOutOfRange, "extension degree must be in 2..24, got " + std::to_string(n));
    return FieldPtr(new Field(n, kReductionPoly[n]));
}

FieldPtr Field::make(int n, std::uint32_t poly) {
    if (n < kMinDegree || n > kMaxDegree)
        fail(Err::DegreeOutOfRange, "extension degree must be in 2..24, got " + std::to_string(n));
    if (poly_degree(poly) != n)
        fail(Err::DegreeOutOfRange, "reduction polynomial must be monic of degree " + std::to_string(n));
    if (!poly_irreducible(poly))
        fail(Err::NotIrreducible, "reduction polynomial factors over GF(2)");
    return FieldPtr(new Field(n, poly));
}

FieldPtr Field::make_any(int n) {
    if (n < 1 || n > kMaxDegree)
        fail(Err::DegreeOutOfRange, "extension degree must be in 1..24, got " + std::to_string(n));
    return FieldPtr(new Field(n, kReductionPoly[n]));
}

Elt Field::pow(Elt x, std::uint64_t e) const {
    Elt r = 1;
    Elt b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::reduce_exponent(const BigInt& e) const {
    if (e < 0) fail(Err::DegreeOutOfRange, "negative exponent");
    if (e == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(e % group_order());
    return static_cast<std::uint32_t>(r == 0 ? group_order() : r);
}

Elt Field::pow(Elt x, const BigInt& e) const { return pow(x, static_cast<std::uint64_t>(reduce_exponent(e))); }

Elt Field::inv(Elt x) const {
    if (x == 0) fail(Err::DivisionByZero, "inverse of zero");
    return pow(x, group_order() - 1);
}

Elt Field::rel_trace(Elt x, int m) const {
    if (m <= 0 || n_ % m != 0) fail(Err::NotASubfield, std::to_string(m) + " does not divide " + std::to_string(n_));
    Elt acc = 0;
    Elt y = x;
    for (int j = 0; j < n_ / m; ++j) {
        acc ^= y;
        for (int s = 0; s < m; ++s) y = mul(y, y);
    }
    return acc;
}

const std::vector<std::uint32_t>& Field::dual_table() const {
    std::call_once(dual_once_, [this] {
        // M[2^j] bit i = tr(beta_i * beta_j), then extend by linearity in v
        std::vector<std::uint32_t> base(n_);
        for (int j = 0; j < n_; ++j) {
            std::uint32_t w = 0;
            for (int i = 0; i < n_; ++i) w |= static_cast<std::uint32_t>(trace(mul(1u << i, 1u << j))) << i;
            base[j] = w;
        }
        dual_.assign(order_, 0);
        for (std::uint32_t v = 1; v < order_; ++v) {
            std::uint32_t lb = v & (0u - v);
            dual_[v] = dual_[v ^ lb] ^ base[std::countr_zero(lb)];
        }
        dual_inv_.assign(order_, 0);
        for (std::uint32_t v = 0; v < order_; ++v) dual_inv_[dual_[v]] = v;
    });
    return dual_;
}

const std::vector<std::uint32_t>& Field::dual_inverse_table() const {
    dual_table();
    return dual_inv_;
}

const std::vector<std::uint32_t>& Field::exp_table() const {
    std::call_once(log_once_, [this] {
        // primitive element: smallest integer representation whose order is 2^n-1
        const auto factors = prime_factors(group_order());
        auto primitive = [&](Elt g) {
            for (auto p : factors)
                if (pow(g, group_order() / p) == 1) return false;
            return true;
        };
        primitive_ = 1;
        for (std::uint32_t g = 2; g < order_; ++g)
            if (primitive(g)) {
                primitive_ = g;
                break;
            }
        exp_.assign(order_, 1);
        for (std::uint64_t i = 1; i < group_order(); ++i) exp_[i] = mul(exp_[i - 1], primitive_);
        exp_[group_order()] = 1;  // guard slot so exp_[(la+lb) % (q-1)] never reads past the table
        log_.assign(order_, 0);
        for (std::uint64_t i = 0; i < group_order(); ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
    });
    return exp_;
}

const std::vector<std::uint32_t>& Field::log_table() const {
    exp_table();
    return log_;
}

Elt Field::primitive_element() const {
    exp_table();
    return primitive_;
}

Elt Field::omega() const {
    if (n_ % 2 != 0) fail(Err::NoGF4Subfield, "GF(4) is not a subfield of GF(2^" + std::to_string(n_) + ")");
    return pow(primitive_element(), group_order() / 3);
}

}  // namespace gf2n
}  // namespace fwc
