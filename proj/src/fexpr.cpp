#include "fwcodes/fexpr.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace fwc::fexpr {

struct FuncExpr::Node {
    Kind kind;
    // Monomial
    Elt coeff = 0;
    BigInt exp_big;
    std::uint32_t exp_norm = 0;
    // Sum
    std::vector<std::shared_ptr<const Node>> children;
    // RelTrace / Power
    std::shared_ptr<const Node> inner;
    int m = 0;               // RelTrace target subfield degree
    BigInt pexp_big;         // Power exponent
    std::uint32_t pexp_norm = 0;

    mutable std::once_flag table_once;
    mutable std::vector<Elt> table;
};

namespace {

using Node = FuncExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

Elt eval_node(const Field& K, const Node& nd, Elt x) {
    switch (nd.kind) {
        case FuncExpr::Kind::Monomial:
            return K.mul(nd.coeff, K.pow(x, static_cast<std::uint64_t>(nd.exp_norm)));
        case FuncExpr::Kind::Sum: {
            Elt acc = 0;
            for (const auto& c : nd.children) acc ^= eval_node(K, *c, x);
            return acc;
        }
        case FuncExpr::Kind::RelTrace:
            return K.rel_trace(eval_node(K, *nd.inner, x), nd.m);
        case FuncExpr::Kind::Power:
            return K.pow(eval_node(K, *nd.inner, x), static_cast<std::uint64_t>(nd.pexp_norm));
    }
    return 0;
}

// c * v^e for every v in vals, via log tables
void pow_map(const Field& K, std::vector<Elt>& vals, std::uint32_t e, Elt c) {
    const auto& exp = K.exp_table();
    const auto& log = K.log_table();
    const std::uint64_t go = K.group_order();
    if (c == 0) {
        std::fill(vals.begin(), vals.end(), 0);
        return;
    }
    if (e == 0) {
        std::fill(vals.begin(), vals.end(), c);
        return;
    }
    const std::uint64_t lc = log[c];
    for (auto& v : vals) v = v ? exp[(static_cast<std::uint64_t>(log[v]) * e + lc) % go] : 0;
}

std::vector<Elt> table_node(const Field& K, const Node& nd) {
    const std::uint32_t q = K.order();
    switch (nd.kind) {
        case FuncExpr::Kind::Monomial: {
            std::vector<Elt> t(q);
            for (std::uint32_t x = 0; x < q; ++x) t[x] = x;
            pow_map(K, t, nd.exp_norm, nd.coeff);
            return t;
        }
        case FuncExpr::Kind::Sum: {
            std::vector<Elt> t(q, 0);
            for (const auto& c : nd.children) {
                auto u = table_node(K, *c);
                for (std::uint32_t x = 0; x < q; ++x) t[x] ^= u[x];
            }
            return t;
        }
        case FuncExpr::Kind::RelTrace: {
            auto t = table_node(K, *nd.inner);
            // relative trace is GF(2)-linear: tabulate from the basis images
            std::vector<Elt> R(q, 0);
            std::vector<Elt> base(K.n());
            for (int i = 0; i < K.n(); ++i) base[i] = K.rel_trace(1u << i, nd.m);
            for (std::uint32_t v = 1; v < q; ++v) {
                std::uint32_t lb = v & (0u - v);
                R[v] = R[v ^ lb] ^ base[std::countr_zero(lb)];
            }
            for (auto& v : t) v = R[v];
            return t;
        }
        case FuncExpr::Kind::Power: {
            auto t = table_node(K, *nd.inner);
            pow_map(K, t, nd.pexp_norm, 1);  // e = 0 gives the all-ones table: g(x)^0 = 1 (empty product)
            return t;
        }
    }
    return {};
}

void collect_monomials(const Field& K, const Node& nd, std::map<std::uint32_t, Elt>& out, bool& ok);

// multiply exponent by 2^s (Frobenius twist) with renormalization
std::uint32_t exp_shift(const Field& K, std::uint32_t e, int s) {
    if (e == 0) return 0;
    std::uint64_t v = (static_cast<std::uint64_t>(e) << s) % K.group_order();
    return static_cast<std::uint32_t>(v == 0 ? K.group_order() : v);
}

void add_monomial(std::map<std::uint32_t, Elt>& out, std::uint32_t e, Elt c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh) {
        it->second ^= c;
        if (it->second == 0) out.erase(it);
    }
}

void collect_monomials(const Field& K, const Node& nd, std::map<std::uint32_t, Elt>& out, bool& ok) {
    if (!ok) return;
    switch (nd.kind) {
        case FuncExpr::Kind::Monomial:
            add_monomial(out, nd.exp_norm, nd.coeff);
            return;
        case FuncExpr::Kind::Sum:
            for (const auto& c : nd.children) collect_monomials(K, *c, out, ok);
            return;
        case FuncExpr::Kind::RelTrace: {
            std::map<std::uint32_t, Elt> in;
            collect_monomials(K, *nd.inner, in, ok);
            if (!ok) return;
            for (int j = 0; j < K.n() / nd.m; ++j)
                for (auto [e, c] : in) add_monomial(out, exp_shift(K, e, j * nd.m), K.pow(c, 1ull << (j * nd.m)));
            return;
        }
        case FuncExpr::Kind::Power: {
            std::map<std::uint32_t, Elt> in;
            collect_monomials(K, *nd.inner, in, ok);
            if (!ok) return;
            const std::uint32_t e = nd.pexp_norm;
            if (e == 0) {
                add_monomial(out, 0, 1);
                return;
            }
            if (std::popcount(e) == 1) {
                const int s = std::countr_zero(e);
                for (auto [ei, c] : in) add_monomial(out, exp_shift(K, ei, s), K.pow(c, 1ull << s));
                return;
            }
            if (std::popcount(e) == 2) {
                const int s = std::countr_zero(e);
                const int t = 31 - std::countl_zero(e);
                for (auto [e1, c1] : in)
                    for (auto [e2, c2] : in) {
                        std::uint64_t ee = static_cast<std::uint64_t>(exp_shift(K, e1, s)) + exp_shift(K, e2, t);
                        std::uint64_t r = ee % K.group_order();
                        std::uint32_t en = (ee == 0) ? 0 : static_cast<std::uint32_t>(r == 0 ? K.group_order() : r);
                        add_monomial(out, en, K.mul(K.pow(c1, 1ull << s), K.pow(c2, 1ull << t)));
                    }
                return;
            }
            ok = false;  // higher-weight power exponents are not expanded symbolically
            return;
        }
    }
}

NodePtr rewrite_exponents(const Field& K, const Node& nd, const BigInt& d) {
    auto out = std::make_shared<Node>();
    out->kind = nd.kind;
    switch (nd.kind) {
        case FuncExpr::Kind::Monomial: {
            out->coeff = nd.coeff;
            out->exp_big = nd.exp_big * d;
            out->exp_norm = K.reduce_exponent(out->exp_big);
            break;
        }
        case FuncExpr::Kind::Sum:
            for (const auto& c : nd.children) out->children.push_back(rewrite_exponents(K, *c, d));
            break;
        case FuncExpr::Kind::RelTrace:
            out->inner = rewrite_exponents(K, *nd.inner, d);
            out->m = nd.m;
            break;
        case FuncExpr::Kind::Power:
            out->inner = rewrite_exponents(K, *nd.inner, d);
            out->pexp_big = nd.pexp_big;
            out->pexp_norm = nd.pexp_norm;
            break;
    }
    return out;
}

void print_node(const Node& nd, std::ostream& os, int n) {
    switch (nd.kind) {
        case FuncExpr::Kind::Monomial:
            if (nd.exp_big == 0) {
                os << nd.coeff;
            } else {
                if (nd.coeff != 1) os << nd.coeff << "*";
                os << "x";
                if (nd.exp_big != 1) os << "^" << nd.exp_big.str();
            }
            return;
        case FuncExpr::Kind::Sum: {
            bool first = true;
            for (const auto& c : nd.children) {
                if (!first) os << " + ";
                first = false;
                print_node(*c, os, n);
            }
            if (first) os << "0";
            return;
        }
        case FuncExpr::Kind::RelTrace:
            os << "tr[" << n << "/" << nd.m << "](";
            print_node(*nd.inner, os, n);
            os << ")";
            return;
        case FuncExpr::Kind::Power:
            os << "(";
            print_node(*nd.inner, os, n);
            os << ")^" << nd.pexp_big.str();
            return;
    }
}

}  // namespace

FuncExpr FuncExpr::monomial(FieldPtr f, Elt coeff, const BigInt& exponent) {
    if (coeff >= f->order()) fail(Err::ParseError, "coefficient out of range for the field");
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Monomial;
    nd->coeff = coeff;
    nd->exp_big = exponent;
    nd->exp_norm = f->reduce_exponent(exponent);
    return FuncExpr(std::move(f), std::move(nd));
}

FuncExpr FuncExpr::sum(std::vector<FuncExpr> terms) {
    if (terms.empty()) fail(Err::ParseError, "empty sum");
    auto field = terms.front().field_;
    for (const auto& t : terms)
        if (!t.field_->same(*field)) fail(Err::ParseError, "sum over mismatched fields");
    if (terms.size() == 1) return terms.front();
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Sum;
    for (auto& t : terms) nd->children.push_back(t.root_);
    return FuncExpr(std::move(field), std::move(nd));
}

FuncExpr FuncExpr::rel_trace(FuncExpr inner, int m) {
    const auto& K = *inner.field_;
    if (m <= 0 || K.n() % m != 0)
        fail(Err::NotASubfield, std::to_string(m) + " does not divide " + std::to_string(K.n()));
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::RelTrace;
    nd->inner = inner.root_;
    nd->m = m;
    return FuncExpr(inner.field_, std::move(nd));
}

FuncExpr FuncExpr::power(FuncExpr inner, const BigInt& exponent) {
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Power;
    nd->inner = inner.root_;
    nd->pexp_big = exponent;
    nd->pexp_norm = inner.field_->reduce_exponent(exponent);
    return FuncExpr(inner.field_, std::move(nd));
}

FuncExpr::Kind FuncExpr::kind() const { return root_->kind; }

Elt FuncExpr::eval(Elt x) const { return eval_node(*field_, *root_, x); }

const std::vector<Elt>& FuncExpr::value_table(int n_cap) const {
    if (field_->n() > n_cap)
        fail(Err::SizeCapExceeded,
             "value table needs 2^" + std::to_string(field_->n()) + " entries, cap is 2^" + std::to_string(n_cap));
    std::call_once(root_->table_once, [&] { root_->table = table_node(*field_, *root_); });
    return root_->table;
}

std::string FuncExpr::to_string() const {
    std::ostringstream os;
    print_node(*root_, os, field_->n());
    return os.str();
}

FuncExpr FuncExpr::substitute_power(const BigInt& d) const {
    BigInt g = boost::multiprecision::gcd(BigInt(d % field_->group_order()), BigInt(field_->group_order()));
    if (g != 1) fail(Err::NotCoprime, "substitution exponent shares a factor with 2^n-1");
    return FuncExpr(field_, rewrite_exponents(*field_, *root_, d));
}

std::optional<std::map<std::uint32_t, Elt>> FuncExpr::monomials() const {
    std::map<std::uint32_t, Elt> out;
    bool ok = true;
    collect_monomials(*field_, *root_, out, ok);
    if (!ok) return std::nullopt;
    return out;
}

ValueTable truth_tables(const FuncExpr& f, int n_cap) {
    return ValueTable{f.field(), &f.value_table(n_cap)};
}

std::vector<std::uint8_t> ValueTable::trace_bits(Elt b) const {
    const Field& K = *field;
    const auto& M = K.dual_table();
    std::vector<std::uint8_t> bits(values->size());
    for (std::size_t x = 0; x < values->size(); ++x)
        bits[x] = static_cast<std::uint8_t>(std::popcount(b & M[(*values)[x]]) & 1);
    return bits;
}

TwoToOneVerdict is_two_to_one(const FuncExpr& f, int n_cap) {
    const auto& vt = f.value_table(n_cap);
    std::vector<std::uint32_t> fiber(vt.size(), 0);
    for (Elt v : vt) ++fiber[v];
    for (std::uint32_t a = 0; a < fiber.size(); ++a)
        if (fiber[a] != 0 && fiber[a] != 2) return {false, a, static_cast<int>(fiber[a])};
    return {true, 0, 2};
}

ImageSet defining_set(const FuncExpr& f, int n_cap) {
    const auto& vt = f.value_table(n_cap);
    std::vector<std::uint8_t> seen(vt.size(), 0);
    for (Elt v : vt) seen[v] = 1;
    ImageSet out;
    out.is_defining_set = true;
    for (std::uint32_t v = 1; v < seen.size(); ++v)
        if (seen[v]) out.elements.push_back(v);
    return out;
}

FuncExpr quadratize(const FuncExpr& f, const BigInt& d) { return f.substitute_power(d); }

int algebraic_degree(const FuncExpr& f) {
    const Field& K = *f.field();
    auto anf = f.value_table(Field::kMaxDegree);  // copy; Moebius transform is in place
    const std::uint32_t q = K.order();
    for (int j = 0; j < K.n(); ++j) {
        const std::uint32_t bit = 1u << j;
        for (std::uint32_t x = 0; x < q; ++x)
            if (x & bit) anf[x] ^= anf[x ^ bit];
    }
    int deg = 0;
    for (std::uint32_t x = 0; x < q; ++x)
        if (anf[x]) deg = std::max(deg, std::popcount(x));
    return deg;
}

bool is_quadratic(const FuncExpr& f) {
    if (auto mono = f.monomials()) {
        for (auto [e, c] : *mono)
            if (std::popcount(e) > 2) return false;
        return true;
    }
    return algebraic_degree(f) <= 2;
}

}  // namespace fwc::fexpr
