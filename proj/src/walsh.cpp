#include "fwcodes/walsh.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace fwc::walsh {

std::uint64_t WalshSpectrum::total() const {
    std::uint64_t t = 0;
    for (auto [v, c] : counts) t += c;
    return t;
}

std::uint64_t WalshSpectrum::count_of(std::int64_t v) const {
    auto it = counts.find(v);
    return it == counts.end() ? 0 : it->second;
}

int WalshSpectrum::k_dimension() const {
    std::uint64_t c = count_of(std::int64_t(1) << n);
    if (c == 0 || (c & (c - 1)) != 0)
        fail(Err::NonPowerOfTwoCount, "count of the value 2^n is " + std::to_string(c));
    return std::countr_zero(c);
}

void fwht(std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0) fail(Err::BadLength, "FWHT length must be a power of two");
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                std::int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

namespace {

// P[u] = dual_coord(f(dual_inv(u))): with the sign table scattered into dual
// coordinates, one standard FWHT per b produces W_f(a,b) for every a at once.
std::vector<std::uint32_t> scatter_table(const FuncExpr& f, const Caps& caps) {
    const Field& K = *f.field();
    const auto& vt = f.value_table(std::max(caps.n_cap_slice, caps.n_cap_full));
    const auto& M = K.dual_table();
    const auto& Minv = K.dual_inverse_table();
    std::vector<std::uint32_t> P(K.order());
    for (std::uint32_t u = 0; u < K.order(); ++u) P[u] = M[vt[Minv[u]]];
    return P;
}

void spectrum_rows(const std::vector<std::uint32_t>& P, std::uint32_t b_begin, std::uint32_t b_end,
                   std::vector<std::uint64_t>& flat_counts) {
    const std::uint32_t q = static_cast<std::uint32_t>(P.size());
    std::vector<std::int64_t> t(q);
    for (std::uint32_t b = b_begin; b < b_end; ++b) {
        for (std::uint32_t u = 0; u < q; ++u) t[u] = 1 - 2 * (std::popcount(b & P[u]) & 1);
        fwht(t);
        for (std::uint32_t a = 0; a < q; ++a) ++flat_counts[static_cast<std::size_t>((t[a] + q) >> 1)];
    }
}

}  // namespace

WalshSpectrum spectrum_full(const FuncExpr& f, const Caps& caps, int jobs) {
    const Field& K = *f.field();
    if (K.n() > caps.n_cap_full)
        fail(Err::SizeCapExceeded, "full spectrum needs 2^" + std::to_string(2 * K.n()) + " work, cap is n <= " +
                                       std::to_string(caps.n_cap_full));
    const std::uint32_t q = K.order();
    const auto P = scatter_table(f, caps);

    unsigned hw = std::thread::hardware_concurrency();
    unsigned nt = jobs > 0 ? static_cast<unsigned>(jobs) : (hw ? hw : 1);
    nt = std::min<unsigned>(nt, q);
    if (K.n() < 8) nt = 1;

    std::vector<std::vector<std::uint64_t>> parts(nt, std::vector<std::uint64_t>(q + 1, 0));
    if (nt == 1) {
        spectrum_rows(P, 0, q, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) {
            std::uint32_t lo = static_cast<std::uint32_t>((std::uint64_t(q) * i) / nt);
            std::uint32_t hi = static_cast<std::uint32_t>((std::uint64_t(q) * (i + 1)) / nt);
            pool.emplace_back(spectrum_rows, std::cref(P), lo, hi, std::ref(parts[i]));
        }
        for (auto& th : pool) th.join();
    }

    WalshSpectrum out;
    out.kind = SpectrumKind::FullGrid;
    out.n = K.n();
    for (std::uint32_t idx = 0; idx <= q; ++idx) {
        std::uint64_t c = 0;
        for (const auto& p : parts) c += p[idx];
        if (c) out.counts[2 * static_cast<std::int64_t>(idx) - q] += c;
    }
    return out;
}

WalshSpectrum spectrum_b_slice(const FuncExpr& f, const Caps& caps) {
    const Field& K = *f.field();
    if (K.n() > caps.n_cap_slice)
        fail(Err::SizeCapExceeded,
             "b-slice needs 2^" + std::to_string(K.n()) + " tables, cap is n <= " + std::to_string(caps.n_cap_slice));
    const std::uint32_t q = K.order();
    const auto& vt = f.value_table(caps.n_cap_slice);
    const auto& M = K.dual_table();

    // W_f(b) = sum_v #f^{-1}(v) * (-1)^{tr(bv)}: scatter the image counts into
    // dual coordinates, then a single FWHT covers every b
    std::vector<std::int64_t> nv(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++nv[M[vt[x]]];
    fwht(nv);  // nv[b] = W_f(b)

    WalshSpectrum out;
    out.kind = SpectrumKind::BSlice;
    out.n = K.n();
    for (std::uint32_t b = 0; b < q; ++b) ++out.counts[nv[b]];
    return out;
}

std::vector<std::int64_t> b_slice_values(const FuncExpr& f, const Caps& caps) {
    const Field& K = *f.field();
    if (K.n() > caps.n_cap_slice)
        fail(Err::SizeCapExceeded, "b-slice needs 2^" + std::to_string(K.n()) + " tables");
    const std::uint32_t q = K.order();
    const auto& vt = f.value_table(caps.n_cap_slice);
    const auto& M = K.dual_table();
    std::vector<std::int64_t> nv(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++nv[M[vt[x]]];
    fwht(nv);  // nv[b] = sum_v count(v) * (-1)^tr(bv) = W_f(b)
    return nv;
}

std::vector<std::int64_t> walsh_row(const FuncExpr& f, Elt b, const Caps& caps) {
    const Field& K = *f.field();
    if (K.n() > caps.n_cap_slice)
        fail(Err::SizeCapExceeded, "row needs 2^" + std::to_string(K.n()) + " work");
    const std::uint32_t q = K.order();
    const auto& vt = f.value_table(caps.n_cap_slice);
    const auto& M = K.dual_table();
    const auto& Minv = K.dual_inverse_table();
    std::vector<std::int64_t> t(q);
    for (std::uint32_t u = 0; u < q; ++u) t[u] = 1 - 2 * (std::popcount(b & M[vt[Minv[u]]]) & 1);
    fwht(t);
    return t;  // t[a] = W_f(a,b)
}

std::int64_t walsh_value_naive(const FuncExpr& f, Elt a, Elt b) {
    const Field& K = *f.field();
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < K.order(); ++x) {
        int bit = K.trace(K.add(K.mul(a, x), K.mul(b, f.eval(x))));
        s += 1 - 2 * bit;
    }
    return s;
}

QuadKernel quad_kernel(const FuncExpr& f, Elt b) {
    const Field& K = *f.field();
    if (!fexpr::is_quadratic(f)) fail(Err::NotQuadratic, "kernel analysis needs algebraic degree <= 2");
    const int n = K.n();

    auto phi = [&](Elt x) { return K.trace(K.mul(b, f.eval(x))); };
    // rows of the bilinear-form matrix over the polynomial basis
    std::vector<std::uint32_t> rows(n, 0);
    std::vector<int> phi_basis(n);
    for (int i = 0; i < n; ++i) phi_basis[i] = phi(1u << i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = phi((1u << i) ^ (1u << j)) ^ phi_basis[i] ^ phi_basis[j];
            rows[i] |= static_cast<std::uint32_t>(v) << j;
            rows[j] |= static_cast<std::uint32_t>(v) << i;
        }

    // null space by Gaussian elimination
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if ((rows[r] >> col) & 1u) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
        pivot_col[rank] = col;
        ++rank;
    }

    QuadKernel out;
    out.b = b;
    out.dim = n - rank;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::uint32_t v = 1u << col;
        for (int r = 0; r < rank; ++r)
            if ((rows[r] >> col) & 1u) v |= 1u << pivot_col[r];
        out.basis.push_back(v);
    }
    return out;
}

int quad_rank(const FuncExpr& f, Elt b) { return f.field()->n() - quad_kernel(f, b).dim; }

}  // namespace fwc::walsh
