#include "pentachain/grassmann.hpp"

#include <algorithm>
#include <bit>

namespace pentachain {

namespace {

int mask_ctz(GenMask m) {
#if defined(PENTACHAIN_WIDE_MASK)
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
#else
    return std::countr_zero(m);
#endif
}

}  // namespace

GrassmannElement GrassmannElement::monomial(const std::vector<int>& gens_ascending, Scalar c) {
    GenMask m = 0;
    for (std::size_t k = 0; k < gens_ascending.size(); ++k) {
        const int g = gens_ascending[k];
        if (g < 0 || g >= kMaxGenerators) throw Error("generator index out of range");
        if (k > 0 && gens_ascending[k] <= gens_ascending[k - 1])
            throw Error("monomial generators must be strictly ascending");
        m |= gen_bit(g);
    }
    GrassmannElement x;
    x.add_term(m, std::move(c));
    return x;
}

int GrassmannElement::degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        const int d = mask_popcount(m);
        if (deg == -1)
            deg = d;
        else if (deg != d)
            return -1;
    }
    return deg;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

GrassmannElement operator-(const GrassmannElement& a) {
    GrassmannElement r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
    return r;
}

GrassmannElement operator*(const Scalar& c, const GrassmannElement& a) {
    GrassmannElement r;
    for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
    return r;
}

int interleave_sign(GenMask left, GenMask right) {
    // Count crossings: generators of `right` that must move past higher
    // generators of `left` when merging into ascending order.
    int crossings = 0;
    GenMask r = right;
    while (r) {
        const int i = mask_ctz(r);
        crossings += mask_popcount(mask_above(left, i));
        r &= r - 1;
    }
    return (crossings % 2 == 0) ? 1 : -1;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue;  // repeated generator, a_i^2 = 0
            const int sign = interleave_sign(ma, mb);
            Scalar c = ca * cb;
            r.add_term(ma | mb, sign > 0 ? c : -c);
        }
    }
    return r;
}

GrassmannElement berezin(const GrassmannElement& x, int i) {
    if (i < 0 || i >= kMaxGenerators) throw Error("generator index out of range");
    const GenMask bit = gen_bit(i);
    GrassmannElement r;
    for (const auto& [m, c] : x.terms()) {
        if (!(m & bit)) continue;
        const int passed = mask_popcount(mask_above(m, i));
        r.add_term(m & ~bit, (passed % 2 == 0) ? c : -c);
    }
    return r;
}

GrassmannElement berezin_multi(const GrassmannElement& x, const std::vector<int>& order) {
    GrassmannElement r = x;
    for (int g : order) r = berezin(r, g);
    return r;
}

namespace {

void check_gens(const ExactMatrix& a, const std::vector<int>& gens) {
    if (a.rows() > a.cols()) throw Error("gen_fun: more rows than columns");
    if (gens.size() != a.cols()) throw Error("gen_fun: one generator per column required");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k] < 0 || gens[k] >= kMaxGenerators) throw Error("generator index out of range");
        if (k > 0 && gens[k] <= gens[k - 1])
            throw Error("gen_fun: generators must be strictly ascending in column order");
    }
}

bool first_combination(std::vector<std::size_t>& c, std::size_t k) {
    c.resize(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return true;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

GrassmannElement gen_fun(const ExactMatrix& a, const std::vector<int>& gens) {
    check_gens(a, gens);
    const std::size_t r = a.rows(), n = a.cols();
    GrassmannElement out;
    if (r == 0) return GrassmannElement::one();
    std::vector<std::size_t> cols;
    const std::vector<std::size_t> rows = a.all_rows();
    first_combination(cols, r);
    do {
        const Scalar d = a.select(rows, cols).det();
        if (d == Scalar(0)) continue;
        GenMask m = 0;
        for (std::size_t j : cols) m |= gen_bit(gens[j]);
        out.add_term(m, d);
    } while (next_combination(cols, n));
    return out;
}

GrassmannElement gen_fun_inner(const ExactMatrix& a, const std::vector<int>& gens,
                               const std::vector<int>& inner_gens) {
    check_gens(a, gens);
    std::vector<std::size_t> inner_cols;
    {
        GenMask seen = 0;
        for (int g : inner_gens) {
            const auto it = std::find(gens.begin(), gens.end(), g);
            if (it == gens.end()) throw Error("gen_fun_inner: inner generator not a column");
            if (seen & gen_bit(g)) throw Error("gen_fun_inner: duplicate inner generator");
            seen |= gen_bit(g);
            inner_cols.push_back(static_cast<std::size_t>(it - gens.begin()));
        }
        std::sort(inner_cols.begin(), inner_cols.end());
    }
    const std::size_t r = a.rows(), n = a.cols(), ni = inner_cols.size();
    if (ni > r) return GrassmannElement();
    std::vector<std::size_t> outer_pool;
    for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (k < ni && inner_cols[k] == j)
            ++k;
        else
            outer_pool.push_back(j);
    }
    const std::size_t pick = r - ni;
    if (pick > outer_pool.size()) return GrassmannElement();

    GrassmannElement out;
    const std::vector<std::size_t> rows = a.all_rows();
    std::vector<std::size_t> sel;
    first_combination(sel, pick);
    std::vector<std::size_t> arranged;
    arranged.reserve(r);
    do {
        // det': outer columns ascending, then inner columns ascending.
        arranged.clear();
        for (std::size_t i : sel) arranged.push_back(outer_pool[i]);
        for (std::size_t c : inner_cols) arranged.push_back(c);
        const Scalar d = a.select(rows, arranged).det();
        if (d == Scalar(0)) continue;
        GenMask m = 0;
        for (std::size_t i : sel) m |= gen_bit(gens[outer_pool[i]]);
        out.add_term(m, d);
    } while (pick > 0 && next_combination(sel, outer_pool.size()));
    return out;
}

std::string format_element(const GrassmannElement& x,
                           const std::function<std::string(int)>& gen_name) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + scalar_io<Scalar>::str(c) + ")";
        for (int i = 0; i < kMaxGenerators; ++i)
            if (m & gen_bit(i)) s += " " + gen_name(i);
    }
    return s;
}

}  // namespace pentachain
