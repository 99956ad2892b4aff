#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pentachain/matrix.hpp"
#include "pentachain/scalar.hpp"

namespace pentachain {

// Generators are identified by their position 0..kMaxGenerators-1 in a
// fixed total order; a monomial is the bitmask of its generators, with the
// stored product always in ascending generator order.
#if defined(PENTACHAIN_WIDE_MASK)
using GenMask = unsigned __int128;
#else
using GenMask = std::uint64_t;
#endif

constexpr int kMaxGenerators = static_cast<int>(sizeof(GenMask) * 8);

inline GenMask gen_bit(int i) { return GenMask(1) << i; }
inline int mask_popcount(GenMask m) {
#if defined(PENTACHAIN_WIDE_MASK)
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
#else
    return __builtin_popcountll(m);
#endif
}
// Bits of m strictly above position i.
inline GenMask mask_above(GenMask m, int i) { return (i + 1 >= kMaxGenerators) ? GenMask(0) : (m >> (i + 1)) << (i + 1); }

// Finite sum of scalar-weighted monomials in anticommuting generators.
// Canonical form: strictly sorted monomial keys, no stored zeros.
class GrassmannElement {
public:
    GrassmannElement() = default;

    static GrassmannElement scalar(Scalar c) {
        GrassmannElement x;
        x.add_term(GenMask(0), std::move(c));
        return x;
    }
    static GrassmannElement one() { return scalar(Scalar(1)); }
    static GrassmannElement generator(int i) {
        GrassmannElement x;
        x.add_term(gen_bit(i), Scalar(1));
        return x;
    }
    static GrassmannElement monomial(const std::vector<int>& gens_ascending, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<GenMask, Scalar>& terms() const { return terms_; }
    Scalar coefficient(GenMask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    GenMask support() const {
        GenMask s = 0;
        for (const auto& [m, c] : terms_) s |= m;
        return s;
    }
    // -1 for non-homogeneous elements.
    int degree() const;

    void add_term(GenMask m, Scalar c) {
        if (c == Scalar(0)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == Scalar(0)) terms_.erase(it);
        }
    }

    friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator-(const GrassmannElement& a);
    friend GrassmannElement operator*(const Scalar& c, const GrassmannElement& a);
    // Associative anticommuting product; terms with a repeated generator vanish.
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) {
        return !(a == b);
    }

    bool equal_up_to_sign(const GrassmannElement& o) const { return *this == o || *this == -o; }

private:
    std::map<GenMask, Scalar> terms_;
};

// Parity of interleaving product a_M * a_N for disjoint masks: number of
// pairs (i in M, j in N) with j < i.
int interleave_sign(GenMask left, GenMask right);

// Single Berezin integral over generator i: strips a_i from each monomial
// containing it, with the sign of moving a_i to the rightmost position.
GrassmannElement berezin(const GrassmannElement& x, int i);

// Iterated single integrals, applying the first listed generator first.
GrassmannElement berezin_multi(const GrassmannElement& x, const std::vector<int>& order);

// Generating function of a rectangular matrix: sum over all column subsets
// of full row size of (minor) * (ascending product of the subset's
// generators). `gens[j]` is the generator of column j and must be strictly
// ascending so that column order and generator order agree.
GrassmannElement gen_fun(const ExactMatrix& a, const std::vector<int>& gens);

// Restricted generating function with a set of inner columns: sums over
// subsets containing all inner columns; minors are taken with the inner
// columns moved to the right (order preserved within each group), and the
// inner generators do not appear in the result.
GrassmannElement gen_fun_inner(const ExactMatrix& a, const std::vector<int>& gens,
                               const std::vector<int>& inner_gens);

std::string format_element(const GrassmannElement& x,
                           const std::function<std::string(int)>& gen_name);

}  // namespace pentachain
