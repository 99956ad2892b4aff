#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pentachain/errors.hpp"

namespace pentachain {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with positive denominator; cpp_rational
// maintains that canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& x) { return x.str(); }

// Accepts "p", "p/q", optional leading sign. Canonicalizes.
inline Rational rational_from_string(std::string_view s) {
    auto bad = [&] { throw ParseError("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    const auto parse_int = [&](std::string_view t) {
        if (t.empty()) bad();
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) bad();
        for (std::size_t i = k; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') bad();
        BigInt v{std::string(t.substr(k))};
        return t[0] == '-' ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    const BigInt num = parse_int(s.substr(0, slash));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
}

// Gaussian rational p/q + r/s*i. Only used when the library is configured
// with PENTACHAIN_GAUSSIAN_SCALARS, but always available for tests.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational norm = b.re * b.re + b.im * b.im;
        if (norm == 0) throw Error("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline std::string to_string(const GaussianRational& x) {
    if (x.im == 0) return x.re.str();
    std::string s = x.re.str();
    if (x.im > 0)
        s += "+" + x.im.str() + "*i";
    else
        s += "-" + Rational(-x.im).str() + "*i";
    return s;
}

inline GaussianRational gaussian_from_string(std::string_view s) {
    const auto star = s.rfind("*i");
    if (star == std::string_view::npos) return GaussianRational(rational_from_string(s));
    if (star + 2 != s.size())
        throw ParseError("bad Gaussian rational: '" + std::string(s) + "'");
    std::string_view head = s.substr(0, star);
    // Split at the sign separating the real and imaginary parts: the last
    // '+'/'-' not at position 0 and not part of a numerator sign after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = head.size(); k-- > 1;) {
        if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/' && head[k - 1] != '+' &&
            head[k - 1] != '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        throw ParseError("bad Gaussian rational: '" + std::string(s) + "'");
    Rational re = rational_from_string(head.substr(0, split));
    Rational im = rational_from_string(head.substr(split + 1));
    if (head[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

#if defined(PENTACHAIN_GAUSSIAN_SCALARS)
using Scalar = GaussianRational;
#else
using Scalar = Rational;
#endif

// Uniform access for the two supported fields.
template <class F>
struct scalar_io;

template <>
struct scalar_io<Rational> {
    static std::string str(const Rational& x) { return to_string(x); }
    static Rational parse(std::string_view s) { return rational_from_string(s); }
};

template <>
struct scalar_io<GaussianRational> {
    static std::string str(const GaussianRational& x) { return to_string(x); }
    static GaussianRational parse(std::string_view s) { return gaussian_from_string(s); }
};

inline bool canonical_sign_negative(const Rational& x) { return x < 0; }
inline bool canonical_sign_negative(const GaussianRational& x) {
    if (x.re != 0) return x.re < 0;
    return x.im < 0;
}

// Least common denominator, used to clear rows to (Gaussian) integers
// before fraction-free elimination.
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }
inline BigInt denominator_of(const GaussianRational& x) {
    return boost::multiprecision::lcm(boost::multiprecision::denominator(x.re),
                                      boost::multiprecision::denominator(x.im));
}

template <class F>
F scalar_from_bigint(const BigInt& v) {
    return F(Rational(v));
}
template <>
inline Rational scalar_from_bigint<Rational>(const BigInt& v) {
    return Rational(v);
}

// |x| up to the canonical sign: the representative with non-negative
// leading component. Invariants are defined up to an overall sign.
template <class F>
F canonical_abs(const F& x) {
    return canonical_sign_negative(x) ? F(-x) : x;
}

}  // namespace pentachain
