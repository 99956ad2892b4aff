#pragma once

#include <cstdint>
#include <random>

#include "pentachain/matrix.hpp"
#include "pentachain/scalar.hpp"

namespace pentachain {

// Seeded sampler for bounded rationals. Avoids std::uniform_int_distribution
// so that a (seed, config) pair replays identically on any platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long long bound) {
        const long long num = int_in(-bound, bound);
        const long long den = int_in(1, bound);
        return Rational(num, den);
    }

    Rational nonzero_rational(long long bound) {
        for (;;) {
            Rational x = rational(bound);
            if (x != 0) return x;
        }
    }

    GaussianRational gaussian(long long bound) {
        Rational re = rational(bound);
        Rational im = (below(2) == 0) ? Rational(0) : rational(bound);
        return {std::move(re), std::move(im)};
    }

    Scalar scalar(long long bound) {
#if defined(PENTACHAIN_GAUSSIAN_SCALARS)
        return gaussian(bound);
#else
        return rational(bound);
#endif
    }

    ExactMatrix matrix(std::size_t rows, std::size_t cols, long long bound) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(bound);
        return m;
    }

    ExactMatrix invertible_matrix(std::size_t n, long long bound) {
        for (;;) {
            ExactMatrix m = matrix(n, n, bound);
            if (!(m.det() == Scalar(0))) return m;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace pentachain
