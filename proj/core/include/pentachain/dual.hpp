#pragma once

#include <string>

#include "pentachain/matrix.hpp"

namespace pentachain {

// value + eps * differential with eps^2 = 0. Used to check that the linear
// maps of the chain complex really are the differentials of F2 and F3.
struct DualMatrix {
    ExactMatrix value;
    ExactMatrix diff;

    DualMatrix() = default;
    DualMatrix(ExactMatrix v) : value(std::move(v)), diff(value.rows(), value.cols()) {}  // NOLINT
    DualMatrix(ExactMatrix v, ExactMatrix d) : value(std::move(v)), diff(std::move(d)) {
        if (value.rows() != diff.rows() || value.cols() != diff.cols())
            throw Error("dual matrix shape mismatch");
    }

    static DualMatrix identity(std::size_t n) { return DualMatrix(ExactMatrix::identity(n)); }

    friend DualMatrix operator+(const DualMatrix& a, const DualMatrix& b) {
        return {a.value + b.value, a.diff + b.diff};
    }
    friend DualMatrix operator-(const DualMatrix& a, const DualMatrix& b) {
        return {a.value - b.value, a.diff - b.diff};
    }
    friend DualMatrix operator-(const DualMatrix& a) { return {-a.value, -a.diff}; }
    friend DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) {
        return {a.value * b.value, a.diff * b.value + a.value * b.diff};
    }

    DualMatrix inverse(const std::string& where = "dual inverse") const {
        ExactMatrix vi = value.inverse(where);
        ExactMatrix di = -(vi * diff * vi);
        return {std::move(vi), std::move(di)};
    }
};

}  // namespace pentachain
