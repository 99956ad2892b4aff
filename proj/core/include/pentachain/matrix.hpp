#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "pentachain/errors.hpp"
#include "pentachain/scalar.hpp"

namespace pentachain {

// Dense matrix over an exact field. All operations are pure; values are
// safe to share across threads once constructed.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw Error("matrix entry count mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error("ragged matrix initializer");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
        return e_[i * cols_ + j];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == F(0))) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const F& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Rows/columns extracted in the given order; index sets must be
    // strictly ascending and in range.
    Matrix submatrix(const std::vector<std::size_t>& row_set,
                     const std::vector<std::size_t>& col_set) const {
        check_index_set(row_set, rows_, "row");
        check_index_set(col_set, cols_, "column");
        return select(row_set, col_set);
    }

    // Like submatrix but without the ascending requirement (used for the
    // det' column arrangement of generating functions).
    Matrix select(const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set) const {
        Matrix r(row_set.size(), col_set.size());
        for (std::size_t i = 0; i < row_set.size(); ++i)
            for (std::size_t j = 0; j < col_set.size(); ++j)
                r(i, j) = e_[row_set[i] * cols_ + col_set[j]];
        return r;
    }

    std::vector<std::size_t> all_rows() const { return iota(rows_); }
    std::vector<std::size_t> all_cols() const { return iota(cols_); }

    // Fraction-free (Bareiss) elimination. Rows are first scaled to clear
    // denominators, so all intermediates are (Gaussian) integers and every
    // division is exact.
    F det() const {
        if (!square()) throw Error("determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return F(1);
        Matrix m = *this;
        F scale(1);
        for (std::size_t i = 0; i < n; ++i) {
            BigInt l = 1;
            for (std::size_t j = 0; j < n; ++j)
                l = boost::multiprecision::lcm(l, denominator_of(m(i, j)));
            if (l != 1) {
                const F lf = scalar_from_bigint<F>(l);
                for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j) * lf;
                scale = scale * lf;
            }
        }
        F prev(1);
        bool neg = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t piv = k;
            while (piv < n && m(piv, k) == F(0)) ++piv;
            if (piv == n) return F(0);
            if (piv != k) {
                m.swap_rows(piv, k);
                neg = !neg;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = F(0);
            }
            prev = m(k, k);
        }
        F d = m(n - 1, n - 1) / scale;
        return neg ? F(-d) : d;
    }

    Matrix inverse(const std::string& where = "inverse") const {
        if (!square()) throw Error("inverse of non-square matrix");
        const std::size_t n = rows_;
        Matrix m = *this;
        Matrix inv = identity(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && m(piv, k) == F(0)) ++piv;
            if (piv == n) throw SingularMatrixError(where);
            if (piv != k) {
                m.swap_rows(piv, k);
                inv.swap_rows(piv, k);
            }
            const F d = m(k, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(k, j) = m(k, j) / d;
                inv(k, j) = inv(k, j) / d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k || m(i, k) == F(0)) continue;
                const F c = m(i, k);
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = m(i, j) - c * m(k, j);
                    inv(i, j) = inv(i, j) - c * inv(k, j);
                }
            }
        }
        return inv;
    }

    struct Echelon {
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_rows;  // rows of the original matrix
        std::vector<std::size_t> pivot_cols;
    };

    // Gaussian elimination with column-major pivot scan; pivot_rows index
    // the original matrix (the selected rows form an invertible square
    // submatrix on pivot_cols).
    Echelon echelon() const {
        Matrix m = *this;
        std::vector<std::size_t> row_of(rows_);
        for (std::size_t i = 0; i < rows_; ++i) row_of[i] = i;
        Echelon out;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, c) == F(0)) ++piv;
            if (piv == rows_) continue;
            if (piv != r) {
                m.swap_rows(piv, r);
                std::swap(row_of[piv], row_of[r]);
            }
            out.pivot_rows.push_back(row_of[r]);
            out.pivot_cols.push_back(c);
            const F d = m(r, c);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, c) == F(0)) continue;
                const F f = m(i, c) / d;
                for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(r, j);
            }
            ++r;
        }
        out.rank = r;
        return out;
    }

    std::size_t rank() const { return echelon().rank; }

    // Solves A x = b exactly; std::nullopt when inconsistent. For
    // underdetermined systems returns one solution (free variables zero).
    std::optional<Matrix> solve(const Matrix& b) const {
        if (b.rows_ != rows_) throw Error("solve: shape mismatch");
        Matrix m(rows_, cols_ + b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, cols_ + j) = b(i, j);
        }
        std::vector<std::size_t> pivot_col_of_row;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, c) == F(0)) ++piv;
            if (piv == rows_) continue;
            if (piv != r) m.swap_rows(piv, r);
            const F d = m(r, c);
            for (std::size_t j = c; j < m.cols_; ++j) m(r, j) = m(r, j) / d;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, c) == F(0)) continue;
                const F f = m(i, c);
                for (std::size_t j = c; j < m.cols_; ++j) m(i, j) = m(i, j) - f * m(r, j);
            }
            pivot_col_of_row.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!(m(i, cols_ + j) == F(0))) return std::nullopt;
        Matrix x(cols_, b.cols_);
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                x(pivot_col_of_row[i], j) = m(i, cols_ + j);
        return x;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
    }

private:
    static std::vector<std::size_t> iota(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i;
        return v;
    }
    static void check_index_set(const std::vector<std::size_t>& s, std::size_t bound,
                                const char* what) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] >= bound) throw Error(std::string(what) + " index out of range");
            if (k > 0 && s[k] <= s[k - 1])
                throw Error(std::string(what) + " index set not strictly ascending");
        }
    }
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> e_;
};

using ExactMatrix = Matrix<Scalar>;

}  // namespace pentachain
