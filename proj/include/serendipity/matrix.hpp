/*
   Copyright 2026 The serendipity-fe Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SERENDIPITY_MATRIX_HPP
#define SERENDIPITY_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace serendipity {

/// Dense row-major matrix of exact rationals.
///
/// Rank, determinant and solves run fraction-free (Bareiss) on an integer
/// copy obtained by clearing each row's denominators; the row scaling does
/// not change rank or the solution set. rref() and nullspace() use ordinary
/// rational Gauss-Jordan and serve as the independent route.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product shape mismatch");
        }
        RationalMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    [[nodiscard]] RationalMatrix transpose() const
    {
        RationalMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    /// Exact rank by fraction-free elimination with first-nonzero pivoting.
    [[nodiscard]] std::size_t rank() const
    {
        auto m = integer_rows(*this, nullptr);
        return bareiss_forward(m, cols_).rank;
    }

    /// Exact determinant (square matrices only).
    [[nodiscard]] Rational determinant() const
    {
        require_square("determinant");
        Integer scale = 1;
        auto m = integer_rows(*this, &scale);
        const auto result = bareiss_forward(m, cols_);
        if (result.rank < rows_) {
            return Rational(0);
        }
        Rational det(rows_ == 0 ? Integer(1) : result.last_pivot);
        if (result.swaps % 2 == 1) {
            det = -det;
        }
        det /= scale;
        return det;
    }

    /// Solves A·X = B exactly for square nonsingular A by fraction-free
    /// Gauss-Jordan. Throws std::domain_error if A is singular.
    [[nodiscard]] RationalMatrix solve(const RationalMatrix& rhs) const
    {
        require_square("solve");
        if (rhs.rows_ != rows_) {
            throw std::invalid_argument("right-hand side has wrong number of rows");
        }
        const std::size_t n = rows_;
        const std::size_t width = n + rhs.cols_;
        RationalMatrix augmented(n, width);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                augmented(i, j) = (*this)(i, j);
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                augmented(i, n + j) = rhs(i, j);
            }
        }
        auto m = integer_rows(augmented, nullptr);
        Integer prev = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            while (pivot < n && m[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                throw std::domain_error("singular matrix in exact solve");
            }
            std::swap(m[k], m[pivot]);
            const Integer& pkk = m[k][k];
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k) {
                    continue;
                }
                Integer& mik_ref = m[i][k];
                const Integer mik = mik_ref;
                for (std::size_t j = 0; j < width; ++j) {
                    if (j == k) {
                        continue;
                    }
                    Integer& target = m[i][j];
                    target *= pkk;
                    target -= mik * m[k][j];
                    mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
                }
                mik_ref = 0;
            }
            prev = pkk;
        }
        RationalMatrix out(n, rhs.cols_);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) = Rational(m[i][n + j], m[i][i]);
                out(i, j).canonicalize();
            }
        }
        return out;
    }

    [[nodiscard]] RationalMatrix inverse() const { return solve(identity(rows_)); }

    /// Reduced row echelon form by rational Gauss-Jordan; pivot columns are
    /// appended to `pivots` when given.
    [[nodiscard]] RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const
    {
        RationalMatrix m = *this;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && m(p, col) == 0) {
                ++p;
            }
            if (p == rows_) {
                continue;
            }
            m.swap_rows(p, row);
            const Rational inv = 1 / m(row, col);
            for (std::size_t j = col; j < cols_; ++j) {
                m(row, j) *= inv;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || m(i, col) == 0) {
                    continue;
                }
                const Rational factor = m(i, col);
                for (std::size_t j = col; j < cols_; ++j) {
                    m(i, j) -= factor * m(row, j);
                }
            }
            if (pivots != nullptr) {
                pivots->push_back(col);
            }
            ++row;
        }
        return m;
    }

    /// Basis of {x : A·x = 0}, one vector per free column of the RREF.
    [[nodiscard]] std::vector<std::vector<Rational>> nullspace() const
    {
        std::vector<std::size_t> pivots;
        const RationalMatrix r = rref(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) {
            is_pivot[p] = true;
        }
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) {
                continue;
            }
            std::vector<Rational> v(cols_);
            v[free] = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k) {
                v[pivots[k]] = -r(k, free);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Positive definiteness of a symmetric matrix: every pivot of
    /// elimination without row exchanges must be strictly positive.
    [[nodiscard]] bool is_positive_definite() const
    {
        require_square("positive-definiteness test");
        RationalMatrix m = *this;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        for (std::size_t k = 0; k < rows_; ++k) {
            if (m(k, k) <= 0) {
                return false;
            }
            for (std::size_t i = k + 1; i < rows_; ++i) {
                if (m(i, k) == 0) {
                    continue;
                }
                const Rational factor = m(i, k) / m(k, k);
                for (std::size_t j = k; j < cols_; ++j) {
                    m(i, j) -= factor * m(k, j);
                }
            }
        }
        return true;
    }

    /// A·v for a column vector v.
    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const
    {
        if (v.size() != cols_) {
            throw std::invalid_argument("vector length mismatch");
        }
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if ((*this)(i, j) != 0 && v[j] != 0) {
                    out[i] += (*this)(i, j) * v[j];
                }
            }
        }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

private:
    using IntegerRows = std::vector<std::vector<Integer>>;

    struct ForwardResult {
        std::size_t rank = 0;
        std::size_t swaps = 0;
        Integer last_pivot = 1;
    };

    void require_square(const char* what) const
    {
        if (rows_ != cols_) {
            throw std::invalid_argument(std::string(what) + " requires a square matrix");
        }
    }

    // Multiplies each row by the lcm of its denominators. The product of the
    // row multipliers is returned through `scale` when requested.
    static IntegerRows integer_rows(const RationalMatrix& a, Integer* scale)
    {
        IntegerRows m(a.rows_, std::vector<Integer>(a.cols_));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Integer lcm = 1;
            for (std::size_t j = 0; j < a.cols_; ++j) {
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
            }
            for (std::size_t j = 0; j < a.cols_; ++j) {
                m[i][j] = a(i, j).get_num() * (lcm / a(i, j).get_den());
            }
            if (scale != nullptr) {
                *scale *= lcm;
            }
        }
        return m;
    }

    // Bareiss forward elimination over the first `cols` columns. Columns
    // with no available pivot are skipped, so the result gives the rank of
    // rectangular and singular matrices as well.
    static ForwardResult bareiss_forward(IntegerRows& m, std::size_t cols)
    {
        ForwardResult result;
        const std::size_t rows = m.size();
        Integer prev = 1;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t p = row;
            while (p < rows && m[p][col] == 0) {
                ++p;
            }
            if (p == rows) {
                continue;
            }
            if (p != row) {
                std::swap(m[p], m[row]);
                ++result.swaps;
            }
            const Integer& pivot = m[row][col];
            for (std::size_t i = row + 1; i < rows; ++i) {
                const Integer mic = m[i][col];
                for (std::size_t j = col + 1; j < cols; ++j) {
                    Integer& target = m[i][j];
                    target *= pivot;
                    target -= mic * m[row][j];
                    mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
                }
                m[i][col] = 0;
            }
            prev = pivot;
            result.last_pivot = pivot;
            ++row;
        }
        result.rank = row;
        return result;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace serendipity

#endif // SERENDIPITY_MATRIX_HPP
