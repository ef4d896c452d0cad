/*
   Copyright 2026 cenda developers

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

#ifndef CENDA_MATRIX_HPP
#define CENDA_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cenda {

/// Dense matrix over an exact ring type. T{} must be the ring zero.
/// Matrices here stay small (sizes up to ~6), so determinants use plain
/// cofactor expansion.
template <class T>
class Matrix {
   public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : r_(rows), c_(cols), e_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return e_[i * c_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return e_[i * c_ + j];
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k)
                for (std::size_t j = 0; j < b.c_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    template <class S>
    Matrix<S> map(S (*f)(const T&)) const {
        Matrix<S> r(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    T det() const {
        if (!is_square()) throw std::invalid_argument("Matrix: determinant of a non-square matrix");
        return det_rec(*this);
    }

   private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= r_ || j >= c_) throw std::out_of_range("Matrix: index out of range");
    }
    void check_same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    static T det_rec(const Matrix& m) {
        std::size_t n = m.rows();
        if (n == 1) return m.at(0, 0);
        T acc{};
        for (std::size_t j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t jj = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    minor.at(i - 1, jj++) = m.at(i, k);
                }
            }
            T term = m.at(0, j) * det_rec(minor);
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }

    std::size_t r_, c_;
    std::vector<T> e_;
};

}  // namespace cenda

#endif
