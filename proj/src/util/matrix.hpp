/*
   Copyright 2026 the heckelab developers

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

#pragma once

#include <stdexcept>
#include <vector>

namespace heckelab {

/// Small dense matrix over an exact ring; the additive zero is supplied
/// explicitly so that mode-tagged scalars work.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols, T zero)
        : rows_(rows), cols_(cols), zero_(zero), a_((std::size_t)(rows * cols), zero) {}

    static Matrix identity(int n, T zero, T one) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[(std::size_t)(i * cols_ + j)]; }
    const T& operator()(int i, int j) const { return a_[(std::size_t)(i * cols_ + j)]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::domain_error("Matrix: size mismatch");
        Matrix r(x.rows_, y.cols_, x.zero_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& v = x(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const T& w = y(k, j);
                    if (!w.is_zero()) r(i, j) += v * w;
                }
            }
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& y) {
        Matrix r = y;
        for (auto& v : r.a_) v = c * v;
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    const T& zero() const { return zero_; }

   private:
    int rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> a_;
};

}  // namespace heckelab
