// Copyright 2026 The telechan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "telechan/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace telechan {

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("CMatrix: data length does not match shape");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

std::vector<cplx> CMatrix::column(std::size_t c) const {
    std::vector<cplx> out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

double CMatrix::frobenius_norm() const {
    double t = 0;
    for (const auto &v : data_) {
        t += std::norm(v);
    }
    return std::sqrt(t);
}

double CMatrix::max_abs() const {
    double t = 0;
    for (const auto &v : data_) {
        t = std::max(t, std::abs(v));
    }
    return t;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &v : data_) {
        v *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("CMatrix: inner dimensions differ");
    }
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; r++) {
        for (std::size_t k = 0; k < a.cols_; k++) {
            cplx x = a(r, k);
            if (x == cplx{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("CMatrix: shape mismatch");
    }
    CMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); k++) {
        out.data_[k] += b.data_[k];
    }
    return out;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    return a + (-1.0 * b);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    return (a - b).max_abs();
}

}  // namespace telechan
