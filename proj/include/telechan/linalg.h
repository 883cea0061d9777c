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

#ifndef TELECHAN_LINALG_H
#define TELECHAN_LINALG_H

#include <complex>
#include <cstddef>
#include <vector>

namespace telechan {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for registers of at most five
/// qubits, so no attempt is made at blocking or vectorization.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx> &data() const { return data_; }

    CMatrix adjoint() const;
    std::vector<cplx> column(std::size_t c) const;
    double frobenius_norm() const;
    double max_abs() const;

    CMatrix &operator*=(cplx s);
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
    friend CMatrix operator+(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b);
    friend bool operator==(const CMatrix &a, const CMatrix &b) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product; the left factor indexes the most significant block.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Largest elementwise |a - b|. Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

}  // namespace telechan

#endif  // TELECHAN_LINALG_H
