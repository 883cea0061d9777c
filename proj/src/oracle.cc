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

#include "telechan/oracle.h"

#include <cmath>

#include <Eigen/Dense>

namespace telechan::oracle {
namespace {

// Channel amplitude of |x3 x4 x5> before normalization.
int channel_coeff(const Coeffs &c, int x3, int x4, int x5) {
    // a|000> b|100> c|010> d|001> e|110> f|101> g|011> h|111>
    static constexpr int kLetter[2][2][2] = {{{0, 3}, {2, 6}}, {{1, 5}, {4, 7}}};
    return c[kLetter[x3][x4][x5]];
}

double support(const Coeffs &c) {
    int n = 0;
    for (int v : c) {
        n += v != 0;
    }
    return n;
}

// Bell vectors on (2,3), indexed [bell][x2][x3].
double bell_amp(int bell, int x2, int x3) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (bell) {
        case 0:
            return x2 == x3 ? r : 0;
        case 1:
            return x2 == x3 ? (x2 == 0 ? r : -r) : 0;
        case 2:
            return x2 != x3 ? r : 0;
        default:
            return x2 != x3 ? (x2 == 0 ? r : -r) : 0;
    }
}

// Input amplitude of |x1 x2> for parameter slot (alpha, beta, delta, gamma).
int input_slot(int x1, int x2) {
    return x1 == 0 ? (x2 == 0 ? 0 : 2) : (x2 == 0 ? 1 : 3);
}

}  // namespace

CMatrix contraction_map(const Coeffs &c, bool use_hadamard, int bell, int canon) {
    CMatrix m(4, 4);
    const double norm = 1.0 / std::sqrt(support(c));
    const double h = 1.0 / std::sqrt(2.0);
    for (int x4 = 0; x4 < 2; x4++) {
        for (int x5 = 0; x5 < 2; x5++) {
            for (int x2 = 0; x2 < 2; x2++) {
                for (int x3 = 0; x3 < 2; x3++) {
                    double b = bell_amp(bell, x2, x3);
                    double ch = channel_coeff(c, x3, x4, x5) * norm;
                    if (b == 0 || ch == 0) {
                        continue;
                    }
                    for (int x1 = 0; x1 < 2; x1++) {
                        // <canon| H |x1> or <canon|x1>.
                        double p1 = use_hadamard ? (canon == 1 && x1 == 1 ? -h : h) : (canon == x1 ? 1.0 : 0.0);
                        m(2 * x4 + x5, input_slot(x1, x2)) += p1 * b * ch;
                    }
                }
            }
        }
    }
    return m;
}

CMatrix expansion_plain(const Coeffs &c, int bell, int canon) {
    const auto [a, b, cc, d, e, f, g, hh] = c;
    const int s = bell % 2 == 0 ? 1 : -1;
    const bool swap = bell >= 2;
    // Kets in Bob index order |00>, |01>, |10>, |11>, as (x, y) letter pairs.
    const std::array<std::array<int, 2>, 4> xy = {{{a, b}, {d, f}, {cc, e}, {g, hh}}};
    const int first = canon == 0 ? 0 : 1;   // alpha or beta
    const int second = canon == 0 ? 2 : 3;  // delta or gamma
    CMatrix m(4, 4);
    for (int r = 0; r < 4; r++) {
        int x = swap ? xy[r][1] : xy[r][0];
        int y = swap ? xy[r][0] : xy[r][1];
        m(r, first) = x;
        m(r, second) = s * y;
    }
    return m;
}

CMatrix expansion_hadamard(const Coeffs &c, int bell, int canon) {
    const auto [a, b, cc, d, e, f, g, hh] = c;
    const int s = bell % 2 == 0 ? 1 : -1;
    const int t = canon == 0 ? 1 : -1;
    const bool swap = bell >= 2;
    const std::array<std::array<int, 2>, 4> xy = {{{a, b}, {d, f}, {cc, e}, {g, hh}}};
    CMatrix m(4, 4);
    for (int r = 0; r < 4; r++) {
        int x = swap ? xy[r][1] : xy[r][0];
        int y = swap ? xy[r][0] : xy[r][1];
        // (alpha + t beta) x + s (delta + t gamma) y
        m(r, 0) = x;
        m(r, 1) = t * x;
        m(r, 2) = s * y;
        m(r, 3) = s * t * y;
    }
    return m;
}

std::array<double, 2> schmidt_coefficients(cplx alpha, cplx beta, cplx delta, cplx gamma) {
    Eigen::Matrix2cd m;
    m << alpha, delta, beta, gamma;
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    auto s = svd.singularValues();
    return {s(0), s(1)};
}

double overlap(const std::array<cplx, 4> &a, const std::array<cplx, 4> &b) {
    cplx sum = 0;
    for (int i = 0; i < 4; i++) {
        sum += std::conj(a[i]) * b[i];
    }
    return std::abs(sum);
}

}  // namespace telechan::oracle
