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

#ifndef TELECHAN_ORACLE_H
#define TELECHAN_ORACLE_H

#include <array>

#include "telechan/linalg.h"

/// Independent reference computations used by tests and the acceptance
/// runner. Nothing here goes through the state-vector engine.
namespace telechan::oracle {

using Coeffs = std::array<int, 8>;

/// Raw (4,5) amplitudes of branch (bell, canon) as a 4 x 4 map from
/// (alpha, beta, delta, gamma), by explicit summation over particles 1-3.
CMatrix contraction_map(const Coeffs &c, bool use_hadamard, int bell, int canon);

/// The bracketed integer combinations in a..h of the pre-Hadamard
/// expansion (scale 1/sqrt(2N)).
CMatrix expansion_plain(const Coeffs &c, int bell, int canon);

/// The bracketed integer combinations in a..h of the post-Hadamard
/// expansion (scale 1/(2 sqrt N)).
CMatrix expansion_hadamard(const Coeffs &c, int bell, int canon);

/// Singular values, largest first, of [[alpha, delta], [beta, gamma]].
std::array<double, 2> schmidt_coefficients(cplx alpha, cplx beta, cplx delta, cplx gamma);

/// |<a|b>| for equal-length amplitude vectors given as 4 x 1 or 1 x 4 data.
double overlap(const std::array<cplx, 4> &a, const std::array<cplx, 4> &b);

}  // namespace telechan::oracle

#endif  // TELECHAN_ORACLE_H
