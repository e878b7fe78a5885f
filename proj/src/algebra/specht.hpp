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

#include "algebra/element.hpp"
#include "util/matrix.hpp"

namespace heckelab {

/// Right action of the generators on the Specht module S^lambda in the
/// seminormal basis {f_t}. Row a, column b: coefficient of f_b in f_a * g.
struct SpechtModule {
    const System* sys = nullptr;
    int shape = -1;
    int dim = 0;
    std::vector<Matrix<Scalar>> T;    // r = 1..n-1
    std::vector<Matrix<Scalar>> L;    // k = 1..n
    std::vector<Matrix<Scalar>> psi;  // r = 1..n-1 (idempotent-subring modes)
    std::vector<Matrix<Scalar>> y;    // r = 1..n

    const Matrix<Scalar>& T_mat(int r) const { return T[(std::size_t)r - 1]; }
    const Matrix<Scalar>& L_mat(int k) const { return L[(std::size_t)k - 1]; }
    const Matrix<Scalar>& psi_mat(int r) const { return psi[(std::size_t)r - 1]; }
    const Matrix<Scalar>& y_mat(int r) const { return y[(std::size_t)r - 1]; }
};

SpechtModule specht_action(const System& sys, int shape);

}  // namespace heckelab
