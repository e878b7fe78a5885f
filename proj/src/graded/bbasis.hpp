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

#include "graded/psi.hpp"

namespace heckelab {

/// One distinguished basis element: B_{st} = f_{st} + sum p^{st}_{uv}(x^{-1})
/// f_{uv} with purely principal off-diagonal coefficients, plus its x = 0
/// expansion in the specialised psi basis.
struct BBasisElement {
    PairKey key;
    Element f_coords;
    std::map<PairKey, Scalar> psi_at_zero;  // B tensor 1_K in the psi basis
    std::map<PairKey, Scalar> b_prime;      // homogeneous component coefficients
};

struct BBasis {
    std::vector<BBasisElement> elems;  // in construction order (most dominant first)
    std::map<PairKey, int> index;
    const BBasisElement& at(const PairKey& k) const {
        return elems[(std::size_t)index.at(k)];
    }
};

/// Gaussian elimination with principal-part splitting over K[x]_(x)
/// (CycloLocal diamond systems). `alt_order` switches the total-order
/// refinement used to drive the elimination.
BBasis build_b_basis(const System& sys, const TriangularBasis& psi, bool alt_order = false);

/// Existence/shape checks, uniqueness under the two order refinements, the
/// characteristic-zero valuation bound, diamond symmetry, the homogeneous
/// B' component, and the cellularity smoke test.
VerificationReport b_basis_reports(const System& sys, const TriangularBasis& psi,
                                   const BBasis& primary, const BBasis& alternate);

}  // namespace heckelab
