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

namespace heckelab {

struct TriangularBasis;

/// Coordinates of an element in a unitriangular reference basis, obtained by
/// back-substitution along the dominance order.
struct Expansion {
    std::map<PairKey, Scalar> coeffs;
};
Expansion expand_in_basis(const Element& a, const TriangularBasis& basis);

struct IntegralityOutcome {
    bool ok = true;
    std::optional<std::pair<PairKey, Scalar>> witness;
    Expansion expansion;
};

/// Every reference coefficient lies in the local ring O (no pole).
IntegralityOutcome integrality_check(const Element& a, const TriangularBasis& basis);

/// Every reference coefficient lies in the maximal ideal (valuation >= 1);
/// i.e. the element maps to zero over the residue field.
IntegralityOutcome maximal_ideal_check(const Element& a, const TriangularBasis& basis);

/// Smallest m <= cap with y_r^m e(i) in m H(O); returns cap + 1 if none.
int minimal_nilpotent_exponent(const System& sys, const TriangularBasis& basis,
                               const std::vector<long>& i, int r, int cap);

}  // namespace heckelab
