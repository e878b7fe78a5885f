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
#include "report/report.hpp"

namespace heckelab {

/// y^lambda f^lambda: the product of renormalised (y_r - [c_alpha - i_r])
/// factors over Add_lambda(r), times the residue idempotent of i^lambda.
Element y_lambda_element(const System& sys, int shape);

/// A cellular basis given in f-coordinates, unitriangular with respect to
/// the pair dominance order; elems are sorted ascending (least dominant
/// first) by the universe's pair order key.
struct TriangularBasis {
    const System* sys = nullptr;
    std::vector<std::pair<PairKey, Element>> elems;
    std::map<PairKey, int> index;

    const Element& at(const PairKey& k) const { return elems[(std::size_t)index.at(k)].second; }
};

/// The psi basis of H(O): psi_{st} = (psi_{d(s)})^diamond y^lam f^lam psi_{d(t)}
/// with the canonical reduced words. Diamond systems only.
TriangularBasis build_psi_basis(const System& sys);

/// Unitriangularity over the f-basis and the diamond symmetry of the basis.
VerificationReport psi_triangularity_report(const System& sys, const TriangularBasis& psi);

/// Degree bookkeeping at x = 0: for g in {e(i), y_r, psi_r e(i)} the product
/// psi_{st} g expands with every surviving term in degree
/// deg s + deg t + deg g.
VerificationReport graded_consistency_check(const System& sys, const TriangularBasis& psi);

}  // namespace heckelab
