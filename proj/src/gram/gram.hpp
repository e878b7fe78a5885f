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

#include "algebra/verify.hpp"
#include "graded/psi.hpp"
#include "util/matrix.hpp"

namespace heckelab {

/// Murphy basis vectors of the Specht module S^lambda in f-coordinates;
/// row t = coefficients of m_t (star Murphy system).
std::vector<std::vector<Scalar>> murphy_vectors(const System& sys, int shape);

/// Unitriangularity of the Murphy vectors (a_{t,t} = 1, support above t).
VerificationReport murphy_unitriangularity(const System& sys);

/// The full Murphy cellular basis m_{st} = T_{d(s)}^* m_lam T_{d(t)} as
/// algebra elements (star systems with the Murphy gamma seed).
TriangularBasis build_murphy_basis(const System& sys);

enum class GramVariant { MurphyGeneric, DegenerateT1, PsiGraded };

GramVariant gram_variant_from_name(const std::string& name);
std::string gram_variant_name(GramVariant v);

struct GramShapeReport {
    std::string shape;
    bool pass = true;
    json details;
};

/// Exact Gram determinant of one Specht module with all cross-checks:
///   MurphyGeneric: generic t over Z[t,1/t]; factorization
///                  t^N prod Phi_e^{deg_e(lam)} against the degree recursion
///                  and the product of gammas.
///   DegenerateT1:  t = 1; integer determinant = prod p^{Deg_p(lam)}.
///   PsiGraded:     graded form over K[x]_(x); x-valuation = deg_e(lam),
///                  residue blocks, unit cross-check.
/// MurphyGeneric/DegenerateT1 need a GenericT Murphy-seeded star system with
/// strict charge gaps; PsiGraded a CycloLocal diamond system.
GramShapeReport gram_det_report(const System& sys, int shape, GramVariant v);

VerificationReport gram_suite(const System& sys, GramVariant v, int jobs = 1,
                              std::vector<GramShapeReport>* out = nullptr);

/// deg_e(lam) >= 0 and Deg_p(lam) >= 0 sweeps; also deg_e = deg_0 for e
/// beyond the content spread.
VerificationReport positivity_sweep(int n, int level, const std::vector<long>& kappa);

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
template <class K>
Poly<K> bareiss_det(std::vector<std::vector<Poly<K>>> m);

}  // namespace heckelab
