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

namespace heckelab {

/// Verifies the undeformed quiver Hecke relations at the special point
/// (x = 0 over Q(zeta_e), or mod p in degenerate-p mode), two ways:
///  - every relation deviation lies in m H(O), checked through the psi-basis
///    expansion, and
///  - per-shape generator matrices in psi-coordinates specialise (no poles /
///    p-integral entries) and satisfy the relations over the residue field.
VerificationReport specialize_and_verify_klr(const System& sys, const TriangularBasis& psi);

}  // namespace heckelab
