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

namespace heckelab {

/// The full list of deformed KLR relations, instantiated over every residue
/// sequence with a nonempty tableau class and every admissible position.
/// In linear-quiver mode the appendix analogues are used.
VerificationReport verify_deformation_relations(const System& sys);

/// psi_r e(i) built from the T/L/M route (the renormalised intertwiners)
/// against the beta-matrix route, for every i; also the right-handed route.
VerificationReport crosscheck_klr_lift(const System& sys);

struct NilpotencyObservation {
    std::vector<long> i;
    int r = 0;
    int bound = 0;     // d_r(i)
    int observed = 0;  // minimal exponent with y_r^m e(i) = 0 at the special point
};

/// The deformed product identity over O, the sharpened exponent data, and
/// (when e > n or e = 0) the level bound y_r^ell = 0.
VerificationReport nilpotency_checks(const System& sys,
                                     std::vector<NilpotencyObservation>* obs = nullptr);

}  // namespace heckelab
