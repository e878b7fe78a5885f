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

#include <functional>
#include <optional>

#include "algebra/element.hpp"
#include "report/report.hpp"

namespace heckelab {

json instance_json(const System& sys, std::initializer_list<std::pair<const char*, json>> kv);
json tab_json(const System& sys, TabRef t);
/// Null when equal, else a witness object naming the first differing pair.
json element_diff_witness(const Element& a, const Element& b);

/// Coefficient-value overrides for fault-injection: (gid, r) -> value.
using CoeffOverride = std::function<std::optional<Scalar>(TabRef, int)>;

/// Checks the seminormal coefficient system axioms: the braid condition (a),
/// the commuting condition (b) and the quadratic/product condition (c) (the
/// beta product table for diamond systems, the appendix product for
/// linear-quiver systems) on every standard tableau.
VerificationReport validate_sncs(const System& sys, const CoeffOverride& override = nullptr);

/// Every defining relation of the cyclotomic Hecke algebra, as exact element
/// identities in the regular representation.
VerificationReport verify_hecke_relations(const System& sys);

/// F_t from the Jucys-Murphy product formula vs the basis idempotent.
bool crosscheck_idempotent_formula(const System& sys, TabRef t);

/// Idempotent completeness/orthogonality, involution order 2, gamma
/// path-independence, intertwiner and M_r commutation identities, and the
/// closed gamma formulas.
VerificationReport property_suite(const System& sys);

}  // namespace heckelab
