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

#include "algebra/integral.hpp"

#include "graded/psi.hpp"

namespace heckelab {

Expansion expand_in_basis(const Element& a, const TriangularBasis& basis) {
    Expansion out;
    Element rem = a;
    while (!rem.is_zero()) {
        // least-dominant support pair first; the reference element only adds
        // strictly more dominant terms back
        int best = -1;
        const PairKey* key = nullptr;
        for (const auto& [k, v] : rem.coeffs()) {
            auto it = basis.index.find(k);
            if (it == basis.index.end())
                throw std::domain_error("expand_in_basis: pair missing from basis");
            if (best < 0 || it->second < best) {
                best = it->second;
                key = &k;
            }
        }
        PairKey k = *key;
        Scalar c = rem.coeff(k);
        out.coeffs.emplace(k, c);
        rem -= c * basis.at(k);
        if (!rem.coeff(k).is_zero())
            throw std::logic_error("expand_in_basis: pivot did not clear");
    }
    return out;
}

namespace {

IntegralityOutcome classify(const Element& a, const TriangularBasis& basis, long min_valuation) {
    IntegralityOutcome out;
    out.expansion = expand_in_basis(a, basis);
    for (const auto& [k, c] : out.expansion.coeffs) {
        bool good;
        if (c.is_zero()) {
            good = true;
        } else if (min_valuation <= 0) {
            good = c.local_class() != LocalClass::Pole;
        } else {
            good = c.local_class() != LocalClass::Pole && c.local_valuation() >= min_valuation;
        }
        if (!good) {
            out.ok = false;
            out.witness = {k, c};
            return out;
        }
    }
    return out;
}

}  // namespace

IntegralityOutcome integrality_check(const Element& a, const TriangularBasis& basis) {
    return classify(a, basis, 0);
}

IntegralityOutcome maximal_ideal_check(const Element& a, const TriangularBasis& basis) {
    return classify(a, basis, 1);
}

int minimal_nilpotent_exponent(const System& sys, const TriangularBasis& basis,
                               const std::vector<long>& i, int r, int cap) {
    Element acc = sys.gen_e(i);
    for (int m = 1; m <= cap; ++m) {
        acc = sys.gen_y(r) * acc;
        if (acc.is_zero() || maximal_ideal_check(acc, basis).ok) return m;
    }
    return cap + 1;
}

}  // namespace heckelab
