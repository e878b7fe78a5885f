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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebra/integral.hpp"
#include "graded/bbasis.hpp"

using namespace heckelab;

namespace {

std::shared_ptr<System> diamond(int n, int level, std::vector<long> kappa, int e) {
    auto u = std::make_shared<Universe>(n, level, std::move(kappa), e);
    return std::make_shared<System>(u, Mode::cyclo(e), SystemKind::DiamondKLR,
                                    GammaSeed::KLRSeed);
}

}  // namespace

TEST_CASE("y_lambda element") {
    auto sys = diamond(3, 1, {0}, 2);
    const Universe& u = sys->U();
    // lambda = (n) with e > n: every Add_lambda(r) is empty, so
    // y^lam f^lam = f^lam
    {
        auto big = diamond(3, 1, {0}, 5);
        int row = big->U().shape_index(Multipartition::parse("3"));
        CHECK(y_lambda_element(*big, row) ==
              big->gen_e(big->U().shape_residue(row)));
    }
    // leading coefficient 1 and Gamma-dominated diagonal support
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        Element yf = y_lambda_element(*sys, sh);
        TabRef tlam{sh, 0};
        CHECK(yf.coeff({sh, 0, 0}).is_one());
        for (const auto& [k, v] : yf.coeffs()) {
            CHECK(k.s == k.t);
            CHECK(u.gamma_dominates(k.row(), tlam));
        }
    }
}

TEST_CASE("psi basis triangularity and grading") {
    for (int e : {2, 3}) {
        auto sys = diamond(3, 1, {0}, e);
        TriangularBasis psi = build_psi_basis(*sys);
        CHECK(psi_triangularity_report(*sys, psi).pass());
        CHECK(graded_consistency_check(*sys, psi).pass());
    }
    auto sys2 = diamond(2, 2, {2, 0}, 2);
    TriangularBasis psi2 = build_psi_basis(*sys2);
    CHECK(psi_triangularity_report(*sys2, psi2).pass());
    CHECK(graded_consistency_check(*sys2, psi2).pass());
}

TEST_CASE("b basis small cases") {
    auto sys = diamond(3, 1, {0}, 2);
    TriangularBasis psi = build_psi_basis(*sys);
    BBasis primary = build_b_basis(*sys, psi, false);
    BBasis alternate = build_b_basis(*sys, psi, true);
    CHECK(b_basis_reports(*sys, psi, primary, alternate).pass());
    // a Gamma-maximal pair keeps B = psi = f
    const Universe& u = sys->U();
    for (const auto& elem : primary.elems) {
        bool maximal = true;
        for (const auto& [other, _] : psi.index) {
            if (other == elem.key) continue;
            if (u.gamma_dominates(other.row(), elem.key.row()) &&
                u.gamma_dominates(other.col(), elem.key.col()))
                maximal = false;
        }
        if (!maximal) continue;
        CHECK(elem.f_coords.support_size() == 1);
        CHECK(elem.f_coords == psi.at(elem.key));
    }
}

TEST_CASE("the worked example: e=3, charge (9,4,0), lambda=(1|1|1)") {
    auto sys = diamond(3, 3, {9, 4, 0}, 3);
    const Universe& u = sys->U();
    TriangularBasis psi = build_psi_basis(*sys);
    BBasis primary = build_b_basis(*sys, psi, false);
    BBasis alternate = build_b_basis(*sys, psi, true);
    CHECK(b_basis_reports(*sys, psi, primary, alternate).pass());

    int sh = u.shape_index(Multipartition::parse("1|1|1"));
    // t = the column reading tableau (3|2|1), i.e. the final tableau
    int tcol = u.num_tabs(sh) - 1;
    const BBasisElement& B = primary.at({sh, 0, tcol});
    // B' = psi_{t^lam t} + (2/3) psi_{t^lam t^lam}, both of degree 1
    Scalar expected = Scalar::of_rat(sys->mode(), Rat(Int(2), Int(3)));
    REQUIRE(B.b_prime.count({sh, 0, 0}) == 1);
    CHECK(B.b_prime.at({sh, 0, 0}) == expected);
    REQUIRE(B.b_prime.count({sh, 0, tcol}) == 1);
    CHECK(B.b_prime.at({sh, 0, tcol}).is_one());
    CHECK(B.b_prime.size() == 2);
    CHECK(u.degree({sh, 0}) + u.degree({sh, tcol}) == 2 * u.degree({sh, 0}));
    // both reduced expressions of d(t) exist; the B element is word-free by
    // the uniqueness check above
    CHECK(u.perm({sh, tcol}).length() == 3);
}
