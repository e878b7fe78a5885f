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

#include "algebra/specht.hpp"
#include "gram/gram.hpp"

using namespace heckelab;

namespace {

std::shared_ptr<System> murphy_generic(int n, int level, std::vector<long> kappa) {
    auto u = std::make_shared<Universe>(n, level, strict_charge(kappa, n), 0);
    return std::make_shared<System>(u, Mode::generic_t(), SystemKind::Murphy,
                                    GammaSeed::MurphySeed);
}

}  // namespace

TEST_CASE("bareiss determinant") {
    // integer oracle: det [[2,1,3],[1,4,1],[0,2,5]] = 37
    auto c = [](long v) { return Poly<Rat>(Rat(v)); };
    std::vector<std::vector<Poly<Rat>>> m{{c(2), c(1), c(3)}, {c(1), c(4), c(1)},
                                          {c(0), c(2), c(5)}};
    CHECK(bareiss_det(m) == c(37));
    // singular matrix
    std::vector<std::vector<Poly<Rat>>> s{{c(1), c(2)}, {c(2), c(4)}};
    CHECK(bareiss_det(s).is_zero());
    // polynomial matrix with a zero pivot forces a row swap
    Poly<Rat> t = Poly<Rat>::monomial(Rat(1), 1);
    std::vector<std::vector<Poly<Rat>>> p{{Poly<Rat>(), t}, {t, c(1)}};
    CHECK(bareiss_det(p) == -(t * t));
}

TEST_CASE("murphy vectors") {
    auto sys = murphy_generic(2, 1, {0});
    int sh = sys->U().shape_index(Multipartition::parse("2"));
    auto rows = murphy_vectors(*sys, sh);
    CHECK(rows[0][0].is_one());
    // <m, m> = gamma_{t^lam} = [2]_t for lambda = (2)
    Scalar g = sys->gamma({sh, 0});
    CHECK(g == sys->q(2));
    CHECK(murphy_unitriangularity(*sys).pass());
    auto sys3 = murphy_generic(3, 1, {0});
    CHECK(murphy_unitriangularity(*sys3).pass());
    auto sys22 = murphy_generic(3, 2, {0, 0});
    CHECK(murphy_unitriangularity(*sys22).pass());
}

TEST_CASE("gram determinants: the documented small cases") {
    auto sys = murphy_generic(2, 1, {0});
    int rowsh = sys->U().shape_index(Multipartition::parse("2"));
    GramShapeReport rep = gram_det_report(*sys, rowsh, GramVariant::MurphyGeneric);
    CHECK(rep.pass);
    CHECK(rep.details["N"] == 0);
    CHECK(rep.details["exponents"] == json{{"2", 1}});  // det = Phi_2

    int colsh = sys->U().shape_index(Multipartition::parse("1,1"));
    GramShapeReport rep2 = gram_det_report(*sys, colsh, GramVariant::MurphyGeneric);
    CHECK(rep2.pass);
    CHECK(rep2.details["exponents"] == json::object());  // det = 1

    // t = 1: det = 2 = p^{Deg_2((2))}
    GramShapeReport rep3 = gram_det_report(*sys, rowsh, GramVariant::DegenerateT1);
    CHECK(rep3.pass);
    CHECK(rep3.details["det_t1"] == "2");
}

TEST_CASE("gram factorization sweeps") {
    CHECK(gram_suite(*murphy_generic(4, 1, {0}), GramVariant::MurphyGeneric).pass());
    CHECK(gram_suite(*murphy_generic(3, 2, {0, 0}), GramVariant::MurphyGeneric).pass());
    CHECK(gram_suite(*murphy_generic(4, 1, {0}), GramVariant::DegenerateT1).pass());
    CHECK(gram_suite(*murphy_generic(3, 2, {0, 0}), GramVariant::DegenerateT1).pass());
}

TEST_CASE("graded gram forms") {
    for (int e : {2, 3}) {
        auto u = std::make_shared<Universe>(3, 1, std::vector<long>{0}, e);
        auto sys = std::make_shared<System>(u, Mode::cyclo(e), SystemKind::DiamondKLR,
                                            GammaSeed::KLRSeed);
        CHECK(gram_suite(*sys, GramVariant::PsiGraded).pass());
    }
    auto u2 = std::make_shared<Universe>(2, 2, std::vector<long>{2, 0}, 2);
    auto sys2 = std::make_shared<System>(u2, Mode::cyclo(2), SystemKind::DiamondKLR,
                                         GammaSeed::KLRSeed);
    CHECK(gram_suite(*sys2, GramVariant::PsiGraded).pass());
}

TEST_CASE("murphy gamma closed form at strict gaps") {
    // gamma_t = t^{l(d(t))} prod Phi_e^{deg_e(t)}: exercised by property_suite
    auto sys = murphy_generic(4, 1, {0});
    bool saw = false;
    for (const auto& c : property_suite(*sys).checks)
        if (c.relation == "murphy-gamma-closed-form") {
            CHECK(c.pass);
            saw = true;
        }
    CHECK(saw);
}
