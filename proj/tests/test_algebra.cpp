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
#include "algebra/specht.hpp"
#include "algebra/verify.hpp"
#include "gram/gram.hpp"
#include "graded/psi.hpp"

using namespace heckelab;

namespace {

std::shared_ptr<System> make_system(int n, int level, std::vector<long> kappa, Mode mode,
                                    SystemKind kind, GammaSeed seed) {
    auto u = std::make_shared<Universe>(n, level, std::move(kappa), mode.quantum_char());
    return std::make_shared<System>(u, mode, kind, seed);
}

}  // namespace

TEST_CASE("coefficient system axioms") {
    for (int n : {2, 3}) {
        auto murphy = make_system(n, 1, {0}, Mode::generic_t(), SystemKind::Murphy,
                                  GammaSeed::MurphySeed);
        CHECK(validate_sncs(*murphy).pass());
        auto rational = make_system(n, 1, {0}, Mode::cyclo(2), SystemKind::Rational,
                                    GammaSeed::MurphySeed);
        CHECK(validate_sncs(*rational).pass());
        auto diamond = make_system(n, 1, {0}, Mode::cyclo(3), SystemKind::DiamondKLR,
                                   GammaSeed::KLRSeed);
        CHECK(validate_sncs(*diamond).pass());
    }
    auto lq = make_system(3, 2, {0, 0}, Mode::linear_quiver(), SystemKind::LinearQuiver,
                          GammaSeed::MurphySeed);
    CHECK(validate_sncs(*lq).pass());
}

TEST_CASE("corrupted coefficient system fails with a witness") {
    auto sys = make_system(3, 1, {0}, Mode::generic_t(), SystemKind::Murphy,
                           GammaSeed::MurphySeed);
    // negate one coefficient value at a standard swap
    TabRef victim{-1, -1};
    int victim_r = 0;
    for (int sh = 0; sh < sys->U().num_shapes() && victim.shape < 0; ++sh)
        for (int t = 0; t < sys->U().num_tabs(sh) && victim.shape < 0; ++t)
            for (int r = 1; r < sys->U().n() && victim.shape < 0; ++r)
                if (sys->U().swapped({sh, t}, r)) {
                    victim = {sh, t};
                    victim_r = r;
                }
    REQUIRE(victim.shape >= 0);
    CoeffOverride ov = [&](TabRef t, int r) -> std::optional<Scalar> {
        if (t == victim && r == victim_r) return -sys->base_coeff(t, r);
        return std::nullopt;
    };
    VerificationReport rep = validate_sncs(*sys, ov);
    CHECK(!rep.pass());
    bool product_failed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && c.relation == "sncs-product" && !c.witness.is_null())
            product_failed = true;
    CHECK(product_failed);
}

TEST_CASE("hecke relations in every mode") {
    CHECK(verify_hecke_relations(*make_system(3, 1, {0}, Mode::generic_t(),
                                              SystemKind::Murphy, GammaSeed::MurphySeed))
              .pass());
    CHECK(verify_hecke_relations(*make_system(3, 1, {0}, Mode::cyclo(2),
                                              SystemKind::DiamondKLR, GammaSeed::KLRSeed))
              .pass());
    CHECK(verify_hecke_relations(*make_system(2, 2, {3, 0}, Mode::degenerate_p(3),
                                              SystemKind::Murphy, GammaSeed::MurphySeed))
              .pass());
    CHECK(verify_hecke_relations(*make_system(2, 2, {0, 0}, Mode::linear_quiver(),
                                              SystemKind::LinearQuiver, GammaSeed::MurphySeed))
              .pass());
}

TEST_CASE("element arithmetic basics") {
    auto sys = make_system(3, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                           GammaSeed::KLRSeed);
    const Universe& u = sys->U();
    // F_t F_s orthogonality and completeness
    Element sum(&*sys);
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        Element Ft(&*sys);
        Ft.add_term({t.shape, t.tab, t.tab}, sys->inv_gamma(t));
        CHECK(Ft * Ft == Ft);
        sum += Ft;
    }
    CHECK(sum == sys->identity());
    // identity is neutral
    const Element& T1 = sys->gen_T(1);
    CHECK(sys->identity() * T1 == T1);
    CHECK(T1 * sys->identity() == T1);
    // e(i) family: orthogonal idempotents summing to 1
    Element esum(&*sys);
    for (const auto& [i, cls] : u.residue_classes()) {
        const Element& ei = sys->gen_e(i);
        CHECK(ei * ei == ei);
        esum += ei;
    }
    CHECK(esum == sys->identity());
    // empty residue class gives the zero element
    CHECK(sys->gen_e({1, 1, 1}).is_zero());
    // y_shift(0, r) = y_r
    CHECK(sys->gen_y_shift(0, 2) == sys->gen_y(2));
    // involutions
    CHECK(sys->gen_psi(1).involute(Flavor::Diamond) == sys->gen_psi(1));
    Element a = sys->gen_psi(1) * sys->gen_y(2) + sys->gen_e(u.residue_seq({0, 0}));
    CHECK(a.involute(Flavor::Diamond).involute(Flavor::Diamond) == a);
    CHECK_THROWS_AS(a.involute(Flavor::Star), FlavorMismatch);
    // mode/system mismatch
    auto other = make_system(3, 1, {0}, Mode::cyclo(2), SystemKind::Rational,
                             GammaSeed::MurphySeed);
    CHECK_THROWS_AS(a + other->identity(), SystemMismatch);
}

TEST_CASE("inversion kinds enforce residue conditions") {
    auto sys = make_system(2, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                           GammaSeed::KLRSeed);
    std::vector<long> i{0, 1};
    CHECK_THROWS_AS(sys->gen_inv_Ldiff(1, {0, 0}), ResidueConditionViolated);
    // e = 2: i_r = i_{r+1} + 1 holds for (0,1), so 1/M_r is forbidden
    CHECK_THROWS_AS(sys->gen_inv_M(1, i), ResidueConditionViolated);
    // but allowed on the equal sequence
    Element inv = sys->gen_inv_M(1, {0, 0});
    CHECK(sys->gen_M(1) * inv == sys->gen_e({0, 0}));
    Element invp = sys->gen_inv_Mp(1, {0, 0});
    CHECK(sys->gen_Mp(1) * invp == sys->gen_e({0, 0}));
}

TEST_CASE("specht action") {
    auto sys = make_system(3, 1, {0}, Mode::generic_t(), SystemKind::Murphy,
                           GammaSeed::MurphySeed);
    Scalar t = Scalar::t(sys->mode());
    // lambda = (n): T_r acts as t
    int row = sys->U().shape_index(Multipartition::parse("3"));
    SpechtModule sp = specht_action(*sys, row);
    CHECK(sp.dim == 1);
    CHECK(sp.T_mat(1)(0, 0) == t);
    CHECK(sp.T_mat(2)(0, 0) == t);
    // lambda = (1^n): T_r acts as -1
    int col = sys->U().shape_index(Multipartition::parse("1,1,1"));
    SpechtModule spc = specht_action(*sys, col);
    CHECK(spc.dim == 1);
    CHECK(spc.T_mat(1)(0, 0) == -sys->one());
    // dimension = |Std(lambda)|
    int mid = sys->U().shape_index(Multipartition::parse("2,1"));
    CHECK(specht_action(*sys, mid).dim == 2);
}

TEST_CASE("idempotent product formula crosscheck") {
    // n = 1: a single tableau per shape
    auto tiny = make_system(1, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                            GammaSeed::KLRSeed);
    CHECK(crosscheck_idempotent_formula(*tiny, {0, 0}));
    // all t for n <= 3, level <= 2
    for (int n : {2, 3}) {
        auto s1 = make_system(n, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                              GammaSeed::KLRSeed);
        for (int g = 0; g < s1->U().total_tabs(); ++g)
            CHECK(crosscheck_idempotent_formula(*s1, s1->U().flat_tab(g)));
    }
    auto s2 = make_system(2, 2, {2, 0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                          GammaSeed::KLRSeed);
    for (int g = 0; g < s2->U().total_tabs(); ++g)
        CHECK(crosscheck_idempotent_formula(*s2, s2->U().flat_tab(g)));
    // fault injection: the formula for a different tableau must not match F_t
    auto sys = make_system(2, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                           GammaSeed::KLRSeed);
    Element f_wrong = sys->identity();
    const Universe& u = sys->U();
    TabRef t{0, 0}, w{1, 0};
    for (int k = 1; k <= u.n(); ++k) {
        Scalar ck = sys->C(w, k);  // corrupted content choice
        for (int g = 0; g < u.total_tabs(); ++g)
            for (int kk = 1; kk <= u.n(); ++kk) {
                Scalar c = sys->C(u.flat_tab(g), kk);
                if (c == ck) continue;
                f_wrong *= (sys->gen_L(k) - sys->scalar_element(c)) * (ck - c).inverse();
            }
    }
    Element direct(&*sys);
    direct.add_term({t.shape, t.tab, t.tab}, sys->inv_gamma(t));
    CHECK(f_wrong != direct);
}

TEST_CASE("property suite across systems") {
    CHECK(property_suite(*make_system(3, 1, {0}, Mode::generic_t(), SystemKind::Murphy,
                                      GammaSeed::MurphySeed))
              .pass());
    CHECK(property_suite(*make_system(3, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                                      GammaSeed::KLRSeed))
              .pass());
    CHECK(property_suite(*make_system(2, 2, {2, 0}, Mode::cyclo(2), SystemKind::Murphy,
                                      GammaSeed::MurphySeed))
              .pass());
}

TEST_CASE("integrality checks") {
    auto sys = make_system(3, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                           GammaSeed::KLRSeed);
    TriangularBasis psi = build_psi_basis(*sys);
    const Universe& u = sys->U();
    // residue idempotents are integral
    for (const auto& [i, cls] : u.residue_classes())
        CHECK(integrality_check(sys->gen_e(i), psi).ok);
    // a single F_t with positive degree is not integral
    bool found_nonintegral = false;
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        if (u.degree(t) <= 0) continue;
        Element Ft(&*sys);
        Ft.add_term({t.shape, t.tab, t.tab}, sys->inv_gamma(t));
        auto out = integrality_check(Ft, psi);
        CHECK(!out.ok);
        found_nonintegral = true;
    }
    CHECK(found_nonintegral);
    // renormalised idempotents 1/M_r f_i stay integral
    for (const auto& [i, cls] : u.residue_classes()) {
        if (((i[0] - i[1] - 1) % 2 + 2) % 2 == 0) continue;
        CHECK(integrality_check(sys->gen_inv_M(1, i), psi).ok);
    }
    // the murphy cellular basis certifies integrality in star systems
    auto star = make_system(2, 1, {0}, Mode::cyclo(2), SystemKind::Murphy,
                            GammaSeed::MurphySeed);
    TriangularBasis murphy = build_murphy_basis(*star);
    for (const auto& [key, elem] : murphy.elems) {
        CHECK(elem.coeff(key).is_one());
        for (const auto& [k, v] : elem.coeffs())
            CHECK((star->U().tab_dominates(k.row(), key.row()) &&
                   star->U().tab_dominates(k.col(), key.col())));
    }
    for (const auto& [i, cls] : star->U().residue_classes())
        CHECK(integrality_check(star->gen_e(i), murphy).ok);
}

TEST_CASE("element json rendering") {
    auto sys = make_system(2, 1, {0}, Mode::cyclo(2), SystemKind::DiamondKLR,
                           GammaSeed::KLRSeed);
    std::string s = sys->identity().str();
    CHECK(s.find("f[") != std::string::npos);
    CHECK(Element(&*sys).str() == "0");
}
