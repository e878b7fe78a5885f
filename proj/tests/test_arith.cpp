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

#include <random>

#include "arith/scalar.hpp"

using namespace heckelab;

TEST_CASE("quantum integers") {
    Mode g = Mode::generic_t();
    CHECK(Scalar::quantum(g, 0).is_zero());
    CHECK(Scalar::quantum(g, 3) ==
          Scalar::one(g) + Scalar::t(g) + Scalar::t_pow(g, 2));
    CHECK(Scalar::quantum(g, -2) == -(Scalar::t_pow(g, -1) + Scalar::t_pow(g, -2)));
    // [d] = -t^d [-d]
    for (long d : {1, 2, 5}) {
        CHECK(Scalar::quantum(g, d) == -(Scalar::t_pow(g, d) * Scalar::quantum(g, -d)));
    }
    Mode dp = Mode::degenerate_p(3);
    CHECK(Scalar::quantum(dp, 7) == Scalar::of_int(dp, 7));
    Mode cy = Mode::cyclo(3);
    // [e]_t vanishes at x = 0 in CycloLocal mode
    CHECK(Scalar::quantum(cy, 3).local_class() == LocalClass::NonUnitRegular);
    CHECK(Scalar::quantum(cy, 2).local_class() == LocalClass::Unit);
    // [d]_t at t=1 equals d
    CHECK(Scalar::quantum(g, 5).eval_t1() == Rat(5));
    CHECK(Scalar::quantum(g, -4).eval_t1() == Rat(-4));
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = t - 1, Phi_2 = t + 1
    auto p1 = cyclotomic_poly_laurent(1);
    CHECK(p1.coeff(0) == Rat(-1));
    CHECK(p1.coeff(1) == Rat(1));
    auto p2 = cyclotomic_poly_laurent(2);
    CHECK(p2.coeff(0) == Rat(1));
    CHECK(p2.coeff(1) == Rat(1));
    // [6]_t = prod_{1<d|6} Phi_d
    Mode g = Mode::generic_t();
    Scalar prod = Scalar::one(g);
    for (int d : {2, 3, 6}) {
        Scalar phi = Scalar(g, RFQ(cyclotomic_polynomial(d)));
        prod *= phi;
    }
    CHECK(prod == Scalar::quantum(g, 6));
    // Phi_{p^k}(1) = p, Phi_m(1) = 1 otherwise
    CHECK(cyclotomic_polynomial(2).eval(Rat(1)) == Rat(2));
    CHECK(cyclotomic_polynomial(9).eval(Rat(1)) == Rat(3));
    CHECK(cyclotomic_polynomial(8).eval(Rat(1)) == Rat(2));
    CHECK(cyclotomic_polynomial(6).eval(Rat(1)) == Rat(1));
    CHECK(cyclotomic_polynomial(12).eval(Rat(1)) == Rat(1));
}

static Laurent<Rat> quantum_laurent(long d) {
    Mode g = Mode::generic_t();
    Scalar q = Scalar::quantum(g, d);
    // [d] for d > 0 is a polynomial in t
    return Laurent<Rat>::from_poly(q.rfq().num());
}

TEST_CASE("cyclotomic factorization") {
    auto f6 = factor_laurent_cyclotomic(quantum_laurent(6));
    CHECK(f6.power_of_t == 0);
    CHECK(f6.multiplicities == std::map<int, int>{{2, 1}, {3, 1}, {6, 1}});
    CHECK(f6.residual.is_one());

    Laurent<Rat> t3 = Laurent<Rat>::monomial(Rat(1), 3);
    auto ft3 = factor_laurent_cyclotomic(t3);
    CHECK(ft3.power_of_t == 3);
    CHECK(ft3.multiplicities.empty());
    CHECK(ft3.residual.is_one());

    // t*(t+1)^2 -> N=1, {2:2}
    Laurent<Rat> f = Laurent<Rat>::monomial(Rat(1), 1) * cyclotomic_poly_laurent(2) *
                     cyclotomic_poly_laurent(2);
    auto ff = factor_laurent_cyclotomic(f);
    CHECK(ff.power_of_t == 1);
    CHECK(ff.multiplicities == std::map<int, int>{{2, 2}});
    CHECK(ff.residual.is_one());

    // refactored product re-multiplies to the input exactly
    Laurent<Rat> g = quantum_laurent(4) * quantum_laurent(6) * Laurent<Rat>::monomial(Rat(-2), -3);
    auto fg = factor_laurent_cyclotomic(g);
    Laurent<Rat> re = fg.residual * Laurent<Rat>::monomial(Rat(1), fg.power_of_t);
    for (auto [k, m] : fg.multiplicities)
        for (int j = 0; j < m; ++j) re *= cyclotomic_poly_laurent(k);
    CHECK(re == g);
}

TEST_CASE("principal part at zero") {
    Mode lq = Mode::linear_quiver();
    Scalar inv_x = Scalar::x_pow(lq, -1);
    auto [p1, r1] = inv_x.split_principal();
    CHECK(p1 == inv_x);
    CHECK(r1.is_zero());

    // (1+x)/x^2 -> x^{-2} + x^{-1}
    Scalar f = (Scalar::one(lq) + Scalar::x(lq)) * Scalar::x_pow(lq, -2);
    auto [p2, r2] = f.split_principal();
    CHECK(p2 == Scalar::x_pow(lq, -2) + Scalar::x_pow(lq, -1));
    CHECK(r2.is_zero());

    // regular input -> 0
    Scalar reg = (Scalar::one(lq) + Scalar::x(lq)).inverse();
    auto [p3, r3] = reg.split_principal();
    CHECK(p3.is_zero());
    CHECK(r3 == reg);

    // reconstruction + regularity, with a genuinely mixed example
    Scalar mixed = (Scalar::one(lq) + Scalar::x_pow(lq, 3)) /
                   (Scalar::x_pow(lq, 2) * (Scalar::one(lq) + Scalar::x(lq)));
    auto [pp, rr] = mixed.split_principal();
    CHECK(pp + rr == mixed);
    CHECK(rr.local_class() != LocalClass::Pole);
    Laurent<Rat> lp = principal_part_at_zero(mixed.rfq());
    CHECK(lp.high() <= -1);
}

TEST_CASE("local unit test") {
    Mode cy = Mode::cyclo(4);
    CHECK(Scalar::t(cy).local_class() == LocalClass::Unit);  // x + zeta
    // Phi_e(t) = Phi_e(x + zeta) vanishes at x=0
    Scalar phi_t = Scalar::zero(cy);
    {
        const Poly<Rat>& phi = cyclotomic_polynomial(4);
        for (long i = 0; i <= phi.degree(); ++i)
            phi_t += Scalar::of_rat(cy, phi.coeff((std::size_t)i)) * Scalar::t_pow(cy, i);
    }
    CHECK(phi_t.local_class() == LocalClass::NonUnitRegular);
    CHECK(Scalar::x_pow(cy, -1).local_class() == LocalClass::Pole);

    Mode dp = Mode::degenerate_p(5);
    CHECK(Scalar::of_int(dp, 7).local_class() == LocalClass::Unit);
    CHECK(Scalar::of_int(dp, 10).local_class() == LocalClass::NonUnitRegular);
    CHECK(Scalar::of_rat(dp, Rat(Int(3), Int(5))).local_class() == LocalClass::Pole);

    // quantum_int(k) in CycloLocal: Unit iff k not divisible by e
    Mode c3 = Mode::cyclo(3);
    for (long k = 1; k <= 9; ++k) {
        auto cls = Scalar::quantum(c3, k).local_class();
        if (k % 3 == 0)
            CHECK(cls == LocalClass::NonUnitRegular);
        else
            CHECK(cls == LocalClass::Unit);
    }
}

static Scalar random_scalar(Mode m, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-4, 4);
    auto rat = [&] { return Rat(small(rng)); };
    switch (m.tag) {
        case ModeTag::DegenerateP:
            return Scalar::of_rat(m, Rat(Int(small(rng)), Int(1 + std::abs(small(rng)))));
        case ModeTag::GenericT:
        case ModeTag::LinearQuiver: {
            Poly<Rat> n({rat(), rat(), rat()});
            Poly<Rat> d({Rat(1 + std::abs(small(rng))), rat()});
            return Scalar(m, RFQ(n, d));
        }
        case ModeTag::CycloLocal: {
            auto cv = [&] { return Cyclo(m.e, {rat(), rat()}); };
            Poly<Cyclo> n({cv(), cv()});
            Poly<Cyclo> d({Cyclo(m.e, Rat(1 + std::abs(small(rng)))), cv()});
            if (d.is_zero()) d = Poly<Cyclo>(Cyclo(m.e, Rat(1)));
            return Scalar(m, RFC(n, d));
        }
    }
    return Scalar::zero(m);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(42);
    for (Mode m : {Mode::generic_t(), Mode::cyclo(3), Mode::cyclo(4),
                   Mode::degenerate_p(3), Mode::linear_quiver()}) {
        for (int it = 0; it < 10000; ++it) {
            Scalar a = random_scalar(m, rng), b = random_scalar(m, rng), c = random_scalar(m, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(m));
            CHECK(a - a == Scalar::zero(m));
        }
    }
}

TEST_CASE("rendering round trip") {
    std::mt19937 rng(7);
    for (Mode m : {Mode::generic_t(), Mode::cyclo(3), Mode::cyclo(5),
                   Mode::degenerate_p(3), Mode::linear_quiver()}) {
        for (int it = 0; it < 200; ++it) {
            Scalar a = random_scalar(m, rng);
            Scalar back = Scalar::parse(m, a.str());
            CHECK(back == a);
        }
    }
    // the documented example
    Mode g = Mode::generic_t();
    Scalar s = (Scalar::of_int(g, 2) * Scalar::t_pow(g, 2) - Scalar::one(g)) /
               (Scalar::t(g) + Scalar::one(g));
    CHECK(s.str() == "(2*t^2-1)/(t+1)");
    CHECK(Scalar::parse(g, s.str()) == s);
}

TEST_CASE("cyclotomic field arithmetic") {
    for (int e : {2, 3, 4, 5, 6}) {
        Cyclo z = Cyclo::zeta(e);
        Cyclo p = z;
        for (int k = 1; k < e; ++k) p *= z;
        CHECK(p == Cyclo(e, Rat(1)));  // zeta^e = 1
        // minimal polynomial kills zeta
        CHECK(Cyclo::from_poly(e, cyclotomic_polynomial(e)).is_zero());
        // inverse
        Cyclo q = z + Cyclo(e, Rat(2));
        CHECK(q * q.inverse() == Cyclo(e, Rat(1)));
    }
}
