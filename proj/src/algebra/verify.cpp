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

#include "algebra/verify.hpp"

#include <set>

namespace heckelab {

json tab_json(const System& sys, TabRef t) {
    json j;
    j["shape"] = sys.U().shape(t.shape).str();
    j["tableau"] = sys.U().tab(t).str();
    return j;
}

json element_diff_witness(const Element& a, const Element& b) {
    Element d = a - b;
    if (d.is_zero()) return nullptr;
    const auto& [k, v] = *d.coeffs().begin();
    json w;
    w["shape"] = a.system()->U().shape(k.shape).str();
    w["s"] = a.system()->U().tab({k.shape, k.s}).str();
    w["t"] = a.system()->U().tab({k.shape, k.t}).str();
    w["value"] = v.str();
    return w;
}

namespace {

json rjson(const System& sys, TabRef t, int r) {
    json j = tab_json(sys, t);
    j["r"] = r;
    return j;
}

Scalar eval_coeff(const System& sys, const CoeffOverride& ov, TabRef t, int r) {
    if (ov) {
        auto v = ov(t, r);
        if (v) return *v;
    }
    return sys.base_coeff(t, r);
}

/// Product of coefficients along a transposition path; zero as soon as the
/// path leaves the standard tableaux.
std::optional<Scalar> path_product(const System& sys, const CoeffOverride& ov, TabRef t,
                                   std::initializer_list<int> rs) {
    Scalar acc = sys.one();
    TabRef cur = t;
    for (int r : rs) {
        Scalar a = eval_coeff(sys, ov, cur, r);
        auto next = sys.U().swapped(cur, r);
        if (!next) {
            if (!a.is_zero()) return std::nullopt;  // convention violated
            return Scalar::zero(sys.mode());
        }
        acc *= a;
        cur = *next;
    }
    return acc;
}

}  // namespace

VerificationReport validate_sncs(const System& sys, const CoeffOverride& ov) {
    VerificationReport rep;
    rep.suite = "sncs";
    const Universe& u = sys.U();
    int n = u.n();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        // (a) braid condition
        for (int r = 1; r + 1 < n; ++r) {
            auto lhs = path_product(sys, ov, t, {r, r + 1, r});
            auto rhs = path_product(sys, ov, t, {r + 1, r, r + 1});
            bool ok = lhs.has_value() && rhs.has_value() && *lhs == *rhs;
            rep.add("sncs-braid", rjson(sys, t, r), ok,
                    ok ? json(nullptr) : tab_json(sys, t));
        }
        // (b) commuting condition
        for (int r = 1; r < n; ++r)
            for (int k = r + 2; k < n; ++k) {
                auto lhs = path_product(sys, ov, t, {r, k});
                auto rhs = path_product(sys, ov, t, {k, r});
                bool ok = lhs.has_value() && rhs.has_value() && *lhs == *rhs;
                json inst = rjson(sys, t, r);
                inst["k"] = k;
                rep.add("sncs-commute", inst, ok, ok ? json(nullptr) : tab_json(sys, t));
            }
        // (c) quadratic / product condition
        for (int r = 1; r < n; ++r) {
            auto v = u.swapped(t, r);
            Scalar at = eval_coeff(sys, ov, t, r);
            bool ok = true;
            if (!v) {
                ok = at.is_zero();
            } else {
                Scalar av = eval_coeff(sys, ov, *v, r);
                Scalar prod = at * av;
                Scalar expected = sys.zero();
                switch (sys.kind()) {
                    case SystemKind::Murphy:
                    case SystemKind::Rational: {
                        expected = sys.q(1 + u.rho(t, r)) * sys.q(1 + u.rho(*v, r)) /
                                   (sys.q(u.rho(t, r)) * sys.q(u.rho(*v, r)));
                        break;
                    }
                    case SystemKind::LinearQuiver: {
                        Scalar ct = sys.C(t, r), cu = sys.C(t, r + 1);
                        Scalar tt = Scalar::t(sys.mode());
                        Scalar p = cu - ct;
                        expected = (sys.one() - ct + tt * cu) * (sys.one() + tt * ct - cu) /
                                   (p * (-p));
                        break;
                    }
                    case SystemKind::DiamondKLR: {
                        long ir = u.residue(t, r), ir1 = u.residue(t, r + 1);
                        long cr = u.content(t, r), cr1 = u.content(t, r + 1);
                        long rho = cr - cr1;
                        int c = cartan(ir, ir1, u.e());
                        if (ir == ir1) {
                            Scalar d = sys.q(rho);
                            expected = -(sys.tpow(2 * ir - 2 * cr1) / (d * d));
                        } else if (c == -2) {
                            expected = sys.tpow(cr + cr1 - ir - ir1) * sys.q(1 - rho) *
                                       sys.q(1 + rho);
                        } else if (c == -1 && cartan(ir + 1, ir1, u.e()) == 2) {
                            expected = sys.tpow(cr1 - ir1) * sys.q(1 + rho);
                        } else if (c == -1) {
                            expected = sys.tpow(cr - ir) * sys.q(1 - rho);
                        } else {
                            expected = sys.one();
                        }
                        break;
                    }
                }
                ok = prod == expected;
            }
            rep.add(sys.kind() == SystemKind::DiamondKLR ? "sncs-beta-product" : "sncs-product",
                    rjson(sys, t, r), ok, ok ? json(nullptr) : tab_json(sys, t));
            // appendix B_r(s)B_r(u) case table (sign-invariant form)
            if (sys.kind() == SystemKind::LinearQuiver && v && !ov) {
                Scalar prod = sys.coeff_psi_left(t, r) * sys.coeff_psi_left(*v, r);
                long ir = u.residue(t, r), ir1 = u.residue(t, r + 1);
                Scalar tt = Scalar::t(sys.mode());
                Scalar ct = sys.C(t, r), cu = sys.C(t, r + 1);
                Scalar expected = sys.one();
                if (ir == ir1) {
                    Scalar p = cu - ct;
                    expected = (p * (-p)).inverse();
                } else if (ir1 == ir + 1) {
                    expected = sys.one() + tt * ct - cu;
                } else if (ir == ir1 + 1) {
                    expected = sys.one() - ct + tt * cu;
                }
                bool bok = prod == expected;
                rep.add("sncs-bproduct-table", rjson(sys, t, r), bok,
                        bok ? json(nullptr) : json{{"product", prod.str()}});
            }
        }
    }
    return rep;
}

VerificationReport verify_hecke_relations(const System& sys) {
    VerificationReport rep;
    rep.suite = "hecke";
    const Universe& u = sys.U();
    int n = u.n();
    Scalar xi = Scalar::t(sys.mode());
    const Element& one = sys.identity();
    auto record = [&](const char* relation, json inst, const Element& lhs, const Element& rhs) {
        json w = element_diff_witness(lhs, rhs);
        rep.add(relation, std::move(inst), w.is_null(), w);
    };

    // cyclotomic relation (vacuous for the rank-1 algebra at n = 0)
    if (n >= 1) {
        Element prod = one;
        for (int l = 1; l <= u.level(); ++l)
            prod *= sys.gen_L(1) - sys.scalar_element(sys.Q(l));
        record("hecke-cyclotomic", json{{"n", n}}, prod, Element(&sys));
    } else {
        record("hecke-cyclotomic", json{{"n", n}}, one * one, one);
    }
    for (int r = 1; r < n; ++r) {
        const Element& T = sys.gen_T(r);
        record("hecke-quadratic", json{{"r", r}}, (T + one) * (T - xi * one), Element(&sys));
    }
    for (int r = 1; r <= n; ++r)
        for (int k = r + 1; k <= n; ++k)
            record("hecke-LL", json{{"r", r}, {"k", k}},
                   sys.gen_L(r) * sys.gen_L(k), sys.gen_L(k) * sys.gen_L(r));
    for (int r = 1; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
            record("hecke-TT-far", json{{"r", r}, {"s", s}},
                   sys.gen_T(r) * sys.gen_T(s), sys.gen_T(s) * sys.gen_T(r));
    for (int r = 1; r + 1 < n; ++r)
        record("hecke-braid", json{{"r", r}},
               sys.gen_T(r) * sys.gen_T(r + 1) * sys.gen_T(r),
               sys.gen_T(r + 1) * sys.gen_T(r) * sys.gen_T(r + 1));
    for (int r = 1; r < n; ++r)
        for (int k = 1; k <= n; ++k) {
            if (k == r || k == r + 1) continue;
            record("hecke-TL-far", json{{"r", r}, {"k", k}},
                   sys.gen_T(r) * sys.gen_L(k), sys.gen_L(k) * sys.gen_T(r));
        }
    for (int r = 1; r < n; ++r)
        record("hecke-skein", json{{"r", r}},
               sys.gen_L(r + 1) * (sys.gen_T(r) - (xi - sys.one()) * one),
               sys.gen_T(r) * sys.gen_L(r) + one);
    return rep;
}

bool crosscheck_idempotent_formula(const System& sys, TabRef t) {
    const Universe& u = sys.U();
    // possible scalar contents across all standard tableaux of size n,
    // keyed by (component-for-linear-quiver, integer content)
    std::set<std::pair<int, long>> contents;
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef s = u.flat_tab(g);
        for (int k = 1; k <= u.n(); ++k) {
            int l = sys.mode().tag == ModeTag::LinearQuiver ? u.component(s, k) : 0;
            contents.insert({l, u.content(s, k)});
        }
    }
    auto content_scalar = [&](std::pair<int, long> c) {
        if (sys.mode().tag == ModeTag::LinearQuiver)
            return Scalar::x_pow(sys.mode(), c.first) + sys.q(c.second);
        return sys.q(c.second);
    };
    Element F = sys.identity();
    for (int k = 1; k <= u.n(); ++k) {
        Scalar ck = sys.C(t, k);
        for (const auto& c : contents) {
            Scalar cs = content_scalar(c);
            if (cs == ck) continue;
            F *= (sys.gen_L(k) - sys.scalar_element(cs)) * (ck - cs).inverse();
        }
    }
    Element direct(&sys);
    direct.add_term({t.shape, t.tab, t.tab}, sys.inv_gamma(t));
    return F == direct;
}

VerificationReport property_suite(const System& sys) {
    VerificationReport rep;
    rep.suite = "properties";
    const Universe& u = sys.U();
    int n = u.n();
    auto record = [&](const char* relation, json inst, const Element& lhs, const Element& rhs) {
        json w = element_diff_witness(lhs, rhs);
        rep.add(relation, std::move(inst), w.is_null(), w);
    };

    // completeness: sum_t F_t = 1 = sum_i e(i)
    {
        Element sum(&sys);
        for (int g = 0; g < u.total_tabs(); ++g) {
            TabRef t = u.flat_tab(g);
            sum.add_term({t.shape, t.tab, t.tab}, sys.inv_gamma(t));
        }
        record("idempotent-complete-F", json{{"n", n}}, sum, sys.identity());
        Element esum(&sys);
        for (const auto& [i, cls] : u.residue_classes()) esum += sys.gen_e(i);
        record("idempotent-complete-e", json{{"n", n}}, esum, sys.identity());
    }
    // orthogonality F_s F_t = delta F_t, within each shape (cross-shape
    // products vanish by the multiplication rule)
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        bool ok = true;
        for (int a = 0; a < u.num_tabs(sh) && ok; ++a)
            for (int b = 0; b < u.num_tabs(sh) && ok; ++b) {
                Element Fa(&sys), Fb(&sys);
                Fa.add_term({sh, a, a}, sys.inv_gamma({sh, a}));
                Fb.add_term({sh, b, b}, sys.inv_gamma({sh, b}));
                Element prod = Fa * Fb;
                ok = (a == b) ? prod == Fa : prod.is_zero();
            }
        rep.add("idempotent-orthogonal", json{{"shape", u.shape(sh).str()}}, ok);
    }
    // e(i) e(j) = delta e(i)
    {
        bool ok = true;
        for (const auto& [i, ci] : u.residue_classes())
            for (const auto& [j, cj] : u.residue_classes()) {
                Element prod = sys.gen_e(i) * sys.gen_e(j);
                ok = ok && (i == j ? prod == sys.gen_e(i) : prod.is_zero());
            }
        rep.add("residue-idempotent-orthogonal", json{{"n", n}}, ok);
    }
    // involution fixes the generators and squares to the identity map
    {
        Flavor f = sys.flavor();
        if (n == 0) rep.add("involution-order-2", json{{"n", 0}}, true);
        for (int r = 1; r < n; ++r) {
            const Element& g = f == Flavor::Star ? sys.gen_T(r) : sys.gen_psi(r);
            record(f == Flavor::Star ? "involution-fixes-T" : "involution-fixes-psi",
                   json{{"r", r}}, g.involute(f), g);
            Element mixed = sys.gen_L(1) * g + g;
            record("involution-order-2", json{{"r", r}}, mixed.involute(f).involute(f), mixed);
        }
    }
    // gamma recurrence on every adjacent standard pair (path independence)
    {
        bool ok = true;
        json w = nullptr;
        for (int g = 0; g < u.total_tabs() && ok; ++g) {
            TabRef t = u.flat_tab(g);
            for (int r = 1; r < n && ok; ++r) {
                auto v = u.swapped(t, r);
                if (!v) continue;
                if (sys.base_coeff(*v, r) * sys.gamma(t) != sys.base_coeff(t, r) * sys.gamma(*v)) {
                    ok = false;
                    w = rjson(sys, t, r);
                }
            }
        }
        rep.add("gamma-path-independence", json{{"n", n}}, ok, w);
    }
    // intertwiners
    for (const auto& [i, cls] : u.residue_classes()) {
        for (int r = 1; r < n; ++r) {
            long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
            json inst{{"i", i}, {"r", r}};
            if (ir == ir1) {
                record("intertwiner-eq", inst, sys.gen_T(r) * sys.gen_e(i),
                       sys.gen_e(i) * sys.gen_T(r));
            } else {
                std::vector<long> j = i;
                std::swap(j[(std::size_t)r - 1], j[(std::size_t)r]);
                Element comm = sys.gen_T(r) * sys.gen_L(r) - sys.gen_L(r) * sys.gen_T(r);
                record("intertwiner-ne", inst, comm * sys.gen_e(i), sys.gen_e(j) * comm);
            }
        }
    }
    // M_r commutation identities
    for (int r = 1; r < n; ++r) {
        Element comm = sys.gen_T(r) * sys.gen_L(r) - sys.gen_L(r) * sys.gen_T(r);
        record("mr-commute-LT", json{{"r", r}}, comm * sys.gen_M(r), sys.gen_Mp(r) * comm);
        Scalar xi = Scalar::t(sys.mode());
        record("mr-commute-T", json{{"r", r}},
               (sys.gen_T(r) - xi * sys.identity()) * sys.gen_M(r),
               sys.gen_Mp(r) * (sys.identity() + sys.gen_T(r)));
    }
    // closed gamma formulas
    if (sys.mode().tag == ModeTag::GenericT && sys.kind() == SystemKind::Murphy &&
        sys.seed() == GammaSeed::MurphySeed) {
        bool strict = true;
        for (int l = 0; l + 1 < u.level(); ++l)
            strict = strict &&
                     u.kappa()[(std::size_t)l] - u.kappa()[(std::size_t)l + 1] > n;
        if (strict) {
            // gamma_t = t^{l(d(t))} prod_e Phi_e(t)^{deg_e(t)}; the exponents
            // of single tableaux may be negative
            long spread = 0;
            for (int g = 0; g < u.total_tabs(); ++g)
                for (int k = 1; k <= n; ++k)
                    spread = std::max(spread, std::labs(u.content(u.flat_tab(g), k)));
            for (int g = 0; g < u.total_tabs(); ++g) {
                TabRef t = u.flat_tab(g);
                Scalar expected = sys.tpow(u.perm(t).length());
                for (int k = 2; k <= 2 * spread + 2; ++k) {
                    int d = tableau_degree(u.tab(t), u.kappa(), k);
                    if (d == 0) continue;
                    Scalar phi = Scalar(sys.mode(), RFQ(cyclotomic_polynomial(k)));
                    expected *= phi.pow(d);
                }
                bool ok = sys.gamma(t) == expected;
                rep.add("murphy-gamma-closed-form", tab_json(sys, t), ok,
                        ok ? json(nullptr) : json{{"gamma", sys.gamma(t).str()}});
            }
        }
    }
    if (sys.mode().tag == ModeTag::CycloLocal && sys.kind() == SystemKind::DiamondKLR) {
        // gamma_t = unit * Phi_e(t)^{deg(t)}
        Scalar phi = Scalar::zero(sys.mode());
        const Poly<Rat>& p = cyclotomic_polynomial(u.e());
        for (long i = 0; i <= p.degree(); ++i)
            phi += Scalar::of_rat(sys.mode(), p.coeff((std::size_t)i)) * sys.tpow(i);
        for (int g = 0; g < u.total_tabs(); ++g) {
            TabRef t = u.flat_tab(g);
            Scalar ratio = sys.gamma(t) / phi.pow(u.degree(t));
            bool ok = ratio.local_class() == LocalClass::Unit;
            rep.add("klr-gamma-unit", tab_json(sys, t), ok,
                    ok ? json(nullptr) : json{{"ratio", ratio.str()}});
        }
    }
    return rep;
}

}  // namespace heckelab
