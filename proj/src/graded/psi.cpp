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

#include "graded/psi.hpp"

#include <algorithm>

#include "algebra/integral.hpp"
#include "algebra/verify.hpp"

namespace heckelab {

Element y_lambda_element(const System& sys, int shape) {
    const Universe& u = sys.U();
    const Element& flam = sys.gen_e(u.shape_residue(shape));
    Element acc = flam;
    TabRef tlam{shape, 0};
    for (int r = 1; r <= u.n(); ++r) {
        for (const Node& a : u.addable_below_cached(shape, r)) {
            if (sys.mode().tag == ModeTag::LinearQuiver) {
                Scalar ca = Scalar::x_pow(sys.mode(), a.l) + sys.q(node_content(a, u.kappa()));
                acc = (sys.gen_L(r) - sys.scalar_element(ca)) * acc;
            } else {
                long ir = u.residue(tlam, r);
                long calpha = node_content(a, u.kappa());
                // the t-power makes the f_{t^lam t^lam} coefficient
                // exactly 1 against the chosen gamma seed
                Scalar factor = sys.tpow(ir - calpha);
                acc = factor * ((sys.gen_y(r) - sys.scalar_element(sys.q(calpha - ir))) * acc);
            }
        }
    }
    return acc;
}

TriangularBasis build_psi_basis(const System& sys) {
    if (sys.flavor() != Flavor::Diamond)
        throw std::domain_error("build_psi_basis: diamond system required");
    const Universe& u = sys.U();
    TriangularBasis basis;
    basis.sys = &sys;
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        Element yf = y_lambda_element(sys, sh);
        // right chains: yf * psi_{d(t)}
        std::vector<Element> right((std::size_t)u.num_tabs(sh));
        for (int t = 0; t < u.num_tabs(sh); ++t) {
            Element e = yf;
            for (int r : u.perm({sh, t}).word) e = e * sys.gen_psi(r);
            right[(std::size_t)t] = std::move(e);
        }
        for (int s = 0; s < u.num_tabs(sh); ++s) {
            const auto& word = u.perm({sh, s}).word;
            for (int t = 0; t < u.num_tabs(sh); ++t) {
                // (psi_{d(s)})^diamond = psi_{r_k} ... psi_{r_1}: left-multiply
                // along the word in forward order
                Element e = right[(std::size_t)t];
                for (int r : word) e = sys.gen_psi(r) * e;
                basis.elems.push_back({PairKey{sh, s, t}, std::move(e)});
            }
        }
    }
    std::sort(basis.elems.begin(), basis.elems.end(),
              [&](const auto& a, const auto& b) {
                  return u.pair_order_key(a.first.row(), a.first.col(), false) <
                         u.pair_order_key(b.first.row(), b.first.col(), false);
              });
    for (std::size_t i = 0; i < basis.elems.size(); ++i)
        basis.index.emplace(basis.elems[i].first, (int)i);
    return basis;
}

VerificationReport psi_triangularity_report(const System& sys, const TriangularBasis& psi) {
    VerificationReport rep;
    rep.suite = "psi-basis";
    const Universe& u = sys.U();
    for (const auto& [key, elem] : psi.elems) {
        TabRef s = key.row(), t = key.col();
        json inst;
        inst["shape"] = u.shape(key.shape).str();
        inst["s"] = u.tab(s).str();
        inst["t"] = u.tab(t).str();
        bool lead_one = elem.coeff(key).is_one();
        rep.add("psi-leading-coefficient", inst, lead_one,
                lead_one ? json(nullptr) : json{{"value", elem.coeff(key).str()}});
        bool tri = true;
        json w = nullptr;
        for (const auto& [k, v] : elem.coeffs()) {
            if (k == key) continue;
            bool higher = u.gamma_dominates(k.row(), s) && u.gamma_dominates(k.col(), t);
            if (!higher) {
                tri = false;
                w = json{{"s", u.tab(k.row()).str()}, {"t", u.tab(k.col()).str()},
                         {"value", v.str()}};
                break;
            }
        }
        rep.add("psi-unitriangular", inst, tri, w);
        // diamond symmetry
        const Element& flip = psi.at({key.shape, key.t, key.s});
        json dw = element_diff_witness(elem.involute(Flavor::Diamond), flip);
        rep.add("psi-diamond-symmetry", inst, dw.is_null(), dw);
    }
    // basis count = ell^n n!
    long expected = 1;
    for (int k = 1; k <= u.n(); ++k) expected *= k;
    for (int k = 0; k < u.n(); ++k) expected *= u.level();
    rep.add("psi-basis-count", json{{"n", u.n()}, {"level", u.level()}},
            (long)psi.elems.size() == expected);
    return rep;
}

VerificationReport graded_consistency_check(const System& sys, const TriangularBasis& psi) {
    VerificationReport rep;
    rep.suite = "graded-consistency";
    const Universe& u = sys.U();
    auto run_case = [&](const Element& product, const char* gname, json ginst, int shift,
                        const PairKey& key) {
        Expansion ex = expand_in_basis(product, psi);
        int want = u.degree(key.row()) + u.degree(key.col()) + shift;
        bool ok = true;
        json w = nullptr;
        for (const auto& [k, c] : ex.coeffs) {
            if (c.is_zero()) continue;
            if (c.local_class() == LocalClass::Pole) {
                ok = false;
                w = json{{"coefficient", c.str()}};
                break;
            }
            if (c.local_valuation() >= 1) continue;  // dies at the special point
            int got = u.degree(k.row()) + u.degree(k.col());
            if (got != want) {
                ok = false;
                w = json{{"s", u.tab(k.row()).str()}, {"t", u.tab(k.col()).str()},
                         {"degree", got}, {"expected", want}};
                break;
            }
        }
        json inst;
        inst["shape"] = u.shape(key.shape).str();
        inst["s"] = u.tab(key.row()).str();
        inst["t"] = u.tab(key.col()).str();
        inst["generator"] = gname;
        inst["arg"] = std::move(ginst);
        rep.add("graded-degree-shift", inst, ok, w);
    };

    for (const auto& [key, elem] : psi.elems) {
        // e(i) with the element's own column residue: shift 0
        run_case(elem * sys.gen_e(u.residue_seq(key.col())), "e(i)",
                 json{{"i", u.residue_seq(key.col())}}, 0, key);
        for (int r = 1; r <= u.n(); ++r)
            run_case(elem * sys.gen_y(r), "y_r", json{{"r", r}}, 2, key);
        for (int r = 1; r < u.n(); ++r) {
            const auto& i = u.residue_seq(key.col());
            int shift = -cartan(i[(std::size_t)r - 1], i[(std::size_t)r], u.e());
            auto j = i;
            std::swap(j[(std::size_t)r - 1], j[(std::size_t)r]);
            run_case(elem * sys.gen_psi(r) * sys.gen_e(j), "psi_r e(i)", json{{"r", r}},
                     shift, key);
        }
    }
    return rep;
}

}  // namespace heckelab
