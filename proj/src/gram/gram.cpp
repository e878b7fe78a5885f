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

#include "gram/gram.hpp"

#include <algorithm>

#include "algebra/specht.hpp"
#include "util/parallel.hpp"

namespace heckelab {

GramVariant gram_variant_from_name(const std::string& name) {
    if (name == "murphy-generic") return GramVariant::MurphyGeneric;
    if (name == "degenerate-t1") return GramVariant::DegenerateT1;
    if (name == "psi-graded") return GramVariant::PsiGraded;
    throw std::domain_error("unknown gram variant: " + name);
}

std::string gram_variant_name(GramVariant v) {
    switch (v) {
        case GramVariant::MurphyGeneric: return "murphy-generic";
        case GramVariant::DegenerateT1: return "degenerate-t1";
        case GramVariant::PsiGraded: return "psi-graded";
    }
    return "?";
}

std::vector<std::vector<Scalar>> murphy_vectors(const System& sys, int shape) {
    const Universe& u = sys.U();
    int dim = u.num_tabs(shape);
    SpechtModule sp = specht_action(sys, shape);
    std::vector<std::vector<Scalar>> rows((std::size_t)dim,
                                          std::vector<Scalar>((std::size_t)dim, sys.zero()));
    rows[0][0] = sys.one();
    // walk down the dominance tree: m_t = m_parent T_r
    std::vector<int> order((std::size_t)dim);
    for (int t = 0; t < dim; ++t) order[(std::size_t)t] = t;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return u.perm({shape, a}).length() < u.perm({shape, b}).length();
    });
    for (int t : order) {
        if (t == 0) continue;
        auto par = u.parent({shape, t});
        auto [v, r] = *par;
        const Matrix<Scalar>& T = sp.T_mat(r);
        auto& row = rows[(std::size_t)t];
        const auto& prev = rows[(std::size_t)v.tab];
        for (int a = 0; a < dim; ++a) {
            if (prev[(std::size_t)a].is_zero()) continue;
            for (int b = 0; b < dim; ++b)
                if (!T(a, b).is_zero()) row[(std::size_t)b] += prev[(std::size_t)a] * T(a, b);
        }
    }
    return rows;
}

VerificationReport murphy_unitriangularity(const System& sys) {
    VerificationReport rep;
    rep.suite = "murphy-vectors";
    const Universe& u = sys.U();
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        auto rows = murphy_vectors(sys, sh);
        for (int t = 0; t < u.num_tabs(sh); ++t) {
            json inst{{"shape", u.shape(sh).str()}, {"t", u.tab({sh, t}).str()}};
            bool diag = rows[(std::size_t)t][(std::size_t)t].is_one();
            bool tri = true;
            for (int v = 0; v < u.num_tabs(sh) && tri; ++v) {
                if (rows[(std::size_t)t][(std::size_t)v].is_zero()) continue;
                tri = u.tab_dominates({sh, v}, {sh, t});
            }
            rep.add("murphy-unitriangular", inst, diag && tri);
        }
    }
    return rep;
}

TriangularBasis build_murphy_basis(const System& sys) {
    if (sys.flavor() != Flavor::Star)
        throw std::domain_error("build_murphy_basis: star system required");
    const Universe& u = sys.U();
    TriangularBasis basis;
    basis.sys = &sys;
    for (int sh = 0; sh < u.num_shapes(); ++sh) {
        const Multipartition& lam = u.shape(sh);
        // x_lam = sum over the row stabiliser, built row by row
        Element x = sys.identity();
        int offset = 0;
        for (const auto& comp : lam.components())
            for (int part : comp) {
                for (int m = offset + 2; m <= offset + part; ++m) {
                    // right coset sums 1 + T_{m-1} + T_{m-1}T_{m-2} + ...
                    Element coset = sys.identity();
                    Element chain = sys.identity();
                    for (int j = m - 1; j >= offset + 1; --j) {
                        chain = chain * sys.gen_T(j);
                        coset += chain;
                    }
                    x = x * coset;
                }
                offset += part;
            }
        // u_lam
        Element ul = sys.identity();
        int before = 0;
        for (int l = 1; l < u.level(); ++l) {
            before += lam.components()[(std::size_t)l - 1].empty()
                          ? 0
                          : [&] {
                                int s = 0;
                                for (int p : lam.components()[(std::size_t)l - 1]) s += p;
                                return s;
                            }();
            for (int r = 1; r <= before; ++r) {
                Scalar norm = sys.tpow(-u.kappa()[(std::size_t)l]);
                ul = ul * (norm * (sys.gen_L(r) - sys.scalar_element(sys.Q(l + 1))));
            }
        }
        Element mlam = ul * x;
        // chains m_{t^lam, t} = m_lam T_{d(t)} along the parent tree
        std::vector<Element> right((std::size_t)u.num_tabs(sh));
        std::vector<int> order((std::size_t)u.num_tabs(sh));
        for (int t = 0; t < u.num_tabs(sh); ++t) order[(std::size_t)t] = t;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return u.perm({sh, a}).length() < u.perm({sh, b}).length();
        });
        for (int t : order) {
            if (t == 0) {
                right[0] = mlam;
                continue;
            }
            auto [v, r] = *u.parent({sh, t});
            right[(std::size_t)t] = right[(std::size_t)v.tab] * sys.gen_T(r);
        }
        for (int s = 0; s < u.num_tabs(sh); ++s) {
            const auto& word = u.perm({sh, s}).word;
            for (int t = 0; t < u.num_tabs(sh); ++t) {
                // (T_{d(s)})^* = T_{r_k} ... T_{r_1}: left-multiply forward
                Element e = right[(std::size_t)t];
                for (int r : word) e = sys.gen_T(r) * e;
                basis.elems.push_back({PairKey{sh, s, t}, std::move(e)});
            }
        }
    }
    const Universe& u2 = sys.U();
    std::sort(basis.elems.begin(), basis.elems.end(), [&](const auto& a, const auto& b) {
        return u2.pair_order_key(a.first.row(), a.first.col(), false) <
               u2.pair_order_key(b.first.row(), b.first.col(), false);
    });
    for (std::size_t i = 0; i < basis.elems.size(); ++i)
        basis.index.emplace(basis.elems[i].first, (int)i);
    return basis;
}

template <class K>
Poly<K> bareiss_det(std::vector<std::vector<Poly<K>>> m) {
    int n = (int)m.size();
    if (n == 0) return Poly<K>(K(1));
    int sign = 1;
    Poly<K> prev(K(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[(std::size_t)k][(std::size_t)k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[(std::size_t)i][(std::size_t)k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly<K>();  // singular
            std::swap(m[(std::size_t)k], m[(std::size_t)swap_row]);
            sign = -sign;
        }
        const Poly<K> pivot = m[(std::size_t)k][(std::size_t)k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly<K> v = m[(std::size_t)i][(std::size_t)j] * pivot -
                            m[(std::size_t)i][(std::size_t)k] * m[(std::size_t)k][(std::size_t)j];
                m[(std::size_t)i][(std::size_t)j] = v.exact_div(prev);
            }
        prev = pivot;
    }
    Poly<K> det = m[(std::size_t)n - 1][(std::size_t)n - 1];
    return sign < 0 ? -det : det;
}

template Poly<Rat> bareiss_det(std::vector<std::vector<Poly<Rat>>>);
template Poly<Cyclo> bareiss_det(std::vector<std::vector<Poly<Cyclo>>>);

namespace {

struct ClearedMatrix {
    std::vector<std::vector<Poly<Cyclo>>> entries;
    Scalar det_divisor;  // det(original) = bareiss(entries) / det_divisor
};

/// Clear denominators row by row (denominators are lcm'ed within a row).
ClearedMatrix clear_denominators(const System& sys, const std::vector<std::vector<Scalar>>& g) {
    int n = (int)g.size();
    ClearedMatrix out;
    out.det_divisor = sys.one();
    out.entries.resize((std::size_t)n);
    for (int i = 0; i < n; ++i) {
        Poly<Cyclo> row_lcm(Cyclo(sys.mode().e, Rat(1)));
        for (int j = 0; j < n; ++j) {
            const auto& rf = g[(std::size_t)i][(std::size_t)j].rfc();
            if (rf.is_zero()) continue;
            Poly<Cyclo> d = rf.den();
            Poly<Cyclo> gcd = poly_gcd<Cyclo>(row_lcm, d);
            row_lcm = row_lcm * d.exact_div(gcd);
        }
        out.det_divisor *= Scalar(sys.mode(), RFC(row_lcm));
        for (int j = 0; j < n; ++j) {
            const auto& rf = g[(std::size_t)i][(std::size_t)j].rfc();
            if (rf.is_zero()) {
                out.entries[(std::size_t)i].push_back(Poly<Cyclo>());
            } else {
                out.entries[(std::size_t)i].push_back(rf.num() * row_lcm.exact_div(rf.den()));
            }
        }
    }
    return out;
}

json laurent_json(const Laurent<Rat>& l) {
    return json{{"low", l.low()}, {"value", l.str("t")}};
}

/// The Gram matrix of S^lambda in a cellular basis given by unitriangular
/// rows over the f-basis.
std::vector<std::vector<Scalar>> gram_matrix(const System& sys, int shape,
                                             const std::vector<std::vector<Scalar>>& rows) {
    const Universe& u = sys.U();
    int dim = u.num_tabs(shape);
    std::vector<std::vector<Scalar>> g((std::size_t)dim,
                                       std::vector<Scalar>((std::size_t)dim, sys.zero()));
    for (int s = 0; s < dim; ++s)
        for (int t = s; t < dim; ++t) {
            Scalar acc = sys.zero();
            for (int v = 0; v < dim; ++v) {
                const Scalar& a = rows[(std::size_t)s][(std::size_t)v];
                const Scalar& b = rows[(std::size_t)t][(std::size_t)v];
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b * sys.gamma({shape, v});
            }
            g[(std::size_t)s][(std::size_t)t] = acc;
            g[(std::size_t)t][(std::size_t)s] = acc;
        }
    return g;
}

GramShapeReport murphy_generic_report(const System& sys, int shape, bool at_one) {
    const Universe& u = sys.U();
    GramShapeReport rep;
    rep.shape = u.shape(shape).str();
    json& d = rep.details;
    auto fail = [&](const char* reason, json extra = nullptr) {
        rep.pass = false;
        d["fail"] = reason;
        if (!extra.is_null()) d["fail_data"] = extra;
    };

    auto rows = murphy_vectors(sys, shape);
    auto g = gram_matrix(sys, shape, rows);
    int dim = (int)g.size();

    // product of gammas (E:GramDetGammaProd)
    Scalar gamma_prod = sys.one();
    for (int v = 0; v < dim; ++v) gamma_prod *= sys.gamma({shape, v});

    if (!at_one) {
        // entries are Laurent polynomials over Z: t^C * entry is polynomial
        long clear = 0;
        for (const auto& row : g)
            for (const auto& v : row) {
                if (v.is_zero()) continue;
                const auto& rf = v.rfq();
                if (rf.den().trailing_degree() != rf.den().degree())
                    throw std::logic_error("gram entry is not a Laurent polynomial");
                clear = std::max(clear, rf.den().degree());
            }
        std::vector<std::vector<Poly<Rat>>> m((std::size_t)dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const auto& rf = g[(std::size_t)i][(std::size_t)j].rfq();
                Poly<Rat> p = rf.num();
                if (!p.is_zero())
                    p = p * Poly<Rat>::monomial(Rat(1), (std::size_t)(clear - rf.den().degree()));
                m[(std::size_t)i].push_back(std::move(p));
            }
        Poly<Rat> det_poly = bareiss_det(std::move(m));
        if (det_poly.is_zero()) {
            fail("determinant vanished");
            return rep;
        }
        Laurent<Rat> det = Laurent<Rat>::from_poly(det_poly, -clear * dim);
        d["det"] = laurent_json(det);

        // cross-check 1: det == prod gamma_t
        {
            const auto& rf = gamma_prod.rfq();
            Laurent<Rat> gp = Laurent<Rat>::from_poly(rf.num(), -rf.den().degree());
            if (rf.den().trailing_degree() != rf.den().degree() || gp != det)
                fail("determinant != product of gammas", json{{"product", gamma_prod.str()}});
        }
        // cross-check 2: integral factorization with independently computed
        // exponents
        auto fac = factor_laurent_cyclotomic(det);
        if (!fac.residual.is_one()) {
            fail("FactorizationResidual", json{{"residual", fac.residual.str("t")}});
            return rep;
        }
        long ell_lam = 0;
        for (int t = 0; t < dim; ++t) ell_lam += u.perm({shape, t}).length();
        d["N"] = fac.power_of_t;
        d["ell_lambda"] = ell_lam;
        if (fac.power_of_t != ell_lam) fail("power of t != ell(lambda)");
        json exps = json::object();
        long spread = 2 * (long)det.high() + 2;
        for (int k = 2; k <= std::max<long>(spread, 2); ++k) {
            int expected = shape_degree(u.shape(shape), u.kappa(), k);
            auto it = fac.multiplicities.find(k);
            int got = it == fac.multiplicities.end() ? 0 : it->second;
            if (expected != got)
                fail("cyclotomic exponent != deg_e(lambda)",
                     json{{"e", k}, {"exponent", got}, {"deg_e", expected}});
            if (got) exps[std::to_string(k)] = got;
        }
        d["exponents"] = exps;
        if (shape_degree(u.shape(shape), u.kappa(), 0) < 0) fail("deg_0(lambda) < 0");
        return rep;
    }

    // ---- t = 1: integer determinant equals prod_p p^{Deg_p} ----
    std::vector<std::vector<Poly<Rat>>> m((std::size_t)dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m[(std::size_t)i].push_back(Poly<Rat>(g[(std::size_t)i][(std::size_t)j].eval_t1()));
    Poly<Rat> detp = bareiss_det(std::move(m));
    Rat det = detp.is_zero() ? Rat(0) : detp.coeff(0);
    d["det_t1"] = det.str();
    if (det.is_zero() || !det.is_integer()) {
        fail("t=1 determinant not a positive integer");
        return rep;
    }
    Int dz = det.num();
    if (dz < 0) {
        fail("t=1 determinant negative");
        return rep;
    }
    // factor and compare with Deg_p
    json exps = json::object();
    Int rem = dz;
    for (long p = 2; p <= 2 * u.n() + 2 || rem > 1; ++p) {
        if (p > 1000000) {
            fail("unexpected large prime factor");
            return rep;
        }
        bool prime = p >= 2;
        for (long q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
        if (!prime) continue;
        int mult = 0;
        while (rem % p == 0) {
            rem /= p;
            ++mult;
        }
        int expected = shape_degree_p(u.shape(shape), u.kappa(), (int)p);
        if (mult != expected) {
            fail("p-exponent != Deg_p(lambda)",
                 json{{"p", p}, {"exponent", mult}, {"Deg_p", expected}});
            return rep;
        }
        if (mult) exps[std::to_string(p)] = mult;
        if (rem == 1 && p > 2 * u.n() + 2) break;
    }
    d["p_exponents"] = exps;
    // cross-check against the generic determinant evaluated at t = 1 via gammas
    Rat gp = gamma_prod.eval_t1();
    if (gp != det) fail("t=1 determinant != product of gammas at 1");
    return rep;
}

GramShapeReport psi_graded_report(const System& sys, int shape) {
    const Universe& u = sys.U();
    GramShapeReport rep;
    rep.shape = u.shape(shape).str();
    json& d = rep.details;
    auto fail = [&](const char* reason, json extra = nullptr) {
        rep.pass = false;
        d["fail"] = reason;
        if (!extra.is_null()) d["fail_data"] = extra;
    };
    // psi rows via the Specht action
    int dim = u.num_tabs(shape);
    SpechtModule sp = specht_action(sys, shape);
    std::vector<std::vector<Scalar>> rows((std::size_t)dim,
                                          std::vector<Scalar>((std::size_t)dim, sys.zero()));
    for (int t = 0; t < dim; ++t) {
        rows[(std::size_t)t][0] = sys.one();
        for (int r : u.perm({shape, t}).word) {
            std::vector<Scalar> next((std::size_t)dim, sys.zero());
            const Matrix<Scalar>& P = sp.psi_mat(r);
            for (int a = 0; a < dim; ++a) {
                if (rows[(std::size_t)t][(std::size_t)a].is_zero()) continue;
                for (int b = 0; b < dim; ++b)
                    if (!P(a, b).is_zero())
                        next[(std::size_t)b] += rows[(std::size_t)t][(std::size_t)a] * P(a, b);
            }
            rows[(std::size_t)t] = std::move(next);
        }
    }
    auto g = gram_matrix(sys, shape, rows);

    // weight-space orthogonality
    for (int s = 0; s < dim; ++s)
        for (int t = 0; t < dim; ++t)
            if (u.residue_seq({shape, s}) != u.residue_seq({shape, t}) &&
                !g[(std::size_t)s][(std::size_t)t].is_zero())
                fail("cross-residue pairing nonzero",
                     json{{"s", u.tab({shape, s}).str()}, {"t", u.tab({shape, t}).str()}});

    auto det_of = [&](const std::vector<int>& idx) {
        std::vector<std::vector<Scalar>> sub((std::size_t)idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                sub[i].push_back(g[(std::size_t)idx[i]][(std::size_t)idx[j]]);
        ClearedMatrix cm = clear_denominators(sys, sub);
        Poly<Cyclo> det_poly = bareiss_det(std::move(cm.entries));
        Scalar det = Scalar(sys.mode(), RFC(det_poly)) / cm.det_divisor;
        return det;
    };

    std::vector<int> all((std::size_t)dim);
    for (int t = 0; t < dim; ++t) all[(std::size_t)t] = t;
    Scalar det = det_of(all);
    if (det.is_zero()) {
        fail("determinant vanished");
        return rep;
    }
    d["det_x_valuation"] = det.local_valuation();
    int deg_lam = shape_degree(u.shape(shape), u.kappa(), u.e());
    d["deg_e_lambda"] = deg_lam;
    if (det.local_valuation() != deg_lam) fail("x-valuation of det != deg_e(lambda)");

    // unit cross-check: det / Phi_e(t)^{deg} is a unit, and det = u * prod gammas
    Scalar phi = Scalar::zero(sys.mode());
    const Poly<Rat>& pp = cyclotomic_polynomial(u.e());
    for (long i = 0; i <= pp.degree(); ++i)
        phi += Scalar::of_rat(sys.mode(), pp.coeff((std::size_t)i)) * sys.tpow(i);
    Scalar ratio = det / phi.pow(deg_lam);
    if (ratio.local_class() != LocalClass::Unit)
        fail("det / Phi_e^{deg} is not a local unit", json{{"ratio", ratio.str()}});
    Scalar gamma_prod = sys.one();
    for (int v = 0; v < dim; ++v) gamma_prod *= sys.gamma({shape, v});
    if (det != gamma_prod) fail("det != product of gammas");

    // residue blocks
    json blocks = json::array();
    int degsum = 0;
    for (const auto& [i, cls] : u.residue_classes()) {
        std::vector<int> idx;
        for (int t = 0; t < dim; ++t)
            if (u.residue_seq({shape, t}) == i) idx.push_back(t);
        if (idx.empty()) continue;
        Scalar bd = det_of(idx);
        int expected = 0;
        for (int t : idx) expected += u.degree({shape, t});
        json b{{"i", i}, {"size", idx.size()}, {"deg_e_i", expected}};
        if (bd.is_zero()) {
            fail("block determinant vanished", b);
            blocks.push_back(b);
            continue;
        }
        b["x_valuation"] = bd.local_valuation();
        if (bd.local_valuation() != expected) fail("block x-valuation != deg_{e,i}", b);
        Scalar bratio = bd / phi.pow(expected);
        if (bratio.local_class() != LocalClass::Unit) fail("block det not unit times Phi^deg", b);
        degsum += expected;
        blocks.push_back(b);
    }
    d["blocks"] = blocks;
    if (degsum != deg_lam) fail("sum of block degrees != deg_e(lambda)");
    return rep;
}

}  // namespace

GramShapeReport gram_det_report(const System& sys, int shape, GramVariant v) {
    switch (v) {
        case GramVariant::MurphyGeneric: return murphy_generic_report(sys, shape, false);
        case GramVariant::DegenerateT1: return murphy_generic_report(sys, shape, true);
        case GramVariant::PsiGraded: return psi_graded_report(sys, shape);
    }
    throw std::logic_error("unreachable");
}

VerificationReport gram_suite(const System& sys, GramVariant v, int jobs,
                              std::vector<GramShapeReport>* out) {
    VerificationReport rep;
    rep.suite = "gram";
    const Universe& u = sys.U();
    std::vector<GramShapeReport> reports((std::size_t)u.num_shapes());
    parallel_for(jobs, u.num_shapes(),
                 [&](int sh) { reports[(std::size_t)sh] = gram_det_report(sys, sh, v); });
    for (const auto& r : reports) {
        json inst{{"shape", r.shape}, {"variant", gram_variant_name(v)}};
        rep.add("gram-factorization", inst, r.pass, r.pass ? json(nullptr) : r.details);
    }
    if (out) *out = std::move(reports);
    return rep;
}

VerificationReport positivity_sweep(int n, int level, const std::vector<long>& kappa) {
    VerificationReport rep;
    rep.suite = "positivity";
    for (const auto& lam : enumerate_multipartitions(n, level)) {
        json inst{{"shape", lam.str()}};
        bool ok = true;
        json w = nullptr;
        for (int e = 0; e <= n + 1 && ok; ++e) {
            if (e == 1) continue;
            int deg = shape_degree(lam, kappa, e);
            if (deg < 0) {
                ok = false;
                w = json{{"e", e}, {"deg", deg}};
            }
        }
        for (int p = 2; p <= n + 1 && ok; ++p) {
            bool prime = true;
            for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
            if (!prime) continue;
            int deg = shape_degree_p(lam, kappa, p);
            if (deg < 0) {
                ok = false;
                w = json{{"p", p}, {"Deg_p", deg}};
            }
        }
        // large e agrees with e = 0
        long lo = 0, hi = 0;
        for (const Node& nd : lam.nodes()) {
            lo = std::min(lo, node_content(nd, kappa));
            hi = std::max(hi, node_content(nd, kappa));
        }
        int big = (int)(hi - lo + 2);
        if (ok && shape_degree(lam, kappa, big) != shape_degree(lam, kappa, 0)) {
            ok = false;
            w = json{{"e", big}, {"mismatch", "deg_e != deg_0"}};
        }
        rep.add("degree-positivity", inst, ok, w);
    }
    return rep;
}

}  // namespace heckelab
