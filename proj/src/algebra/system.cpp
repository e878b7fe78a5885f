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

#include "algebra/system.hpp"

namespace heckelab {

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::Rational: return "rational";
        case SystemKind::Murphy: return "murphy";
        case SystemKind::DiamondKLR: return "diamond";
        case SystemKind::LinearQuiver: return "linear-quiver";
    }
    return "?";
}

std::string seed_name(GammaSeed g) {
    return g == GammaSeed::MurphySeed ? "murphy" : "klr";
}

namespace {

enum class ResCase { Equal, Plus1, Other };  // i_r vs i_{r+1} (mod e)

ResCase res_case(long ir, long ir1, int e) {
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(ir, ir1)) return ResCase::Equal;
    if (eq(ir, ir1 + 1)) return ResCase::Plus1;
    return ResCase::Other;
}

ResCase res_case_minus(long ir, long ir1, int e) {  // tests i_r = i_{r+1} - 1
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(ir, ir1)) return ResCase::Equal;
    if (eq(ir + 1, ir1)) return ResCase::Plus1;
    return ResCase::Other;
}

}  // namespace

System::System(std::shared_ptr<const Universe> u, Mode mode, SystemKind kind, GammaSeed seed)
    : u_(std::move(u)), mode_(mode), kind_(kind), seed_(seed) {
    bool lq_mode = mode_.tag == ModeTag::LinearQuiver;
    bool lq_kind = kind_ == SystemKind::LinearQuiver;
    if (lq_mode != lq_kind)
        throw std::domain_error("System: LinearQuiver kind goes with linear-quiver mode only");
    if (kind_ == SystemKind::DiamondKLR && mode_.tag == ModeTag::GenericT)
        throw std::domain_error("System: DiamondKLR needs an idempotent subring mode");
    if (mode_.quantum_char() != u_->e())
        throw std::domain_error("System: mode/universe quantum characteristic mismatch");
    build_tables();
}

const Scalar& System::C(TabRef t, int k) const {
    return scalar_contents_[(std::size_t)(U().gid(t) * U().n() + (k - 1))];
}

Scalar System::M_eigen(TabRef t, int r) const {
    return one() - C(t, r) + Scalar::t(mode_) * C(t, r + 1);
}

Scalar System::Mp_eigen(TabRef t, int r) const {
    return one() + Scalar::t(mode_) * C(t, r) - C(t, r + 1);
}

Scalar System::Q(int l) const {
    long kap = U().kappa()[(std::size_t)l - 1];
    if (mode_.tag == ModeTag::LinearQuiver)
        return Scalar::x_pow(mode_, l) + q(kap);
    return q(kap);
}

Scalar System::y_eigen(TabRef t, int r) const {
    long ir = U().residue(t, r);
    if (mode_.tag == ModeTag::LinearQuiver) return C(t, r) - q(ir);
    return q(U().content(t, r) - ir);
}

Scalar System::y_shift_eigen(TabRef t, int r, long d) const {
    if (mode_.tag == ModeTag::LinearQuiver)
        return Scalar::t_pow(mode_, d) * y_eigen(t, r) + q(d);
    return q(U().content(t, r) - U().residue(t, r) + d);
}

Scalar System::murphy_alpha(TabRef t, int r) const {
    auto v = U().swapped(t, r);
    if (!v) return zero();
    if (U().perm(t).length() < U().perm(*v).length()) return one();  // t gdom v
    Scalar num = q(1 + U().rho(t, r)) * q(1 + U().rho(*v, r));
    Scalar den = q(U().rho(t, r)) * q(U().rho(*v, r));
    if (den.is_zero()) throw SeparationFailure("murphy_alpha: [rho] vanished");
    return num / den;
}

Scalar System::rational_alpha(TabRef t, int r) const {
    auto v = U().swapped(t, r);
    if (!v) return zero();
    Scalar den = q(U().rho(t, r));
    if (den.is_zero()) throw SeparationFailure("rational_alpha: [rho] vanished");
    return q(1 + U().rho(t, r)) / den;
}

Scalar System::linear_alpha(TabRef t, int r) const {
    auto v = U().swapped(t, r);
    if (!v) return zero();
    if (U().perm(t).length() < U().perm(*v).length()) return one();
    // full product condition on the lower tableau
    Scalar ct = C(t, r), cu = C(t, r + 1);  // C_r(v) = C_{r+1}(t)
    Scalar tt = Scalar::t(mode_);
    Scalar num = (one() - ct + tt * cu) * (one() + tt * ct - cu);
    Scalar p = cu - ct;
    Scalar den = p * (-p);
    if (den.is_zero()) throw SeparationFailure("linear_alpha: P_r vanished");
    return num / den;
}

Scalar System::diamond_beta(TabRef s, int r) const {
    auto t = U().swapped(s, r);
    if (!t) return zero();
    long ir = U().residue(s, r), ir1 = U().residue(s, r + 1);
    int e = U().e();
    bool s_dominant = U().perm(s).length() < U().perm(*t).length();
    int c = cartan(ir, ir1, e);
    if (s_dominant || (c == 0 && ir != ir1)) return one();
    long cr = U().content(s, r), cr1 = U().content(s, r + 1);
    long rho = cr - cr1;
    switch (res_case(ir, ir1, e)) {
        case ResCase::Equal: {
            Scalar d = q(rho);
            if (d.is_zero()) throw SeparationFailure("diamond_beta: [rho] vanished");
            return -(tpow(2 * ir - 2 * cr1) / (d * d));
        }
        default:
            break;
    }
    if (c == -2)  // double edge (e = 2)
        return tpow(cr + cr1 - ir - ir1) * q(1 - rho) * q(1 + rho);
    if (cartan(ir + 1, ir1, e) == 2)  // i_r -> i_{r+1}
        return tpow(cr1 - ir1) * q(1 + rho);
    // i_r <- i_{r+1}
    return tpow(cr - ir) * q(1 - rho);
}

void System::build_tables() {
    const Universe& u = U();
    int n = u.n();
    // scalar contents
    scalar_contents_.reserve((std::size_t)(u.total_tabs() * n));
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        for (int k = 1; k <= n; ++k) {
            if (mode_.tag == ModeTag::LinearQuiver)
                scalar_contents_.push_back(Scalar::x_pow(mode_, u.component(t, k)) +
                                           q(u.content(t, k)));
            else
                scalar_contents_.push_back(q(u.content(t, k)));
        }
    }
    // base coefficients
    base_.resize((std::size_t)u.total_tabs());
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        auto& row = base_[(std::size_t)g];
        row.reserve((std::size_t)std::max(n - 1, 0));
        for (int r = 1; r < n; ++r) {
            switch (kind_) {
                case SystemKind::Murphy: row.push_back(murphy_alpha(t, r)); break;
                case SystemKind::Rational: row.push_back(rational_alpha(t, r)); break;
                case SystemKind::DiamondKLR: row.push_back(diamond_beta(t, r)); break;
                case SystemKind::LinearQuiver: row.push_back(linear_alpha(t, r)); break;
            }
        }
    }
    // gamma tables, seeded at t^lam and propagated along the dominance tree
    gamma_.assign((std::size_t)u.total_tabs(), zero());
    inv_gamma_.assign((std::size_t)u.total_tabs(), zero());
    for (int s = 0; s < u.num_shapes(); ++s) {
        gamma_[(std::size_t)u.gid({s, 0})] = gamma_seed_value(s);
        // tableaux are sorted with word length compatible with dominance, so
        // parents are always processed first
        std::vector<TabRef> order;
        for (int t = 1; t < u.num_tabs(s); ++t) order.push_back({s, t});
        std::sort(order.begin(), order.end(), [&](TabRef a, TabRef b) {
            return u.perm(a).length() < u.perm(b).length();
        });
        for (TabRef t : order) {
            auto par = u.parent(t);
            if (!par) throw std::logic_error("System: missing parent");
            auto [v, r] = *par;
            // gamma recurrence: gamma_t = base(t) gamma_v / base(v)
            Scalar bv = base_coeff(v, r), bt = base_coeff(t, r);
            if (bv.is_zero()) throw SeparationFailure("gamma recurrence: zero coefficient");
            gamma_[(std::size_t)u.gid(t)] = bt * gamma_[(std::size_t)u.gid(v)] / bv;
        }
    }
    for (int g = 0; g < u.total_tabs(); ++g) {
        if (gamma_[(std::size_t)g].is_zero())
            throw SeparationFailure("gamma vanished; separation fails");
        inv_gamma_[(std::size_t)g] = gamma_[(std::size_t)g].inverse();
    }
}

Scalar System::gamma_seed_value(int shape) const {
    const Universe& u = U();
    const Multipartition& lam = u.shape(shape);
    TabRef tlam{shape, 0};
    if (seed_ == GammaSeed::KLRSeed) {
        // prod_r prod_{alpha in Add_lam(r)} [cont_r(t^lam) - c_alpha]
        // (scalar contents in linear-quiver mode)
        Scalar g = one();
        for (int r = 1; r <= u.n(); ++r) {
            for (const Node& a : u.addable_below_cached(shape, r)) {
                if (mode_.tag == ModeTag::LinearQuiver) {
                    Scalar ca = Scalar::x_pow(mode_, a.l) + q(node_content(a, u.kappa()));
                    g *= C(tlam, r) - ca;
                } else {
                    g *= q(u.content(tlam, r) - node_content(a, u.kappa()));
                }
            }
        }
        return g;
    }
    // Murphy seed: [lam]!_t prod_{l<m} prod_{(l,r,c) in lam} [kappa_l - r + c - kappa_m]
    Scalar g = one();
    for (const auto& comp : lam.components())
        for (int part : comp)
            for (long j = 1; j <= part; ++j) g *= q(j);
    int ell = u.level();
    for (const Node& nd : lam.nodes()) {
        for (int m = nd.l + 1; m <= ell; ++m) {
            if (mode_.tag == ModeTag::LinearQuiver) {
                // (C_(l,r,c) - Q_m) with Q_m = x^m + [kappa_m]
                Scalar cnode = Scalar::x_pow(mode_, nd.l) + q(node_content(nd, u.kappa()));
                g *= cnode - Q(m);
            } else {
                g *= q(node_content(nd, u.kappa()) - u.kappa()[(std::size_t)m - 1]);
            }
        }
    }
    return g;
}

// ---- derived action coefficients ------------------------------------------

Scalar System::coeff_T_left(TabRef s, int r) const {
    if (flavor() == Flavor::Star) return base_coeff(s, r);
    // diamond: invert the psi-coefficient map
    auto u = U().swapped(s, r);
    if (!u) return zero();
    const Scalar& b = base_coeff(s, r);
    long ir = U().residue(s, r), ir1 = U().residue(s, r + 1);
    long cr = U().content(s, r), cr1 = U().content(s, r + 1);
    long rho = cr - cr1;
    switch (res_case(ir, ir1, U().e())) {
        case ResCase::Equal: return b * tpow(cr - ir) * q(1 - rho);
        case ResCase::Plus1: return b * tpow(ir - cr1) / q(rho);
        default: return b * tpow(rho) * q(1 - rho) / q(rho);
    }
}

Scalar System::coeff_T_right(TabRef t, int r) const {
    if (flavor() == Flavor::Star) return base_coeff(t, r);
    auto v = U().swapped(t, r);
    if (!v) return zero();
    const Scalar& b = base_coeff(t, r);
    long ir = U().residue(t, r), ir1 = U().residue(t, r + 1);
    long cr1 = U().content(t, r + 1);
    long rho = U().content(t, r) - cr1;
    switch (res_case_minus(ir, ir1, U().e())) {
        case ResCase::Equal: return b * tpow(cr1 - ir1) * q(1 + rho);
        case ResCase::Plus1: return -(b * tpow(ir1 - cr1) / q(rho));  // i_r = i_{r+1} - 1
        default: return -(b * q(1 + rho) / q(rho));
    }
}

Scalar System::diag_T_left(TabRef s, int r) const {
    // (1 + (t-1) C_{r+1}(s)) / P_r(s); equals -1/[rho_r(s)] for integral contents
    Scalar p = C(s, r + 1) - C(s, r);
    if (p.is_zero()) throw SeparationFailure("diag_T: P_r vanished");
    return (one() + (Scalar::t(mode_) - one()) * C(s, r + 1)) / p;
}

Scalar System::diag_T_right(TabRef t, int r) const { return diag_T_left(t, r); }

Scalar System::coeff_psi_left(TabRef s, int r) const {
    if (flavor() == Flavor::Diamond) return base_coeff(s, r);
    auto u = U().swapped(s, r);
    if (!u) return zero();
    const Scalar& a = base_coeff(s, r);
    long ir = U().residue(s, r), ir1 = U().residue(s, r + 1);
    if (mode_.tag == ModeTag::LinearQuiver) {
        // from (T_r L_r - L_r T_r) f_st = -alpha_r(s) P_r(s) f_ut
        Scalar p = C(s, r + 1) - C(s, r);
        switch (res_case(ir, ir1, 0)) {
            case ResCase::Equal: return a / M_eigen(s, r);
            case ResCase::Plus1: return -(a * p);
            default: return -(a * p / M_eigen(s, r));
        }
    }
    long cr = U().content(s, r), cr1 = U().content(s, r + 1);
    long rho = cr - cr1;
    switch (res_case(ir, ir1, U().e())) {
        case ResCase::Equal: return tpow(ir - cr) * a / q(1 - rho);
        case ResCase::Plus1: return tpow(cr1 - ir) * a * q(rho);
        default: return tpow(-rho) * a * q(rho) / q(1 - rho);
    }
}

Scalar System::coeff_psi_right(TabRef t, int r) const {
    if (flavor() == Flavor::Diamond) return base_coeff(t, r);
    auto v = U().swapped(t, r);
    if (!v) return zero();
    const Scalar& a = base_coeff(t, r);
    long ir = U().residue(t, r), ir1 = U().residue(t, r + 1);
    if (mode_.tag == ModeTag::LinearQuiver) {
        Scalar p = C(t, r + 1) - C(t, r);
        switch (res_case_minus(ir, ir1, 0)) {
            case ResCase::Equal: return a / Mp_eigen(t, r);
            case ResCase::Plus1: return a * p;  // i_r = i_{r+1} - 1
            default: return a * p / Mp_eigen(t, r);
        }
    }
    long cr1 = U().content(t, r + 1);
    long rho = U().content(t, r) - cr1;
    switch (res_case_minus(ir, ir1, U().e())) {
        case ResCase::Equal: return tpow(ir1 - cr1) * a / q(1 + rho);
        case ResCase::Plus1: return -(tpow(cr1 - ir1) * a * q(rho));
        default: return -(a * q(rho) / q(1 + rho));
    }
}

Scalar System::diag_psi_left(TabRef s, int r) const {
    long ir = U().residue(s, r), ir1 = U().residue(s, r + 1);
    if (ir != ir1) return zero();
    if (mode_.tag == ModeTag::LinearQuiver) {
        Scalar p = C(s, r + 1) - C(s, r);
        return p.inverse();
    }
    long rho = U().rho(s, r);
    return -(tpow(ir1 - U().content(s, r + 1)) / q(rho));
}

Scalar System::diag_psi_right(TabRef t, int r) const { return diag_psi_left(t, r); }

}  // namespace heckelab
