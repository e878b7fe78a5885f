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

#include <memory>
#include <mutex>
#include <unordered_map>

#include "algebra/coeffs.hpp"
#include "arith/scalar.hpp"
#include "combi/universe.hpp"

namespace heckelab {

class Element;

/// A seminormal system: a universe, a coefficient system (alpha for star
/// kinds / beta for the diamond kind) and a gamma table. Immutable after
/// construction; generator elements are memoized behind a lock.
class System {
   public:
    System(std::shared_ptr<const Universe> u, Mode mode, SystemKind kind, GammaSeed seed);

    const Universe& U() const { return *u_; }
    std::shared_ptr<const Universe> universe_ptr() const { return u_; }
    Mode mode() const { return mode_; }
    SystemKind kind() const { return kind_; }
    GammaSeed seed() const { return seed_; }
    Flavor flavor() const { return flavor_of(kind_); }

    // scalar helpers
    Scalar zero() const { return Scalar::zero(mode_); }
    Scalar one() const { return Scalar::one(mode_); }
    Scalar q(long d) const { return Scalar::quantum(mode_, d); }
    Scalar tpow(long k) const { return Scalar::t_pow(mode_, k); }

    /// Scalar content C_k(t): [c_k(t)] in the integral modes, x^l + c_k(t)
    /// in linear-quiver mode.
    const Scalar& C(TabRef t, int k) const;
    /// Eigenvalues of M_r = 1 - L_r + t L_{r+1} and M_r' = 1 + t L_r - L_{r+1}.
    Scalar M_eigen(TabRef t, int r) const;
    Scalar Mp_eigen(TabRef t, int r) const;
    /// Hecke cyclotomic parameter Q_l (1-based).
    Scalar Q(int l) const;
    /// y_r eigenvalue on f with moving tableau t.
    Scalar y_eigen(TabRef t, int r) const;
    /// Shifted eigenvalue of (t^d y_r + [d]).
    Scalar y_shift_eigen(TabRef t, int r, long d) const;

    const Scalar& gamma(TabRef t) const { return gamma_[(std::size_t)U().gid(t)]; }
    const Scalar& inv_gamma(TabRef t) const { return inv_gamma_[(std::size_t)U().gid(t)]; }

    /// Base coefficient table: alpha (star kinds) or beta (diamond kind);
    /// zero when t(r,r+1) is not standard.
    const Scalar& base_coeff(TabRef t, int r) const {
        return base_[(std::size_t)U().gid(t)][(std::size_t)r - 1];
    }
    // Action coefficients. Left = acting on the row tableau, right = on the
    // column tableau; the moving tableau is the argument.
    Scalar coeff_T_left(TabRef s, int r) const;
    Scalar coeff_T_right(TabRef t, int r) const;
    Scalar diag_T_left(TabRef s, int r) const;
    Scalar diag_T_right(TabRef t, int r) const;
    Scalar coeff_psi_left(TabRef s, int r) const;
    Scalar coeff_psi_right(TabRef t, int r) const;
    Scalar diag_psi_left(TabRef s, int r) const;
    Scalar diag_psi_right(TabRef t, int r) const;

    // Generator elements (memoized); defined in element.cpp.
    const Element& identity() const;
    const Element& gen_T(int r) const;
    const Element& gen_L(int k) const;
    const Element& gen_y(int r) const;
    const Element& gen_psi(int r) const;
    const Element& gen_e(const std::vector<long>& i) const;
    Element gen_y_shift(long d, int r) const;
    Element gen_inv_M(int r, const std::vector<long>& i) const;
    Element gen_inv_Mp(int r, const std::vector<long>& i) const;
    Element gen_inv_Ldiff(int r, const std::vector<long>& i) const;
    Element gen_M(int r) const;
    Element gen_Mp(int r) const;
    /// Scalar multiple of the identity.
    Element scalar_element(const Scalar& c) const;

    /// Murphy-system closed form gamma(t^lam), and the graded (KLR) one.
    Scalar gamma_seed_value(int shape) const;

   private:
    friend class Element;
    void build_tables();
    Scalar murphy_alpha(TabRef t, int r) const;
    Scalar rational_alpha(TabRef t, int r) const;
    Scalar diamond_beta(TabRef t, int r) const;
    Scalar linear_alpha(TabRef t, int r) const;

    std::shared_ptr<const Universe> u_;
    Mode mode_;
    SystemKind kind_;
    GammaSeed seed_;
    std::vector<Scalar> scalar_contents_;  // gid * n + (k-1)
    std::vector<std::vector<Scalar>> base_;
    std::vector<Scalar> gamma_, inv_gamma_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, std::shared_ptr<Element>> cache_;
};

}  // namespace heckelab
