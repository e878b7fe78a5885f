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

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "arith/cyclo.hpp"
#include "arith/laurent.hpp"
#include "arith/ratfunc.hpp"

namespace heckelab {

/// The coefficient field in use.
///
///   GenericT     Q(t), t an indeterminate (the generic Hecke parameter).
///   CycloLocal   K(x) with K = Q(zeta_e) and t = x + zeta_e; the local ring
///                is O = K[x]_(x).
///   DegenerateP  Q with t = 1 and e = p; the local ring is Z_(p).
///   LinearQuiver Q(x) with t = 1 and e = 0 (appendix mode); local ring
///                Q[x]_(x).
enum class ModeTag : unsigned char { GenericT, CycloLocal, DegenerateP, LinearQuiver };

struct Mode {
    ModeTag tag = ModeTag::GenericT;
    int e = 0;  // CycloLocal: e >= 2; DegenerateP: the prime p; else 0

    static Mode generic_t() { return {ModeTag::GenericT, 0}; }
    static Mode cyclo(int e) { return {ModeTag::CycloLocal, e}; }
    static Mode degenerate_p(int p) { return {ModeTag::DegenerateP, p}; }
    static Mode linear_quiver() { return {ModeTag::LinearQuiver, 0}; }

    /// The e used for residues: e (cyclo), p (degenerate) or 0.
    int quantum_char() const { return tag == ModeTag::GenericT ? 0 : e; }
    bool t_is_one() const { return tag == ModeTag::DegenerateP || tag == ModeTag::LinearQuiver; }
    bool has_local_ring() const { return tag != ModeTag::GenericT; }
    const char* var() const { return tag == ModeTag::GenericT ? "t" : "x"; }

    friend bool operator==(const Mode& a, const Mode& b) { return a.tag == b.tag && a.e == b.e; }
    friend bool operator!=(const Mode& a, const Mode& b) { return !(a == b); }
    std::string str() const;
};

enum class LocalClass { Unit, NonUnitRegular, Pole };

class ModeMismatch : public std::domain_error {
   public:
    ModeMismatch() : std::domain_error("scalar modes differ") {}
};

using RFQ = RatFunc<Rat>;
using RFC = RatFunc<Cyclo>;

/// A value in the active coefficient field, tagged by Mode. Arithmetic on
/// values of different modes throws ModeMismatch.
class Scalar {
   public:
    Scalar() : mode_(Mode::generic_t()), v_(RFQ()) {}
    Scalar(Mode m, Rat v);
    Scalar(Mode m, RFQ v);
    Scalar(Mode m, RFC v);

    static Scalar zero(Mode m) { return of_int(m, 0); }
    static Scalar one(Mode m) { return of_int(m, 1); }
    static Scalar of_int(Mode m, long v) { return Scalar(m, Rat(v)); }
    static Scalar of_rat(Mode m, const Rat& v) { return Scalar(m, v); }
    /// The Hecke parameter t of the mode.
    static Scalar t(Mode m) { return t_pow(m, 1); }
    static Scalar t_pow(Mode m, long k);
    /// The deformation variable x (CycloLocal / LinearQuiver only).
    static Scalar x(Mode m);
    static Scalar x_pow(Mode m, long k);
    /// The quantum integer [d]_t in the active mode.
    static Scalar quantum(Mode m, long d);

    const Mode& mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(long k) const;

    /// Membership class in the mode's local ring (not GenericT).
    LocalClass local_class() const;
    /// Valuation at the local maximal ideal: nu_x (or nu_p); value must be
    /// nonzero.
    long local_valuation() const;
    bool vanishes_at_special_point() const {
        return is_zero() || (local_class() == LocalClass::NonUnitRegular);
    }

    /// Specialised values (throw on pole / mode mismatch).
    Cyclo value_x0_cyclo() const;    // CycloLocal
    Rat value_x0_rat() const;        // LinearQuiver
    Rat rat_value() const;           // DegenerateP
    Rat eval_t1() const;             // GenericT, evaluate at t = 1
    Fp mod_p() const;                // DegenerateP

    /// Principal part at x = 0: the portion in x^{-1} K[x^{-1}].
    /// { } splits *this = principal + regular with regular in the local ring.
    std::pair<Scalar, Scalar> split_principal() const;

    const RFQ& rfq() const;
    const RFC& rfc() const;

    std::string str() const;
    static Scalar parse(Mode m, const std::string& text);

   private:
    void check(const Scalar& o) const {
        if (mode_ != o.mode_) throw ModeMismatch();
    }
    Mode mode_;
    std::variant<Rat, RFQ, RFC> v_;
};

/// ---- scalar_tower operations on polynomial data ------------------------

/// The k-th cyclotomic polynomial in t as an integer Laurent polynomial.
Laurent<Rat> cyclotomic_poly_laurent(int k);

struct CycloFactorization {
    long power_of_t = 0;
    std::map<int, int> multiplicities;  // k -> exponent of Phi_k
    Laurent<Rat> residual;              // carries the sign; no cyclotomic factor
};

/// Factor a nonzero integer Laurent polynomial as
///   +- t^N * prod Phi_k^{d_k} * residual,
/// trial-dividing by every Phi_k with phi(k) <= deg.
CycloFactorization factor_laurent_cyclotomic(const Laurent<Rat>& f);

/// Principal part of f at x = 0 as a Laurent polynomial supported in
/// negative degrees; f - result is regular at 0.
template <class K>
Laurent<K> principal_part_at_zero(const RatFunc<K>& f);

/// Unit / non-unit-regular / pole classification in K[x]_(x).
template <class K>
LocalClass local_unit_test(const RatFunc<K>& f);

extern template Laurent<Rat> principal_part_at_zero(const RatFunc<Rat>&);
extern template Laurent<Cyclo> principal_part_at_zero(const RatFunc<Cyclo>&);
extern template LocalClass local_unit_test(const RatFunc<Rat>&);
extern template LocalClass local_unit_test(const RatFunc<Cyclo>&);

}  // namespace heckelab
