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

#include <string>
#include <vector>

#include "arith/poly.hpp"
#include "arith/rat.hpp"

namespace heckelab {

/// k-th cyclotomic polynomial Phi_k, integer coefficients, memoized.
const Poly<Rat>& cyclotomic_polynomial(int k);

int euler_phi(int k);

/// Element of the cyclotomic field Q(zeta_e), reduced modulo Phi_e.
/// A default-constructed value is the zero of an unspecified field and
/// combines with any e; this keeps Poly<Cyclo> usable.
class Cyclo {
   public:
    Cyclo() : e_(0) {}
    Cyclo(long v) : e_(0) {
        if (v != 0) c_.assign(1, Rat(v));
    }
    Cyclo(int e, Rat v) : e_(e) {
        if (!v.is_zero()) c_.assign(1, std::move(v));
        pad(e);
    }
    Cyclo(int e, std::vector<Rat> coeffs);

    /// zeta_e itself.
    static Cyclo zeta(int e);
    static Cyclo from_poly(int e, const Poly<Rat>& p);

    int e() const { return e_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const;
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Poly<Rat> as_poly() const { return Poly<Rat>(c_); }

    std::string str() const;
    static Cyclo parse(int e, const std::string& s);

   private:
    void pad(int e);
    static int unify(const Cyclo& a, const Cyclo& b);
    int e_;                // 0 for the field-agnostic zero/rationals
    std::vector<Rat> c_;   // coefficients of 1, z, ..., z^(phi(e)-1); trailing zeros trimmed
};

}  // namespace heckelab
