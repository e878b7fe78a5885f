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
#include <utility>

#include "arith/poly.hpp"

namespace heckelab {

/// Rational function num/den over an exact field K, kept in canonical form:
/// gcd(num, den) = 1 and den monic. Equality is therefore coefficient
/// equality.
template <class K>
class RatFunc {
   public:
    RatFunc() : num_(), den_(K(1)) {}
    explicit RatFunc(K c) : num_(std::move(c)), den_(K(1)) {}
    explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(K(1)) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Poly<K> g = poly_gcd(a.den_, b.den_);
        Poly<K> da = a.den_.exact_div(g), db = b.den_.exact_div(g);
        RatFunc r;
        r.num_ = a.num_ * db + b.num_ * da;
        r.den_ = a.den_ * db;
        r.normalize();
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly<K> g1 = poly_gcd(a.num_, b.den_);
        Poly<K> g2 = poly_gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
        r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
        r.normalize();
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Order of vanishing at the variable's origin (negative at a pole).
    long valuation_at_zero() const {
        if (is_zero()) throw std::domain_error("RatFunc: valuation of zero");
        return num_.trailing_degree() - den_.trailing_degree();
    }

    bool regular_at_zero() const { return is_zero() || den_.trailing_degree() == 0; }

    K value_at_zero() const {
        if (is_zero()) return K();
        if (!regular_at_zero()) throw std::domain_error("RatFunc: pole at 0");
        return num_.coeff(0) * den_.coeff(0).inverse();
    }

    K eval(const K& v) const {
        K d = den_.eval(v);
        if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
        return num_.eval(v) * d.inverse();
    }

    std::string str(const std::string& var) const {
        if (is_polynomial()) return num_.str(var);
        std::string n = num_.str(var), d = den_.str(var);
        auto wrap = [](const std::string& s) {
            if (s.find_first_of("+-*^") == std::string::npos) return s;
            return "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }

   private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        if (!den_.lc().is_one()) {
            K inv = den_.lc().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    Poly<K> num_, den_;
};

}  // namespace heckelab
