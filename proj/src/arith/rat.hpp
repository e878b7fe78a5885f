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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckelab {

using Int = mpz_class;

/// Exact rational number. Canonical form (den > 0, gcd(num,den) = 1) is
/// maintained by GMP on every operation.
class Rat {
   public:
    Rat() : q_(0) {}
    Rat(long v) : q_(v) {}
    Rat(const Int& v) : q_(v) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sgn() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / q_);
    }

    Rat pow(long k) const {
        if (k == 0) return Rat(1);
        Rat base = k > 0 ? *this : inverse();
        unsigned long n = k > 0 ? (unsigned long)k : (unsigned long)(-k);
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), base.q_.get_num().get_mpz_t(), n);
        mpz_pow_ui(pd.get_mpz_t(), base.q_.get_den().get_mpz_t(), n);
        return Rat(pn, pd);
    }

    /// p-adic valuation; requires a nonzero value.
    long p_valuation(unsigned long p) const {
        if (is_zero()) throw std::domain_error("Rat: valuation of zero");
        auto val = [&](const Int& z) {
            long v = 0;
            Int a = z, q, r;
            Int pp((unsigned long)p);
            while (true) {
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
                if (r != 0) break;
                a = q;
                ++v;
            }
            return v;
        };
        return val(num()) - val(den());
    }

    /// Reduction modulo p for a p-integral value.
    std::uint64_t mod_p(std::uint64_t p) const;

    std::string str() const { return q_.get_str(); }
    static Rat parse(const std::string& s) { return Rat(mpq_class(s)); }

   private:
    mpq_class q_;
};

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inv_mod: not invertible");
    return pow_mod_u64(a % p, p - 2, p);  // p prime
}

inline std::uint64_t Rat::mod_p(std::uint64_t p) const {
    if (!is_zero() && p_valuation(p) < 0) throw std::domain_error("Rat::mod_p: not p-integral");
    Int n = num(), d = den();
    Int pp((unsigned long)p);
    Int nn = n % pp, dd = d % pp;
    if (nn < 0) nn += pp;
    std::uint64_t un = nn.get_ui(), ud = dd.get_ui();
    return (unsigned __int128)un * inv_mod_u64(ud, p) % p;
}

/// Z/pZ with p a (small) prime; used for the mod-p specialisation checks.
class Fp {
   public:
    Fp() : p_(0), v_(0) {}
    Fp(std::uint64_t p, std::uint64_t v) : p_(p), v_(v % p) {}
    static Fp from_rat(std::uint64_t p, const Rat& r) { return Fp(p, r.mod_p(p)); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.mod(b), a.v_ + b.v_); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.mod(b), a.v_ + (a.mod(b) - b.v_ % a.mod(b))); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.mod(b), (unsigned __int128)a.v_ * b.v_ % a.mod(b)); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }
    Fp operator-() const { return Fp(p_, p_ - v_ % p_); }
    Fp inverse() const { return Fp(p_, inv_mod_u64(v_, p_)); }

   private:
    std::uint64_t mod(const Fp& o) const {
        if (p_ && o.p_ && p_ != o.p_) throw std::domain_error("Fp: modulus mismatch");
        return p_ ? p_ : o.p_;
    }
    std::uint64_t p_;
    std::uint64_t v_;
};

}  // namespace heckelab
