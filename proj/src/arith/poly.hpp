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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "arith/rat.hpp"

namespace heckelab {

/// Dense univariate polynomial over an exact field K.
/// Coefficients are stored low degree first with no trailing zeros.
template <class K>
class Poly {
   public:
    Poly() = default;
    explicit Poly(K c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(K c, std::size_t d) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(d + 1, K());
        p.c_[d] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : (long)c_.size() - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& lc() const { return c_.back(); }

    /// Multiplicity of the root 0 (index of the lowest nonzero coefficient).
    long trailing_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return (long)i;
        return -1;
    }

    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    /// Euclidean division; K must be a field.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        r = a;
        q = Poly();
        if (a.degree() < b.degree()) return;
        std::vector<K> qc(a.degree() - b.degree() + 1, K());
        K blc_inv = b.lc().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            long d = r.degree() - b.degree();
            K f = r.lc() * blc_inv;
            qc[d] = f;
            // r -= f * x^d * b
            for (long i = 0; i <= b.degree(); ++i) r.c_[i + d] -= f * b.c_[i];
            r.trim();
        }
        q = Poly(std::move(qc));
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly exact_div(const Poly& b) const {
        Poly q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw std::domain_error("Poly: division not exact");
        return q;
    }

    bool divides(const Poly& a) const {
        Poly q, r;
        divmod(a, *this, q, r);
        return r.is_zero();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inverse());
    }

    K eval(const K& v) const {
        K r{};
        for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
        return r;
    }

    Poly pow(unsigned long k) const {
        Poly r(K(1)), b = *this;
        while (k) {
            if (k & 1) r *= b;
            if (k >>= 1) b *= b;
        }
        return r;
    }

    /// Substitute another polynomial for the variable.
    Poly compose(const Poly& inner) const {
        Poly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + Poly(c_[i]);
        return r;
    }

    std::string str(const std::string& var) const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

namespace detail {

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class K>
Poly<K> prem(Poly<K> a, const Poly<K>& b) {
    long d = a.degree() - b.degree();
    if (d < 0) return a;
    const K& lb = b.lc();
    for (long k = 0; k <= d; ++k) {
        long da = a.degree();
        if (da < b.degree()) {
            a = a.scaled(lb);
            continue;
        }
        K f = a.lc();
        Poly<K> shifted = Poly<K>::monomial(f, (std::size_t)(da - b.degree())) * b;
        a = a.scaled(lb) - shifted;
    }
    return a;
}

}  // namespace detail

/// Monic gcd via the subresultant polynomial remainder sequence.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    K g(1), h(1);
    while (true) {
        long d = a.degree() - b.degree();
        Poly<K> r = detail::prem(a, b);
        if (r.is_zero()) return b.monic();
        if (r.degree() == 0) return Poly<K>(K(1));
        K divisor = g;
        for (long i = 0; i < d; ++i) divisor = divisor * h;
        a = b;
        b = r.scaled(divisor.inverse());
        g = a.lc();
        // h = g^d * h^(1-d)
        if (d == 0) {
            // h unchanged
        } else {
            K gg(1);
            for (long i = 0; i < d; ++i) gg = gg * g;
            K hh(1);
            for (long i = 0; i < d - 1; ++i) hh = hh * h;
            h = gg * (d >= 1 ? hh.inverse() : hh);
        }
    }
}

/// For rational coefficients: strip integer content first so the
/// subresultant sequence runs over (near-)integer data.
inline Poly<Rat> poly_gcd(Poly<Rat> a, Poly<Rat> b) {
    auto primitivize = [](Poly<Rat>& p) {
        if (p.is_zero()) return;
        Int l(1), g(0);
        for (const auto& c : p.coeffs())
            if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        for (const auto& c : p.coeffs())
            if (!c.is_zero()) {
                Int t = c.num() * (l / c.den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
            }
        p = p.scaled(Rat(l, g));
    };
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    primitivize(a);
    primitivize(b);
    return poly_gcd<Rat>(std::move(a), std::move(b));
}

template <class K>
std::string Poly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const K& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        // compound coefficients (cyclotomic polynomials in z) are always
        // parenthesised and never have their sign folded into the separator
        bool compound = cs.find_first_of("+*^") != std::string::npos ||
                        cs.find('-', 1) != std::string::npos;
        if (compound) {
            if (!first) out += "+";
            first = false;
            out += "(" + cs + ")";
            if (i > 0) {
                out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
            continue;
        }
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? "-" : "+";
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace heckelab
