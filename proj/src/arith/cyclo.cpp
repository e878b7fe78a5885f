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

#include "arith/cyclo.hpp"

#include <mutex>
#include <unordered_map>

namespace heckelab {

int euler_phi(int k) {
    int r = k;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            r -= r / p;
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) r -= r / k;
    return r;
}

const Poly<Rat>& cyclotomic_polynomial(int k) {
    static std::mutex mtx;
    static std::unordered_map<int, Poly<Rat>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (k < 1) throw std::domain_error("cyclotomic_polynomial: k >= 1 required");
    // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d, computed recursively
    // without the lock being re-entered.
    std::vector<int> todo{k};
    while (!todo.empty()) {
        int m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        std::vector<Rat> xm(m + 1, Rat(0));
        xm[0] = Rat(-1);
        xm[m] = Rat(1);
        Poly<Rat> num{std::move(xm)};
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = num.exact_div(cache.at(d));
        cache.emplace(m, std::move(num));
        todo.pop_back();
    }
    return cache.at(k);
}

Cyclo::Cyclo(int e, std::vector<Rat> coeffs) : e_(e), c_(std::move(coeffs)) {
    pad(e);
}

void Cyclo::pad(int e) {
    if (e > 0 && (long)c_.size() > euler_phi(e))
        throw std::domain_error("Cyclo: coefficient vector too long");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclo Cyclo::zeta(int e) {
    if (e < 2) throw std::domain_error("Cyclo::zeta: e >= 2 required");
    if (euler_phi(e) == 1) {
        // Q(zeta_2) = Q with zeta = -1.
        return Cyclo(e, e == 2 ? Rat(-1) : Rat(1));
    }
    std::vector<Rat> c(2, Rat(0));
    c[1] = Rat(1);
    return Cyclo(e, std::move(c));
}

Cyclo Cyclo::from_poly(int e, const Poly<Rat>& p) {
    Poly<Rat> r = p % cyclotomic_polynomial(e);
    return Cyclo(e, r.coeffs());
}

bool Cyclo::is_zero() const { return c_.empty(); }

bool Cyclo::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool Cyclo::is_rational() const { return c_.size() <= 1; }

int Cyclo::unify(const Cyclo& a, const Cyclo& b) {
    if (a.e_ && b.e_ && a.e_ != b.e_) throw std::domain_error("Cyclo: field mismatch");
    return a.e_ ? a.e_ : b.e_;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    int e = Cyclo::unify(a, b);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    Cyclo r;
    r.e_ = e;
    r.c_ = std::move(c);
    r.pad(e);
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    int e = Cyclo::unify(a, b);
    if (a.is_zero() || b.is_zero()) return Cyclo(e, Rat(0));
    Poly<Rat> prod = a.as_poly() * b.as_poly();
    if (e == 0) {
        if (prod.degree() > 0) throw std::domain_error("Cyclo: untagged product");
        return Cyclo(0, prod.coeff(0));
    }
    if (prod.degree() >= euler_phi(e)) prod = prod % cyclotomic_polynomial(e);
    Cyclo r;
    r.e_ = e;
    r.c_ = prod.coeffs();
    r.pad(e);
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = r.c_[0].inverse();
        return r;
    }
    // Extended Euclid in Q[z]: u*p + v*Phi_e = 1, so u = p^{-1} mod Phi_e.
    Poly<Rat> a = as_poly(), b = cyclotomic_polynomial(e_);
    Poly<Rat> u0(Rat(1)), u1;
    while (!b.is_zero()) {
        Poly<Rat> q, r;
        Poly<Rat>::divmod(a, b, q, r);
        Poly<Rat> u2 = u0 - q * u1;
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
    }
    // a is the gcd (a nonzero constant since Phi_e is irreducible).
    if (a.degree() != 0) throw std::domain_error("Cyclo: inverse failed");
    Poly<Rat> inv = u0.scaled(a.coeff(0).inverse());
    return from_poly(e_, inv);
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    return as_poly().str("z");
}

Cyclo parse_cyclo_impl(int e, const std::string& s);

Cyclo Cyclo::parse(int e, const std::string& s) { return parse_cyclo_impl(e, s); }

}  // namespace heckelab
