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

namespace heckelab {

/// Laurent polynomial: lowest exponent plus a dense coefficient vector.
/// Leading and trailing coefficients are nonzero unless the value is zero.
template <class K>
class Laurent {
   public:
    Laurent() : low_(0) {}
    Laurent(long low, std::vector<K> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
    explicit Laurent(K c) : low_(0) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    static Laurent from_poly(const Poly<K>& p, long shift = 0) {
        return Laurent(shift, p.coeffs());
    }
    static Laurent monomial(K c, long d) {
        Laurent r;
        if (c.is_zero()) return r;
        r.low_ = d;
        r.c_.push_back(std::move(c));
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0].is_one(); }
    long low() const { return low_; }
    long high() const { return low_ + (long)c_.size() - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(long d) const {
        if (d < low_ || d > high()) return K();
        return c_[d - low_];
    }

    /// The ordinary-polynomial part after factoring out x^low (low may be
    /// negative); pair (low, poly).
    Poly<K> unit_part() const { return Poly<K>(c_); }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.low_ == b.low_ && a.unit_part() == b.unit_part();
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
        std::vector<K> c((std::size_t)(hi - lo + 1), K());
        for (long d = a.low_; d <= a.high(); ++d) c[d - lo] += a.coeff(d);
        for (long d = b.low_; d <= b.high(); ++d) c[d - lo] += b.coeff(d);
        return Laurent(lo, std::move(c));
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        Poly<K> p = a.unit_part() * b.unit_part();
        return Laurent(a.low_ + b.low_, p.coeffs());
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    K eval_at_one() const {
        K r{};
        for (const auto& x : c_) r += x;
        return r;
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        if (low_ >= 0) return Poly<K>(Laurent(0, pad_up()).c_).str(var);
        std::string up = unit_part().str(var);
        std::string shift = var + "^" + std::to_string(low_);
        if (up == "1") return shift;
        if (up.find_first_of("+-") != std::string::npos && up[0] != '-')
            return "(" + up + ")*" + shift;
        if (up.find_first_of("+-", 1) != std::string::npos)
            return "(" + up + ")*" + shift;
        return up + "*" + shift;
    }

   private:
    std::vector<K> pad_up() const {
        std::vector<K> c((std::size_t)(high() + 1), K());
        for (long d = low_; d <= high(); ++d) c[(std::size_t)d] = coeff(d);
        return c;
    }
    void trim() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + (long)lead);
            low_ += (long)lead;
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    long low_;
    std::vector<K> c_;
};

}  // namespace heckelab
