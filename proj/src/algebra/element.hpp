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

#include "algebra/system.hpp"

namespace heckelab {

/// Index of a seminormal basis vector f_{st}: both tableaux share a shape.
struct PairKey {
    int shape = -1;
    int s = -1;
    int t = -1;
    friend bool operator==(const PairKey& a, const PairKey& b) {
        return a.shape == b.shape && a.s == b.s && a.t == b.t;
    }
    friend bool operator<(const PairKey& a, const PairKey& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        if (a.s != b.s) return a.s < b.s;
        return a.t < b.t;
    }
    TabRef row() const { return {shape, s}; }
    TabRef col() const { return {shape, t}; }
};

/// Sparse element of the algebra in f-coordinates:
/// sum of coeff * f_{st} with multiplication f_{st} f_{uv} = delta_{tu}
/// gamma_t f_{sv}.
class Element {
   public:
    Element() : sys_(nullptr) {}
    explicit Element(const System* sys) : sys_(sys) {}

    const System* system() const { return sys_; }
    bool attached() const { return sys_ != nullptr; }
    bool is_zero() const { return c_.empty(); }
    std::size_t support_size() const { return c_.size(); }
    const std::map<PairKey, Scalar>& coeffs() const { return c_; }
    Scalar coeff(const PairKey& k) const;

    void add_term(const PairKey& k, const Scalar& v);
    void set_term(const PairKey& k, const Scalar& v);

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }
    friend Element operator*(const Scalar& c, const Element& a);
    friend Element operator*(const Element& a, const Scalar& c) { return c * a; }

    /// Cellular involution: moves the coefficient at (s,t) to (t,s).
    /// The flavor must match the system's.
    Element involute(Flavor f) const;

    std::string str() const;

   private:
    void check(const Element& o) const {
        if (sys_ != o.sys_) throw SystemMismatch();
    }
    const System* sys_;
    std::map<PairKey, Scalar> c_;
};

}  // namespace heckelab
