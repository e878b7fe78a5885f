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

#include "algebra/element.hpp"

#include <sstream>

namespace heckelab {

Scalar Element::coeff(const PairKey& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? sys_->zero() : it->second;
}

void Element::add_term(const PairKey& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void Element::set_term(const PairKey& k, const Scalar& v) {
    if (v.is_zero())
        c_.erase(k);
    else
        c_.insert_or_assign(k, v);
}

bool operator==(const Element& a, const Element& b) {
    a.check(b);
    return a.c_ == b.c_;
}

Element Element::operator-() const {
    Element r(sys_);
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
}

Element operator+(const Element& a, const Element& b) {
    a.check(b);
    Element r = a;
    for (const auto& [k, v] : b.c_) r.add_term(k, v);
    return r;
}

Element operator-(const Element& a, const Element& b) {
    a.check(b);
    Element r = a;
    for (const auto& [k, v] : b.c_) r.add_term(k, -v);
    return r;
}

Element operator*(const Scalar& c, const Element& a) {
    Element r(a.sys_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.c_) r.add_term(k, c * v);
    return r;
}

Element operator*(const Element& a, const Element& b) {
    a.check(b);
    Element r(a.sys_);
    if (a.is_zero() || b.is_zero()) return r;
    // group the right factor by its row tableau
    std::map<std::pair<int, int>, std::vector<std::pair<int, const Scalar*>>> by_row;
    for (const auto& [k, v] : b.c_) by_row[{k.shape, k.s}].push_back({k.t, &v});
    for (const auto& [k, v] : a.c_) {
        auto it = by_row.find({k.shape, k.t});
        if (it == by_row.end()) continue;
        const Scalar& g = a.sys_->gamma({k.shape, k.t});
        Scalar left = v * g;
        for (const auto& [t2, v2] : it->second) r.add_term({k.shape, k.s, t2}, left * (*v2));
    }
    return r;
}

Element Element::involute(Flavor f) const {
    if (f != sys_->flavor()) throw FlavorMismatch();
    Element r(sys_);
    for (const auto& [k, v] : c_) r.c_.emplace(PairKey{k.shape, k.t, k.s}, v);
    return r;
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")*f[" << k.shape << ":" << k.s << "," << k.t << "]";
    }
    return os.str();
}

// ---- generator elements ----------------------------------------------------

namespace {

Element identity_of(const System& sys) {
    Element r(&sys);
    const Universe& u = sys.U();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        r.add_term({t.shape, t.tab, t.tab}, sys.inv_gamma(t));
    }
    return r;
}

Element make_T(const System& sys, int r) {
    Element out(&sys);
    const Universe& u = sys.U();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        const Scalar& ig = sys.inv_gamma(t);
        auto w = u.swapped(t, r);
        if (w) out.add_term({t.shape, w->tab, t.tab}, sys.coeff_T_left(t, r) * ig);
        out.add_term({t.shape, t.tab, t.tab}, sys.diag_T_left(t, r) * ig);
    }
    return out;
}

Element make_L(const System& sys, int k) {
    Element out(&sys);
    const Universe& u = sys.U();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        out.add_term({t.shape, t.tab, t.tab}, sys.C(t, k) * sys.inv_gamma(t));
    }
    return out;
}

Element make_y(const System& sys, int r) {
    Element out(&sys);
    const Universe& u = sys.U();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        out.add_term({t.shape, t.tab, t.tab}, sys.y_eigen(t, r) * sys.inv_gamma(t));
    }
    return out;
}

Element make_psi(const System& sys, int r) {
    Element out(&sys);
    const Universe& u = sys.U();
    for (int g = 0; g < u.total_tabs(); ++g) {
        TabRef t = u.flat_tab(g);
        const Scalar& ig = sys.inv_gamma(t);
        auto w = u.swapped(t, r);
        if (w) out.add_term({t.shape, w->tab, t.tab}, sys.coeff_psi_left(t, r) * ig);
        Scalar d = sys.diag_psi_left(t, r);
        if (!d.is_zero()) out.add_term({t.shape, t.tab, t.tab}, d * ig);
    }
    return out;
}

std::string reskey(const std::vector<long>& i) {
    std::string s = "e:";
    for (long v : i) s += std::to_string(v) + ",";
    return s;
}

}  // namespace

const Element& System::identity() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find("1");
    if (it == cache_.end())
        it = cache_.emplace("1", std::make_shared<Element>(identity_of(*this))).first;
    return *it->second;
}

const Element& System::gen_T(int r) const {
    if (r < 1 || r >= U().n()) throw std::domain_error("gen_T: index out of range");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::string key = "T" + std::to_string(r);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_shared<Element>(make_T(*this, r))).first;
    return *it->second;
}

const Element& System::gen_L(int k) const {
    if (k < 1 || k > U().n()) throw std::domain_error("gen_L: index out of range");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::string key = "L" + std::to_string(k);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_shared<Element>(make_L(*this, k))).first;
    return *it->second;
}

const Element& System::gen_y(int r) const {
    if (r < 1 || r > U().n()) throw std::domain_error("gen_y: index out of range");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::string key = "y" + std::to_string(r);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_shared<Element>(make_y(*this, r))).first;
    return *it->second;
}

const Element& System::gen_psi(int r) const {
    if (r < 1 || r >= U().n()) throw std::domain_error("gen_psi: index out of range");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::string key = "p" + std::to_string(r);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_shared<Element>(make_psi(*this, r))).first;
    return *it->second;
}

const Element& System::gen_e(const std::vector<long>& i) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::string key = reskey(i);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        Element out(this);
        if (const auto* cls = U().residue_class(i))
            for (const TabRef& t : *cls)
                out.add_term({t.shape, t.tab, t.tab}, inv_gamma(t));
        it = cache_.emplace(key, std::make_shared<Element>(std::move(out))).first;
    }
    return *it->second;
}

Element System::gen_y_shift(long d, int r) const {
    if (mode_.tag == ModeTag::GenericT)
        throw std::domain_error("gen_y_shift: needs an idempotent subring mode");
    Element out(this);
    for (int g = 0; g < U().total_tabs(); ++g) {
        TabRef t = U().flat_tab(g);
        out.add_term({t.shape, t.tab, t.tab}, y_shift_eigen(t, r, d) * inv_gamma(t));
    }
    return out;
}

Element System::gen_inv_M(int r, const std::vector<long>& i) const {
    long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
    int e = U().e();
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(ir, ir1 + 1))
        throw ResidueConditionViolated("1/M_r f_i needs i_r != i_{r+1} + 1");
    Element out(this);
    if (const auto* cls = U().residue_class(i))
        for (const TabRef& t : *cls)
            out.add_term({t.shape, t.tab, t.tab}, inv_gamma(t) / M_eigen(t, r));
    return out;
}

Element System::gen_inv_Mp(int r, const std::vector<long>& i) const {
    long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
    int e = U().e();
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(ir + 1, ir1))
        throw ResidueConditionViolated("1/M'_r f_i needs i_r != i_{r+1} - 1");
    Element out(this);
    if (const auto* cls = U().residue_class(i))
        for (const TabRef& t : *cls)
            out.add_term({t.shape, t.tab, t.tab}, inv_gamma(t) / Mp_eigen(t, r));
    return out;
}

Element System::gen_inv_Ldiff(int r, const std::vector<long>& i) const {
    long ir = i[(std::size_t)r - 1], ir1 = i[(std::size_t)r];
    int e = U().e();
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(ir, ir1))
        throw ResidueConditionViolated("1/(L_r - L_{r+1}) f_i needs i_r != i_{r+1}");
    Element out(this);
    if (const auto* cls = U().residue_class(i))
        for (const TabRef& t : *cls)
            out.add_term({t.shape, t.tab, t.tab},
                         inv_gamma(t) / (C(t, r) - C(t, r + 1)));
    return out;
}

Element System::gen_M(int r) const {
    return scalar_element(one()) - gen_L(r) + Scalar::t(mode_) * gen_L(r + 1);
}

Element System::gen_Mp(int r) const {
    return scalar_element(one()) + Scalar::t(mode_) * gen_L(r) - gen_L(r + 1);
}

Element System::scalar_element(const Scalar& c) const { return c * identity(); }

}  // namespace heckelab
