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

#include "combi/universe.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckelab {

int node_degree_weight(const Multipartition& mu, const Node& A,
                       const std::vector<long>& kappa, int e) {
    long i = node_residue(A, kappa, e);
    int addable = 0, removable = 0;
    for (const Node& nd : mu.addable_nodes())
        if (A < nd && node_residue(nd, kappa, e) == i) ++addable;
    for (const Node& nd : mu.removable_nodes())
        if (A < nd && node_residue(nd, kappa, e) == i) ++removable;
    return addable - removable;
}

int tableau_degree(const StdTableau& t, const std::vector<long>& kappa, int e) {
    int deg = 0;
    Multipartition mu = t.shape();
    for (int m = t.size(); m >= 1; --m) {
        const Node& A = t.node_of(m);
        deg += node_degree_weight(mu, A, kappa, e);
        mu = mu.without_node(A);
    }
    return deg;
}

int shape_degree(const Multipartition& lam, const std::vector<long>& kappa, int e) {
    int deg = 0;
    for (const StdTableau& t : std_tableaux(lam)) deg += tableau_degree(t, kappa, e);
    return deg;
}

int shape_degree_p(const Multipartition& lam, const std::vector<long>& kappa, int p) {
    // contents are bounded, so deg_{p^k} stabilises to deg_0 once p^k exceeds
    // the content spread; deg_0(lam) = 0 whenever the charge separates
    long lo = 0, hi = 0;
    for (const Node& nd : lam.nodes()) {
        lo = std::min(lo, node_content(nd, kappa));
        hi = std::max(hi, node_content(nd, kappa));
    }
    long spread = hi - lo + 1;
    int total = 0;
    for (long pk = p; pk <= spread; pk *= p)
        total += shape_degree(lam, kappa, (int)pk);
    return total;
}

int cartan(long i, long j, int e) {
    auto eq = [&](long a, long b) { return e == 0 ? a == b : ((a - b) % e + e) % e == 0; };
    if (eq(i, j)) return 2;
    bool fwd = eq(j, i + 1), bwd = eq(i, j + 1);
    if (fwd && bwd) return -2;  // the e = 2 double edge
    if (fwd || bwd) return -1;
    return 0;
}

std::vector<Node> addable_below(const Multipartition& lam, int r,
                                const std::vector<long>& kappa, int e) {
    StdTableau tlam = initial_tableau(lam);
    const Node& A = tlam.node_of(r);
    long i = node_residue(A, kappa, e);
    Multipartition partial = tlam.restricted_shape(r);
    std::vector<Node> out;
    for (const Node& nd : partial.addable_nodes())
        if (A < nd && node_residue(nd, kappa, e) == i) out.push_back(nd);
    return out;
}

ChargeTools charge_tools(const std::vector<long>& kappa, int n, int e) {
    ChargeTools out;
    // [n]!_t
    auto quantum_laurent = [](long d) {
        if (d == 0) return Laurent<Rat>();
        if (d > 0) {
            std::vector<Rat> c((std::size_t)d, Rat(1));
            return Laurent<Rat>(0, std::move(c));
        }
        std::vector<Rat> c((std::size_t)(-d), Rat(-1));
        return Laurent<Rat>(d, std::move(c));
    };
    Laurent<Rat> prod(Rat(1));
    for (long k = 1; k <= n; ++k) prod *= quantum_laurent(k);
    int ell = (int)kappa.size();
    for (int l = 0; l < ell; ++l)
        for (int m = l + 1; m < ell; ++m)
            for (long d = -(n - 1); d <= n - 1; ++d)
                prod *= quantum_laurent(kappa[(std::size_t)l] - kappa[(std::size_t)m] + d);
    out.separation_product = prod;
    out.charge_ok = true;
    for (int l = 0; l + 1 < ell; ++l)
        if (kappa[(std::size_t)l] - kappa[(std::size_t)l + 1] < n) out.charge_ok = false;
    out.normalized = kappa;
    if (e > 0) {
        for (int l = ell - 2; l >= 0; --l) {
            long gap = out.normalized[(std::size_t)l] - out.normalized[(std::size_t)l + 1];
            if (gap < n) {
                long add = ((n - gap) + e - 1) / e * e;
                out.normalized[(std::size_t)l] += add;
            }
        }
    }
    return out;
}

std::vector<long> strict_charge(const std::vector<long>& kappa, int n) {
    std::vector<long> out = kappa;
    for (int l = (int)out.size() - 2; l >= 0; --l)
        out[(std::size_t)l] =
            std::max(out[(std::size_t)l], out[(std::size_t)l + 1] + n + 1);
    return out;
}

Universe::Universe(int n, int level, std::vector<long> kappa, int e)
    : n_(n), level_(level), e_(e), kappa_(std::move(kappa)) {
    if ((int)kappa_.size() != level_) throw std::domain_error("Universe: charge length != level");
    if (e_ > 0)
        for (int l = 0; l + 1 < level_; ++l)
            if (kappa_[(std::size_t)l] - kappa_[(std::size_t)l + 1] < n_)
                throw std::domain_error("Universe: charge gaps below n (normalize first)");

    shapes_ = enumerate_multipartitions(n_, level_);
    tabs_.resize(shapes_.size());
    gids_.resize(shapes_.size());
    add_below_.resize(shapes_.size());
    for (std::size_t s = 0; s < shapes_.size(); ++s) {
        tabs_[s] = std_tableaux(shapes_[s]);
        gids_[s].resize(tabs_[s].size());
        for (std::size_t t = 0; t < tabs_[s].size(); ++t) {
            gids_[s][t] = (int)flat_.size();
            flat_.push_back({(int)s, (int)t});
        }
        add_below_[s].resize((std::size_t)std::max(n_, 1));
        for (int r = 1; r <= n_; ++r)
            add_below_[s][(std::size_t)r - 1] = addable_below(shapes_[s], r, kappa_, e_);
    }

    contents_.resize(flat_.size());
    residues_.resize(flat_.size());
    degrees_.resize(flat_.size());
    perms_.resize(flat_.size());
    domkeys_.resize(flat_.size());
    tiebreaks_.resize(flat_.size());
    for (std::size_t g = 0; g < flat_.size(); ++g) {
        const StdTableau& t = tab(flat_[g]);
        contents_[g].resize((std::size_t)n_);
        residues_[g].resize((std::size_t)n_);
        for (int k = 1; k <= n_; ++k) {
            contents_[g][(std::size_t)k - 1] = node_content(t.node_of(k), kappa_);
            residues_[g][(std::size_t)k - 1] = node_residue(t.node_of(k), kappa_, e_);
        }
        degrees_[g] = tableau_degree(t, kappa_, e_);
        perms_[g] = permutation_of(t);
        domkeys_[g] = tableau_dominance_key(t);
        for (int k = 1; k <= n_; ++k) {
            const Node& nd = t.node_of(k);
            tiebreaks_[g].push_back(nd.l);
            tiebreaks_[g].push_back(nd.r);
            tiebreaks_[g].push_back(nd.c);
        }
        classes_[residues_[g]].push_back(flat_[g]);
    }

    dom_.assign(flat_.size(), std::vector<bool>(flat_.size(), false));
    for (std::size_t a = 0; a < flat_.size(); ++a)
        for (std::size_t b = 0; b < flat_.size(); ++b)
            dom_[a][b] = dominates(tab(flat_[a]), tab(flat_[b]));
}

int Universe::shape_index(const Multipartition& lam) const {
    for (std::size_t s = 0; s < shapes_.size(); ++s)
        if (shapes_[s] == lam) return (int)s;
    throw std::domain_error("Universe: unknown shape " + lam.str());
}

int Universe::tab_index(int s, const StdTableau& t) const {
    const auto& list = tabs_[(std::size_t)s];
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == t) return (int)i;
    throw std::domain_error("Universe: unknown tableau");
}

std::optional<TabRef> Universe::swapped(TabRef t, int r) const {
    auto v = tab(t).apply_transposition(r);
    if (!v) return std::nullopt;
    return TabRef{t.shape, tab_index(t.shape, *v)};
}

std::optional<std::pair<TabRef, int>> Universe::parent(TabRef t) const {
    int len = perm(t).length();
    if (len == 0) return std::nullopt;
    for (int r = 1; r < n_; ++r) {
        auto v = swapped(t, r);
        if (v && perm(*v).length() == len - 1) return std::make_pair(*v, r);
    }
    throw std::logic_error("Universe::parent: no descent found");
}

const std::vector<TabRef>* Universe::residue_class(const std::vector<long>& i) const {
    auto it = classes_.find(i);
    return it == classes_.end() ? nullptr : &it->second;
}

Universe::DiagonalData Universe::diagonal_data(const std::vector<long>& i, int r) const {
    const auto* cls = residue_class(i);
    if (!cls || cls->empty()) throw std::out_of_range("diagonal_data: empty residue class");
    DiagonalData out;
    long ihat = i[(std::size_t)r - 1];
    if (e_ > 0) ihat = ((ihat % e_) + e_) % e_;
    for (const TabRef& t : *cls) {
        long off = content(t, r) - ihat;
        if (std::find(out.offsets.begin(), out.offsets.end(), off) == out.offsets.end())
            out.offsets.push_back(off);
        std::pair<int, long> diag{component(t, r), content(t, r)};
        if (std::find(out.diagonals.begin(), out.diagonals.end(), diag) == out.diagonals.end())
            out.diagonals.push_back(diag);
    }
    std::sort(out.offsets.begin(), out.offsets.end());
    std::sort(out.diagonals.begin(), out.diagonals.end());
    return out;
}

std::vector<int> Universe::pair_order_key(TabRef u, TabRef v, bool alt) const {
    std::vector<int> key;
    const auto& ku = domkeys_[(std::size_t)gid(u)];
    const auto& kv = domkeys_[(std::size_t)gid(v)];
    key.insert(key.end(), ku.begin(), ku.end());
    key.insert(key.end(), kv.begin(), kv.end());
    const auto& tu = tiebreaks_[(std::size_t)gid(u)];
    const auto& tv = tiebreaks_[(std::size_t)gid(v)];
    for (int x : tu) key.push_back(alt ? -x : x);
    for (int x : tv) key.push_back(alt ? -x : x);
    return key;
}

}  // namespace heckelab
