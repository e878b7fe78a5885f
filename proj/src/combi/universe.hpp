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
#include <vector>

#include "arith/laurent.hpp"
#include "arith/rat.hpp"
#include "combi/tableau.hpp"

namespace heckelab {

/// Integer content of a node: kappa_l + c - r.
inline long node_content(const Node& nd, const std::vector<long>& kappa) {
    return kappa[(std::size_t)nd.l - 1] + nd.c - nd.r;
}

/// Residue of a node; e = 0 means the content itself (I = Z).
inline long node_residue(const Node& nd, const std::vector<long>& kappa, int e) {
    long c = node_content(nd, kappa);
    if (e == 0) return c;
    long r = c % e;
    return r < 0 ? r + e : r;
}

/// d_A(mu): addable minus removable res(A)-nodes of mu strictly below A.
int node_degree_weight(const Multipartition& mu, const Node& A,
                       const std::vector<long>& kappa, int e);

/// Brundan-Kleshchev-Wang degree of a standard tableau.
int tableau_degree(const StdTableau& t, const std::vector<long>& kappa, int e);

/// deg_e(lambda) = sum of tableau degrees over Std(lambda).
int shape_degree(const Multipartition& lam, const std::vector<long>& kappa, int e);

/// Deg_p(lambda) = sum over k >= 1 of deg_{p^k}(lambda) (finitely many terms).
int shape_degree_p(const Multipartition& lam, const std::vector<long>& kappa, int p);

/// Cartan pairing c_{ij} of the quiver Gamma_e.
int cartan(long i, long j, int e);

/// Addable nodes Add_lambda(r): addable res(r)-nodes of Shape(t^lam restricted
/// to r) strictly below the node of r in t^lam.
std::vector<Node> addable_below(const Multipartition& lam, int r,
                                const std::vector<long>& kappa, int e);

struct ChargeTools {
    Laurent<Rat> separation_product;  // [n]!_t prod [kappa_l - kappa_m + d]_t
    bool charge_ok = false;           // kappa_l - kappa_{l+1} >= n throughout
    std::vector<long> normalized;     // e-shifts applied to enforce the gaps
};
ChargeTools charge_tools(const std::vector<long>& kappa, int n, int e);

/// Strictly separated charge for the generic Gram computation
/// (kappa_l - kappa_{l+1} > n, raising entries as needed).
std::vector<long> strict_charge(const std::vector<long>& kappa, int n);

struct TabRef {
    int shape = -1;
    int tab = -1;
    friend bool operator==(const TabRef& a, const TabRef& b) {
        return a.shape == b.shape && a.tab == b.tab;
    }
    friend bool operator<(const TabRef& a, const TabRef& b) {
        return a.shape != b.shape ? a.shape < b.shape : a.tab < b.tab;
    }
};

/// All shapes and standard tableaux for fixed (n, level, kappa, e), with
/// precomputed contents, residues, degrees, permutations and dominance.
/// Immutable once constructed.
class Universe {
   public:
    Universe(int n, int level, std::vector<long> kappa, int e);

    int n() const { return n_; }
    int level() const { return level_; }
    int e() const { return e_; }
    const std::vector<long>& kappa() const { return kappa_; }

    int num_shapes() const { return (int)shapes_.size(); }
    const Multipartition& shape(int s) const { return shapes_[(std::size_t)s]; }
    int shape_index(const Multipartition& lam) const;

    int num_tabs(int s) const { return (int)tabs_[(std::size_t)s].size(); }
    const StdTableau& tab(TabRef t) const { return tabs_[(std::size_t)t.shape][(std::size_t)t.tab]; }
    int tab_index(int s, const StdTableau& t) const;
    int total_tabs() const { return (int)flat_.size(); }
    TabRef flat_tab(int gid) const { return flat_[(std::size_t)gid]; }
    int gid(TabRef t) const { return gids_[(std::size_t)t.shape][(std::size_t)t.tab]; }

    long content(TabRef t, int k) const { return contents_[(std::size_t)gid(t)][(std::size_t)k - 1]; }
    long residue(TabRef t, int k) const { return residues_[(std::size_t)gid(t)][(std::size_t)k - 1]; }
    int component(TabRef t, int k) const { return tab(t).component_of(k); }
    const std::vector<long>& residue_seq(TabRef t) const { return residues_[(std::size_t)gid(t)]; }
    long rho(TabRef t, int r) const { return content(t, r) - content(t, r + 1); }
    int degree(TabRef t) const { return degrees_[(std::size_t)gid(t)]; }
    const TableauPerm& perm(TabRef t) const { return perms_[(std::size_t)gid(t)]; }

    /// The swap t(r, r+1); nullopt if not standard.
    std::optional<TabRef> swapped(TabRef t, int r) const;
    /// Parent in the dominance tree: (v, r) with v = t(r,r+1), l(d(v)) = l(d(t)) - 1.
    std::optional<std::pair<TabRef, int>> parent(TabRef t) const;

    bool tab_dominates(TabRef a, TabRef b) const {
        return dom_[(std::size_t)gid(a)][(std::size_t)gid(b)];
    }
    bool tab_dominates_strictly(TabRef a, TabRef b) const {
        return !(a == b) && tab_dominates(a, b);
    }
    bool same_residue(TabRef a, TabRef b) const {
        return residue_seq(a) == residue_seq(b);
    }
    bool gamma_dominates(TabRef a, TabRef b) const {
        return same_residue(a, b) && tab_dominates(a, b);
    }

    /// Residue classes Std(i); keys are residue sequences.
    const std::map<std::vector<long>, std::vector<TabRef>>& residue_classes() const {
        return classes_;
    }
    const std::vector<TabRef>* residue_class(const std::vector<long>& i) const;

    /// i^lambda = res(t^lambda).
    const std::vector<long>& shape_residue(int s) const { return residue_seq({s, 0}); }

    /// Add_lambda(r) for this universe's charge.
    const std::vector<Node>& addable_below_cached(int s, int r) const {
        return add_below_[(std::size_t)s][(std::size_t)r - 1];
    }

    /// D_r(i) content offsets and the diagonals behind them;
    /// throws std::out_of_range for an empty residue class.
    struct DiagonalData {
        std::vector<long> offsets;                   // {c_r(t) - hat(i_r)}
        std::vector<std::pair<int, long>> diagonals; // {(component, content)}
        int d_r() const { return (int)offsets.size(); }
    };
    DiagonalData diagonal_data(const std::vector<long>& i, int r) const;

    /// Total-order key on pairs for Gaussian elimination; ascending order is
    /// a linear extension of Gamma-dominance (least dominant first).
    /// `alt` switches the tiebreak among incomparable pairs.
    std::vector<int> pair_order_key(TabRef u, TabRef v, bool alt) const;

   private:
    int n_, level_, e_;
    std::vector<long> kappa_;
    std::vector<Multipartition> shapes_;
    std::vector<std::vector<StdTableau>> tabs_;
    std::vector<std::vector<int>> gids_;
    std::vector<TabRef> flat_;
    std::vector<std::vector<long>> contents_;
    std::vector<std::vector<long>> residues_;
    std::vector<int> degrees_;
    std::vector<TableauPerm> perms_;
    std::vector<std::vector<bool>> dom_;
    std::vector<std::vector<int>> domkeys_;
    std::vector<std::vector<int>> tiebreaks_;
    std::map<std::vector<long>, std::vector<TabRef>> classes_;
    std::vector<std::vector<std::vector<Node>>> add_below_;
};

}  // namespace heckelab
