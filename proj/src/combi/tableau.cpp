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

#include "combi/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckelab {

StdTableau::StdTableau(Multipartition shape, std::vector<Node> node_of_entry)
    : shape_(std::move(shape)), nodes_(std::move(node_of_entry)) {
    if ((int)nodes_.size() != shape_.size())
        throw std::domain_error("StdTableau: wrong number of entries");
}

int StdTableau::entry_at(const Node& nd) const {
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k] == nd) return (int)k + 1;
    return 0;
}

Multipartition StdTableau::restricted_shape(int m) const {
    std::vector<std::vector<int>> comps((std::size_t)shape_.level());
    for (int k = 1; k <= m; ++k) {
        const Node& nd = node_of(k);
        auto& comp = comps[(std::size_t)nd.l - 1];
        if ((int)comp.size() < nd.r) comp.resize((std::size_t)nd.r, 0);
        comp[(std::size_t)nd.r - 1] += 1;
    }
    return Multipartition(std::move(comps));
}

std::optional<StdTableau> StdTableau::apply_transposition(int r) const {
    if (r < 1 || r >= size()) return std::nullopt;
    const Node& a = node_of(r);
    const Node& b = node_of(r + 1);
    // swapping is standard iff r and r+1 lie in different rows and columns
    if (a.l == b.l && (a.r == b.r || a.c == b.c)) return std::nullopt;
    auto nodes = nodes_;
    std::swap(nodes[(std::size_t)r - 1], nodes[(std::size_t)r]);
    return StdTableau(shape_, std::move(nodes));
}

std::string StdTableau::str() const {
    std::ostringstream os;
    for (int l = 1; l <= shape_.level(); ++l) {
        if (l > 1) os << "|";
        os << "[";
        const auto& comp = shape_.components()[(std::size_t)l - 1];
        for (std::size_t row = 0; row < comp.size(); ++row) {
            if (row) os << ",";
            os << "[";
            for (int c = 1; c <= comp[row]; ++c) {
                if (c > 1) os << ",";
                os << entry_at({l, (int)row + 1, c});
            }
            os << "]";
        }
        os << "]";
    }
    return os.str();
}

StdTableau initial_tableau(const Multipartition& lam) {
    std::vector<Node> nodes;
    nodes.reserve((std::size_t)lam.size());
    for (const Node& nd : lam.nodes()) nodes.push_back(nd);
    return StdTableau(lam, std::move(nodes));
}

StdTableau final_tableau(const Multipartition& lam) {
    std::vector<Node> nodes((std::size_t)lam.size());
    int k = 0;
    for (int l = lam.level(); l >= 1; --l) {
        const auto& comp = lam.components()[(std::size_t)l - 1];
        int cols = comp.empty() ? 0 : comp[0];
        for (int c = 1; c <= cols; ++c)
            for (int r = 1; r <= (int)comp.size() && comp[(std::size_t)r - 1] >= c; ++r)
                nodes[(std::size_t)k++] = {l, r, c};
    }
    return StdTableau(lam, std::move(nodes));
}

std::vector<int> tableau_dominance_key(const StdTableau& t) {
    std::vector<int> key;
    int rows = std::max(t.size(), 1);
    for (int m = 1; m <= t.size(); ++m) {
        auto sub = t.restricted_shape(m).dominance_key(rows);
        key.insert(key.end(), sub.begin(), sub.end());
    }
    return key;
}

bool dominates(const StdTableau& s, const StdTableau& t) {
    if (s.size() != t.size()) return false;
    for (int m = 1; m <= s.size(); ++m)
        if (!dominates(s.restricted_shape(m), t.restricted_shape(m))) return false;
    return true;
}

std::vector<StdTableau> std_tableaux(const Multipartition& lam) {
    // peel the largest entry off every removable node, recursively
    std::vector<StdTableau> out;
    std::vector<Node> nodes((std::size_t)lam.size());
    auto rec = [&](auto&& self, const Multipartition& mu, int m) -> void {
        if (m == 0) {
            out.emplace_back(lam, nodes);
            return;
        }
        for (const Node& nd : mu.removable_nodes()) {
            nodes[(std::size_t)m - 1] = nd;
            self(self, mu.without_node(nd), m - 1);
        }
    };
    rec(rec, lam, lam.size());
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        keyed.push_back({tableau_dominance_key(out[i]), i});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<StdTableau> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, i] : keyed) sorted.push_back(std::move(out[i]));
    return sorted;
}

TableauPerm permutation_of(const StdTableau& t) {
    StdTableau tlam = initial_tableau(t.shape());
    int n = t.size();
    TableauPerm out;
    // d(t) maps the entry of t at a node to the entry of t^lambda there, so
    // that d(t s_r) = d(t) s_r and reduced-word prefixes of d(t) trace a
    // standard chain from t^lambda to t
    out.one_line.assign((std::size_t)n, 0);
    for (const Node& nd : t.shape().nodes())
        out.one_line[(std::size_t)t.entry_at(nd) - 1] = tlam.entry_at(nd);
    // canonical word: repeatedly strip the smallest left descent
    std::vector<int> w = out.one_line;
    auto pos_of = [&](int v) {
        for (int i = 0; i < n; ++i)
            if (w[(std::size_t)i] == v) return i;
        return -1;
    };
    while (true) {
        int r = 0;
        for (int cand = 1; cand < n; ++cand) {
            if (pos_of(cand) > pos_of(cand + 1)) {  // l(s_cand w) < l(w)
                r = cand;
                break;
            }
        }
        if (r == 0) break;
        out.word.push_back(r);
        int pr = pos_of(r), pr1 = pos_of(r + 1);
        std::swap(w[(std::size_t)pr], w[(std::size_t)pr1]);
    }
    return out;
}

bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w) {
    int n = (int)u.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cw = 0;
            for (int k = 0; k < i; ++k) {
                if (u[(std::size_t)k] >= j) ++cu;
                if (w[(std::size_t)k] >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

}  // namespace heckelab
