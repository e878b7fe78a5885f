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

#include <optional>
#include <string>
#include <vector>

#include "combi/multipartition.hpp"

namespace heckelab {

/// A standard tableau: bijective increasing filling of a multipartition
/// diagram by 1..n, stored as the node of each entry.
class StdTableau {
   public:
    StdTableau() = default;
    StdTableau(Multipartition shape, std::vector<Node> node_of_entry);

    const Multipartition& shape() const { return shape_; }
    int size() const { return (int)nodes_.size(); }
    const Node& node_of(int k) const { return nodes_[(std::size_t)k - 1]; }
    int component_of(int k) const { return node_of(k).l; }
    int entry_at(const Node& nd) const;  // 0 when vacant

    /// Shape of the subtableau containing 1..m.
    Multipartition restricted_shape(int m) const;

    /// Swap entries r and r+1; nullopt when the result is not standard.
    std::optional<StdTableau> apply_transposition(int r) const;

    friend bool operator==(const StdTableau& a, const StdTableau& b) {
        return a.nodes_ == b.nodes_ && a.shape_ == b.shape_;
    }
    friend bool operator!=(const StdTableau& a, const StdTableau& b) { return !(a == b); }

    /// Row lists per component, e.g. "[[1,2],[3]]|[[4]]".
    std::string str() const;

   private:
    Multipartition shape_;
    std::vector<Node> nodes_;
};

/// All standard lambda-tableaux in a fixed total order refining dominance:
/// t^lambda first, t_lambda last.
std::vector<StdTableau> std_tableaux(const Multipartition& lam);

StdTableau initial_tableau(const Multipartition& lam);  // t^lambda
StdTableau final_tableau(const Multipartition& lam);    // t_lambda

/// s dominates t (tableaux of the same size, any shapes).
bool dominates(const StdTableau& s, const StdTableau& t);

/// Flattened dominance key; componentwise >= refines tableau dominance.
std::vector<int> tableau_dominance_key(const StdTableau& t);

/// The permutation d(t) with t = t^lambda d(t), in one-line notation
/// (w[a-1] = image of a), together with its canonical reduced word:
/// repeatedly extract the smallest r with l(s_r w) < l(w) from the left.
struct TableauPerm {
    std::vector<int> one_line;
    std::vector<int> word;  // reduced, length = inversion count
    int length() const { return (int)word.size(); }
};
TableauPerm permutation_of(const StdTableau& t);

/// Ehresmann criterion for the Bruhat order on S_n.
bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w);

}  // namespace heckelab
