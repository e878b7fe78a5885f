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
#include <tuple>
#include <vector>

namespace heckelab {

/// A box (l, r, c) of a multipartition diagram, 1-based. The lexicographic
/// order on (l, r, c) is the "below" order on nodes.
struct Node {
    int l = 1, r = 1, c = 1;
    friend bool operator==(const Node& a, const Node& b) {
        return a.l == b.l && a.r == b.r && a.c == b.c;
    }
    friend bool operator<(const Node& a, const Node& b) {
        return std::tie(a.l, a.r, a.c) < std::tie(b.l, b.r, b.c);
    }
    bool below(const Node& o) const { return o < *this; }  // strictly below o
    std::string str() const {
        return "(" + std::to_string(l) + "," + std::to_string(r) + "," + std::to_string(c) + ")";
    }
};

/// An ell-tuple of partitions of total size n.
class Multipartition {
   public:
    Multipartition() = default;
    Multipartition(std::vector<std::vector<int>> comps);

    int level() const { return (int)comps_.size(); }
    int size() const { return n_; }
    const std::vector<std::vector<int>>& components() const { return comps_; }
    int row_length(int l, int r) const {  // 1-based; 0 when off the end
        const auto& c = comps_[(std::size_t)l - 1];
        return r <= (int)c.size() ? c[(std::size_t)r - 1] : 0;
    }

    bool contains(const Node& nd) const {
        return nd.l >= 1 && nd.l <= level() && nd.r >= 1 && nd.c >= 1 &&
               nd.c <= row_length(nd.l, nd.r);
    }

    std::vector<Node> nodes() const;           // row-reading order per component
    std::vector<Node> addable_nodes() const;   // in "below" order
    std::vector<Node> removable_nodes() const;

    Multipartition with_node(const Node& nd) const;
    Multipartition without_node(const Node& nd) const;

    /// Flattened partial-sum vector; componentwise >= refines dominance.
    std::vector<int> dominance_key(int pad_rows) const;

    friend bool operator==(const Multipartition& a, const Multipartition& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const Multipartition& a, const Multipartition& b) { return !(a == b); }

    /// Text format "3,1,1|2,1|3,2"; an empty component prints as "-".
    std::string str() const;
    static Multipartition parse(const std::string& text, int level = 0);

   private:
    std::vector<std::vector<int>> comps_;
    int n_ = 0;
};

/// lambda dominates mu (both of the same size and level).
bool dominates(const Multipartition& lam, const Multipartition& mu);

/// All ell-multipartitions of n in a fixed total order refining dominance,
/// most dominant first.
std::vector<Multipartition> enumerate_multipartitions(int n, int level);

}  // namespace heckelab
