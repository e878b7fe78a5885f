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

#include "combi/multipartition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckelab {

Multipartition::Multipartition(std::vector<std::vector<int>> comps) : comps_(std::move(comps)) {
    for (auto& comp : comps_) {
        while (!comp.empty() && comp.back() == 0) comp.pop_back();
        for (std::size_t i = 0; i + 1 < comp.size(); ++i)
            if (comp[i] < comp[i + 1])
                throw std::domain_error("Multipartition: rows must weakly decrease");
        for (int part : comp) {
            if (part <= 0) throw std::domain_error("Multipartition: parts must be positive");
            n_ += part;
        }
    }
    if (comps_.empty()) comps_.push_back({});
}

std::vector<Node> Multipartition::nodes() const {
    std::vector<Node> out;
    out.reserve((std::size_t)n_);
    for (int l = 1; l <= level(); ++l)
        for (int r = 1; r <= (int)comps_[(std::size_t)l - 1].size(); ++r)
            for (int c = 1; c <= row_length(l, r); ++c) out.push_back({l, r, c});
    return out;
}

std::vector<Node> Multipartition::addable_nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= level(); ++l) {
        int rows = (int)comps_[(std::size_t)l - 1].size();
        for (int r = 1; r <= rows + 1; ++r) {
            int len = row_length(l, r);
            int above = r > 1 ? row_length(l, r - 1) : -1;
            if (r == 1 || len < above) out.push_back({l, r, len + 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Node> Multipartition::removable_nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= level(); ++l) {
        int rows = (int)comps_[(std::size_t)l - 1].size();
        for (int r = 1; r <= rows; ++r) {
            int len = row_length(l, r);
            int below = row_length(l, r + 1);
            if (len > below) out.push_back({l, r, len});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Multipartition Multipartition::with_node(const Node& nd) const {
    auto comps = comps_;
    auto& comp = comps[(std::size_t)nd.l - 1];
    if (nd.r == (int)comp.size() + 1)
        comp.push_back(1);
    else
        comp[(std::size_t)nd.r - 1] += 1;
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::without_node(const Node& nd) const {
    auto comps = comps_;
    comps[(std::size_t)nd.l - 1][(std::size_t)nd.r - 1] -= 1;
    return Multipartition(std::move(comps));
}

std::vector<int> Multipartition::dominance_key(int pad_rows) const {
    std::vector<int> key;
    key.reserve((std::size_t)(level() * pad_rows));
    int before = 0;
    for (int l = 1; l <= level(); ++l) {
        int acc = 0;
        for (int r = 1; r <= pad_rows; ++r) {
            acc += row_length(l, r);
            key.push_back(before + acc);
        }
        before += acc;
    }
    return key;
}

bool dominates(const Multipartition& lam, const Multipartition& mu) {
    if (lam.size() != mu.size() || lam.level() != mu.level()) return false;
    int rows = std::max(lam.size(), 1);
    auto a = lam.dominance_key(rows), b = mu.dominance_key(rows);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

std::string Multipartition::str() const {
    std::ostringstream os;
    for (int l = 1; l <= level(); ++l) {
        if (l > 1) os << "|";
        const auto& comp = comps_[(std::size_t)l - 1];
        if (comp.empty()) {
            os << "-";
            continue;
        }
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) os << ",";
            os << comp[i];
        }
    }
    return os.str();
}

Multipartition Multipartition::parse(const std::string& text, int level) {
    std::vector<std::vector<int>> comps;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::vector<int> comp;
        if (part != "-" && !part.empty()) {
            std::stringstream ps(part);
            std::string tok;
            while (std::getline(ps, tok, ',')) comp.push_back(std::stoi(tok));
        }
        comps.push_back(std::move(comp));
    }
    while ((int)comps.size() < level) comps.push_back({});
    return Multipartition(std::move(comps));
}

namespace {

void partitions_of(int n, int maxpart, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int n, int level) {
    if (n < 0 || level < 1) throw std::domain_error("enumerate_multipartitions: bad arguments");
    std::vector<std::vector<std::vector<int>>> parts((std::size_t)n + 1);
    for (int m = 0; m <= n; ++m) {
        std::vector<int> cur;
        partitions_of(m, m == 0 ? 1 : m, cur, parts[(std::size_t)m]);
        if (m == 0) parts[0] = {{}};
    }
    std::vector<Multipartition> out;
    std::vector<std::vector<int>> stack;
    // distribute sizes over components, all combinations
    std::vector<int> sizes((std::size_t)level, 0);
    std::vector<std::vector<int>> chosen((std::size_t)level);
    auto rec = [&](auto&& self, int comp, int left) -> void {
        if (comp == level) {
            if (left == 0) {
                out.emplace_back(chosen);
            }
            return;
        }
        for (int m = left; m >= 0; --m) {
            for (const auto& p : parts[(std::size_t)m]) {
                chosen[(std::size_t)comp] = p;
                self(self, comp + 1, left - m);
            }
        }
        chosen[(std::size_t)comp] = {};
    };
    rec(rec, 0, n);
    int rows = std::max(n, 1);
    std::stable_sort(out.begin(), out.end(),
                     [rows](const Multipartition& a, const Multipartition& b) {
                         return a.dominance_key(rows) > b.dominance_key(rows);
                     });
    return out;
}

}  // namespace heckelab
