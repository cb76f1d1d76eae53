// Recognizer for supports of facets: a single edge, or a graph reachable from a
// triangle or K5 by subdividing edges and replacing edges with K5 minus an edge.
#ifndef K33CUT_TESTS_SUPPORT_HPP
#define K33CUT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "k33cut/graph.hpp"

namespace support_detail {

using EdgeSet = std::set<std::pair<int, int>>;

inline std::pair<int, int> key(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

inline std::map<int, std::set<int>> adjacency(const EdgeSet& s) {
    std::map<int, std::set<int>> adj;
    for (auto [a, b] : s) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

inline bool connected(const std::map<int, std::set<int>>& adj) {
    if (adj.empty()) return true;
    std::set<int> seen{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj.at(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == adj.size();
}

inline bool reducible(const EdgeSet& s, std::map<EdgeSet, bool>& memo) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const auto adj = adjacency(s);
    bool ok = false;
    if (s.size() == 1) {
        ok = true;
    } else if (connected(adj)) {
        const bool all_two = std::all_of(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() == 2; });
        const bool k5 = adj.size() == 5 && s.size() == 10;
        if ((all_two && adj.size() >= 3) || k5) ok = true;
        for (const auto& [v, nb] : adj) {
            if (ok) break;
            if (nb.size() != 2) continue;
            const int a = *nb.begin(), b = *nb.rbegin();
            if (s.count(key(a, b))) continue;
            EdgeSet t = s;
            t.erase(key(v, a));
            t.erase(key(v, b));
            t.insert(key(a, b));
            ok = reducible(t, memo);
        }
        std::vector<int> nodes;
        for (const auto& kv : adj) nodes.push_back(kv.first);
        for (std::size_t i = 0; i < nodes.size() && !ok; ++i)
            for (std::size_t j = i + 1; j < nodes.size() && !ok; ++j) {
                const int a = nodes[i], b = nodes[j];
                if (s.count(key(a, b))) continue;
                std::vector<int> rest;
                for (int v : nodes)
                    if (v != a && v != b && adj.at(v).size() == 4) rest.push_back(v);
                for (std::size_t x = 0; x < rest.size() && !ok; ++x)
                    for (std::size_t y = x + 1; y < rest.size() && !ok; ++y)
                        for (std::size_t z = y + 1; z < rest.size() && !ok; ++z) {
                            const std::set<int> part{rest[x], rest[y], rest[z], a, b};
                            bool closed = true;
                            for (int c : {rest[x], rest[y], rest[z]})
                                for (int w : adj.at(c)) closed = closed && part.count(w);
                            if (!closed) continue;
                            EdgeSet t = s;
                            for (int c : {rest[x], rest[y], rest[z]})
                                for (int w : adj.at(c)) t.erase(key(c, w));
                            t.insert(key(a, b));
                            ok = reducible(t, memo);
                        }
            }
    }
    memo[s] = ok;
    return ok;
}

}  // namespace support_detail

inline bool support_shape_ok(const k33cut::Graph& g) {
    support_detail::EdgeSet s;
    for (const auto& e : g.edges()) s.insert(support_detail::key(e.u, e.v));
    std::map<support_detail::EdgeSet, bool> memo;
    return !s.empty() && support_detail::reducible(s, memo);
}

#endif  // K33CUT_TESTS_SUPPORT_HPP
