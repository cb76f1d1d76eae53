// Independent brute-force references used by the test suites.
#ifndef K33CUT_TESTS_ORACLES_HPP
#define K33CUT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "k33cut/graph.hpp"

namespace oracle {

using k33cut::Graph;
using k33cut::Weight;
using Vec = std::vector<std::uint8_t>;

/// Every indicator vector obtained from any side mask, deduplicated.
inline std::set<Vec> cut_vectors(const Graph& g) {
    std::set<Vec> out;
    const int n = g.node_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        Vec x;
        for (const auto& e : g.edges()) x.push_back(((mask >> e.u) ^ (mask >> e.v)) & 1U);
        out.insert(x);
    }
    return out;
}

inline Weight max_cut(const Graph& g) {
    Weight best = std::numeric_limits<Weight>::min();
    for (std::uint32_t mask = 0; mask < (1U << g.node_count()); ++mask) {
        Weight s = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) ^ (mask >> e.v)) & 1U) s += e.w;
        best = std::max(best, s);
    }
    return best;
}

/// Minimum perfect matching on a dense symmetric matrix by recursion.
inline Weight min_perfect_matching(const std::vector<std::vector<Weight>>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    Weight best = std::numeric_limits<Weight>::max();
    auto rec = [&](auto&& self, Weight acc) -> void {
        int i = 0;
        while (i < n && used[static_cast<std::size_t>(i)]) ++i;
        if (i == n) {
            best = std::min(best, acc);
            return;
        }
        used[static_cast<std::size_t>(i)] = 1;
        for (int j = i + 1; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            self(self, acc + w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            used[static_cast<std::size_t>(j)] = 0;
        }
        used[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0);
    return best;
}

struct Arc {
    int a, b;
    Weight w;
};

/// Minimum over all edge subsets whose odd-degree set equals `t`; max() if none.
inline Weight min_t_join(int n, const std::vector<Arc>& edges, const std::vector<int>& t) {
    std::vector<std::uint8_t> want(static_cast<std::size_t>(n), 0);
    for (int v : t) want[static_cast<std::size_t>(v)] ^= 1;
    Weight best = std::numeric_limits<Weight>::max();
    for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
        std::vector<std::uint8_t> deg(static_cast<std::size_t>(n), 0);
        Weight s = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1U) {
                deg[static_cast<std::size_t>(edges[i].a)] ^= 1;
                deg[static_cast<std::size_t>(edges[i].b)] ^= 1;
                s += edges[i].w;
            }
        if (deg == want) best = std::min(best, s);
    }
    return best;
}

/// Rank by fraction-free elimination over int64 (small entries only).
inline int rank(std::vector<std::vector<std::int64_t>> m) {
    int r = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(m.size()) && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == static_cast<int>(m.size())) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
        const auto& piv = m[static_cast<std::size_t>(r)];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < m.size(); ++i) {
            const std::int64_t f = m[i][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            const std::int64_t pv = piv[static_cast<std::size_t>(c)];
            std::int64_t g = 0;
            for (std::size_t k = 0; k < m[i].size(); ++k) {
                m[i][k] = m[i][k] * pv - piv[k] * f;
                g = std::gcd(g, m[i][k]);
            }
            if (g > 1)
                for (auto& x : m[i]) x /= g;
        }
        ++r;
    }
    return r;
}

/// Facet test straight from the definition: valid, and tight points span a hyperplane.
inline bool is_facet(const Graph& g, const std::vector<std::int64_t>& a, std::int64_t b) {
    std::vector<Vec> tight;
    for (const auto& x : cut_vectors(g)) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += a[k] * x[k];
        if (s > b) return false;
        if (s == b) tight.push_back(x);
    }
    if (tight.empty()) return false;
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 1; i < tight.size(); ++i) {
        std::vector<std::int64_t> r;
        for (std::size_t k = 0; k < tight[i].size(); ++k) r.push_back(tight[i][k] - tight[0][k]);
        rows.push_back(r);
    }
    return rank(rows) == g.edge_count() - 1;
}

/// Adjacency bitmask of g under a node permutation.
inline std::uint32_t code(const Graph& g, const std::vector<int>& perm) {
    std::uint32_t c = 0;
    const int n = g.node_count();
    for (const auto& e : g.edges()) {
        int a = perm[static_cast<std::size_t>(e.u)], b = perm[static_cast<std::size_t>(e.v)];
        if (a > b) std::swap(a, b);
        int idx = 0;
        for (int i = 0; i < a; ++i) idx += n - 1 - i;
        idx += b - a - 1;
        c |= 1U << idx;
    }
    return c;
}

inline bool connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges()) {
            int o = -1;
            if (e.u == v) o = e.v;
            if (e.v == v) o = e.u;
            if (o >= 0 && !seen[static_cast<std::size_t>(o)]) {
                seen[static_cast<std::size_t>(o)] = 1;
                ++count;
                stack.push_back(o);
            }
        }
    }
    return count == g.node_count();
}

/// All connected graphs on exactly n nodes (n <= 6), one per isomorphism class.
inline std::vector<Graph> connected_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        if (g.edge_count() == 0 || !connected(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t canon = std::numeric_limits<std::uint32_t>::max();
        do canon = std::min(canon, code(g, perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second) out.push_back(g);
    }
    return out;
}

}  // namespace oracle

#endif  // K33CUT_TESTS_ORACLES_HPP
