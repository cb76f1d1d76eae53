#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "k33cut/tjoin.hpp"

namespace k33cut {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

struct Adj {
    int to;
    int edge;
};

std::vector<std::vector<Adj>> adjacency(const TJoinInstance& inst) {
    std::vector<std::vector<Adj>> adj(static_cast<std::size_t>(inst.node_count));
    for (int i = 0; i < static_cast<int>(inst.edges.size()); ++i) {
        const auto& e = inst.edges[static_cast<std::size_t>(i)];
        if (e.a == e.b) continue;
        adj[static_cast<std::size_t>(e.a)].push_back({e.b, i});
        adj[static_cast<std::size_t>(e.b)].push_back({e.a, i});
    }
    return adj;
}

std::vector<Weight> dijkstra(const TJoinInstance& inst, const std::vector<std::vector<Adj>>& adj, int src) {
    std::vector<Weight> dist(static_cast<std::size_t>(inst.node_count), kInf);
    using Item = std::pair<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(src)] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        const auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[static_cast<std::size_t>(x)]) continue;
        for (const auto& a : adj[static_cast<std::size_t>(x)]) {
            const Weight nd = d + inst.edges[static_cast<std::size_t>(a.edge)].w;
            if (nd < dist[static_cast<std::size_t>(a.to)]) {
                dist[static_cast<std::size_t>(a.to)] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    return dist;
}

/// Lexicographically smallest simple s-t path among shortest ones, given distances to t.
std::vector<int> trace(const TJoinInstance& inst, const std::vector<std::vector<Adj>>& adj,
                       const std::vector<Weight>& to_t, int s, int t) {
    const auto n = static_cast<std::size_t>(inst.node_count);
    std::vector<char> on_path(n, 0);
    std::vector<int> path_edges;
    auto tight = [&](int x, const Adj& a) {
        return to_t[static_cast<std::size_t>(x)] == inst.edges[static_cast<std::size_t>(a.edge)].w + to_t[static_cast<std::size_t>(a.to)];
    };
    // t reachable from y through tight edges avoiding the current path
    auto reaches = [&](int y) {
        if (y == t) return true;
        std::vector<char> seen(on_path);
        std::vector<int> stack{y};
        seen[static_cast<std::size_t>(y)] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const auto& a : adj[static_cast<std::size_t>(x)]) {
                if (!tight(x, a) || seen[static_cast<std::size_t>(a.to)]) continue;
                if (a.to == t) return true;
                seen[static_cast<std::size_t>(a.to)] = 1;
                stack.push_back(a.to);
            }
        }
        return false;
    };
    int x = s;
    on_path[static_cast<std::size_t>(s)] = 1;
    while (x != t) {
        int best_node = -1, best_edge = -1;
        for (const auto& a : adj[static_cast<std::size_t>(x)]) {
            if (on_path[static_cast<std::size_t>(a.to)] || !tight(x, a)) continue;
            if (best_node != -1 && (a.to > best_node || (a.to == best_node && a.edge > best_edge))) continue;
            if (a.to != best_node && !reaches(a.to)) continue;
            best_node = a.to;
            best_edge = a.edge;
        }
        if (best_node < 0) throw std::logic_error("shortest path trace failed");
        path_edges.push_back(best_edge);
        on_path[static_cast<std::size_t>(best_node)] = 1;
        x = best_node;
    }
    return path_edges;
}

}  // namespace

std::vector<int> shortest_path(const TJoinInstance& inst, int s, int t, Weight* length) {
    for (const auto& e : inst.edges)
        if (e.w < 0) throw std::invalid_argument("shortest_path needs nonnegative weights");
    const auto adj = adjacency(inst);
    const auto to_t = dijkstra(inst, adj, t);
    if (to_t[static_cast<std::size_t>(s)] >= kInf) throw std::invalid_argument("no path between the given nodes");
    if (length) *length = to_t[static_cast<std::size_t>(s)];
    return trace(inst, adj, to_t, s, t);
}

TJoinResult min_weight_t_join(const TJoinInstance& inst) {
    const auto n = static_cast<std::size_t>(inst.node_count);
    std::vector<char> odd(n, 0);
    for (int v : inst.terminals) {
        if (v < 0 || v >= inst.node_count) throw std::invalid_argument("terminal out of range");
        odd[static_cast<std::size_t>(v)] ^= 1;
    }
    if (inst.terminals.size() % 2 != 0) throw std::invalid_argument("T-join needs an even terminal set");
    {
        const auto adj = adjacency(inst);
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        if (n > 0) {
            stack.push_back(0);
            seen[0] = 1;
        }
        std::size_t count = n > 0 ? 1 : 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const auto& a : adj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    ++count;
                    stack.push_back(a.to);
                }
        }
        if (count != n) throw std::invalid_argument("T-join needs a connected graph");
    }

    // flip negative edges: solve for T xor odd(N) with |w|
    TJoinInstance pos = inst;
    std::vector<char> in_join(inst.edges.size(), 0);
    for (std::size_t i = 0; i < pos.edges.size(); ++i) {
        auto& e = pos.edges[i];
        if (e.w < 0) {
            e.w = -e.w;
            in_join[i] = 1;
            if (e.a != e.b) {
                odd[static_cast<std::size_t>(e.a)] ^= 1;
                odd[static_cast<std::size_t>(e.b)] ^= 1;
            }
        }
    }
    std::vector<int> terms;
    for (int v = 0; v < inst.node_count; ++v)
        if (odd[static_cast<std::size_t>(v)]) terms.push_back(v);

    if (!terms.empty()) {
        const auto adj = adjacency(pos);
        std::vector<std::vector<Weight>> dist;
        for (int t : terms) dist.push_back(dijkstra(pos, adj, t));
        MatchingInstance mi(static_cast<int>(terms.size()));
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j)
                mi.set(static_cast<int>(i), static_cast<int>(j), dist[j][static_cast<std::size_t>(terms[i])]);
        const auto m = min_weight_perfect_matching(mi);
        for (const auto& [i, j] : m.pairs) {
            const auto path = trace(pos, adj, dist[static_cast<std::size_t>(j)], terms[static_cast<std::size_t>(i)],
                                    terms[static_cast<std::size_t>(j)]);
            for (int e : path) in_join[static_cast<std::size_t>(e)] ^= 1;
        }
    }
    TJoinResult res;
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        if (in_join[i]) {
            res.edges.push_back(static_cast<int>(i));
            res.total += inst.edges[i].w;
        }
    return res;
}

}  // namespace k33cut
