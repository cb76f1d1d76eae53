#include <algorithm>
#include <bit>
#include <set>

#include "k33cut/graph.hpp"
#include "k33cut/planar.hpp"
#include "k33cut/spqr.hpp"

namespace k33cut {

namespace {

using Mask = std::uint64_t;

struct MinorSearch {
    MinorKind target;
    std::set<std::vector<Mask>> seen;

    static bool contains_target(const std::vector<Mask>& adj, MinorKind h) {
        const int n = static_cast<int>(adj.size());
        if (h == MinorKind::C4) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (std::popcount(adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]) >= 2) return true;
            return false;
        }
        if (h == MinorKind::K33) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const Mask ab = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)];
                    if (std::popcount(ab) < 3) continue;
                    for (int c = b + 1; c < n; ++c)
                        if (std::popcount(ab & adj[static_cast<std::size_t>(c)]) >= 3) return true;
                }
            return false;
        }
        // 5-clique
        for (int a = 0; a < n; ++a) {
            const Mask na = adj[static_cast<std::size_t>(a)] & ~((Mask{2} << a) - 1);
            for (Mask r1 = na; r1; r1 &= r1 - 1) {
                const int b = std::countr_zero(r1);
                const Mask nb = na & adj[static_cast<std::size_t>(b)] & ~((Mask{2} << b) - 1);
                for (Mask r2 = nb; r2; r2 &= r2 - 1) {
                    const int c = std::countr_zero(r2);
                    const Mask nc = nb & adj[static_cast<std::size_t>(c)] & ~((Mask{2} << c) - 1);
                    for (Mask r3 = nc; r3; r3 &= r3 - 1) {
                        const int d = std::countr_zero(r3);
                        if (nc & adj[static_cast<std::size_t>(d)] & ~((Mask{2} << d) - 1)) return true;
                    }
                }
            }
        }
        return false;
    }

    /// Removes low-degree nodes that cannot matter and compacts ids.
    std::vector<Mask> reduce(std::vector<Mask> adj) const {
        bool changed = true;
        while (changed) {
            changed = false;
            const int n = static_cast<int>(adj.size());
            for (int v = 0; v < n && !changed; ++v) {
                const int deg = std::popcount(adj[static_cast<std::size_t>(v)]);
                if (deg <= 1) {
                    adj = remove_node(adj, v);
                    changed = true;
                } else if (target != MinorKind::C4 && deg == 2) {
                    // suppress: contract v into one neighbor
                    const int u = std::countr_zero(adj[static_cast<std::size_t>(v)]);
                    adj = contract(adj, u, v);
                    changed = true;
                }
            }
        }
        return adj;
    }

    static std::vector<Mask> remove_node(const std::vector<Mask>& adj, int v) {
        std::vector<Mask> out;
        const Mask low = (Mask{1} << v) - 1;
        for (int x = 0; x < static_cast<int>(adj.size()); ++x) {
            if (x == v) continue;
            const Mask m = adj[static_cast<std::size_t>(x)];
            out.push_back((m & low) | ((m >> 1) & ~low));
        }
        return out;
    }

    /// Contracts edge uv into u, then drops v.
    static std::vector<Mask> contract(std::vector<Mask> adj, int u, int v) {
        const Mask merged = (adj[static_cast<std::size_t>(u)] | adj[static_cast<std::size_t>(v)]) & ~(Mask{1} << u) & ~(Mask{1} << v);
        adj[static_cast<std::size_t>(u)] = merged;
        for (int x = 0; x < static_cast<int>(adj.size()); ++x) {
            if (x == u || x == v) continue;
            if (merged >> x & 1) adj[static_cast<std::size_t>(x)] |= Mask{1} << u;
        }
        return remove_node(adj, v);
    }

    bool search(std::vector<Mask> adj) {
        adj = reduce(std::move(adj));
        const int n = static_cast<int>(adj.size());
        int m = 0;
        for (Mask a : adj) m += std::popcount(a);
        m /= 2;
        const int hn = target == MinorKind::C4 ? 4 : (target == MinorKind::K5 ? 5 : 6);
        const int hm = target == MinorKind::C4 ? 4 : 9 + (target == MinorKind::K5 ? 1 : 0);
        if (n < hn || m < hm) return false;
        if (contains_target(adj, target)) return true;
        if (!seen.insert(adj).second) return false;
        for (int u = 0; u < n; ++u)
            for (Mask r = adj[static_cast<std::size_t>(u)] & ~((Mask{2} << u) - 1); r; r &= r - 1) {
                const int v = std::countr_zero(r);
                if (search(contract(adj, u, v))) return true;
            }
        return false;
    }
};

}  // namespace

bool has_minor_exhaustive(const Graph& g, MinorKind h) {
    if (g.node_count() > 64) throw GraphError("exhaustive minor search limited to 64 nodes");
    std::vector<Mask> adj(static_cast<std::size_t>(g.node_count()), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    MinorSearch s{h, {}};
    return s.search(std::move(adj));
}

bool has_minor(const Graph& g, MinorKind h) {
    if (h == MinorKind::C4) {
        for (const auto& b : blocks(g).blocks)
            if (b.size() >= 4) return true;
        return false;
    }
    const auto d = k33_decompose(g);
    if (h == MinorKind::K33) return !d.is_k33_minor_free;
    for (std::size_t bi = 0; bi < d.trees.size(); ++bi) {
        if (!d.trees[bi]) continue;
        for (const auto& n : d.trees[bi]->nodes) {
            if (n.kind != SprKind::R) continue;
            if (n.nodes.size() == 5 && n.edges.size() == 10) return true;
            Graph s(static_cast<int>(n.nodes.size()));
            for (const auto& e : n.edges) {
                const auto a = static_cast<NodeId>(std::lower_bound(n.nodes.begin(), n.nodes.end(), e.u) - n.nodes.begin());
                const auto b = static_cast<NodeId>(std::lower_bound(n.nodes.begin(), n.nodes.end(), e.v) - n.nodes.begin());
                s.add_edge(a, b, 0);
            }
            if (planar_embed(s)) continue;
            if (has_minor_exhaustive(s, MinorKind::K5)) return true;
        }
    }
    return false;
}

}  // namespace k33cut
