#include "k33cut/classify.hpp"

#include <algorithm>
#include <numeric>

namespace k33cut {

bool is_c4_minor_free(const Graph& g) {
    const auto bd = blocks(g);
    return std::all_of(bd.blocks.begin(), bd.blocks.end(), [](const auto& b) { return b.size() <= 3; });
}

char case_label(ProofCase c) { return c == ProofCase::TriangleFree ? 'a' : 'b'; }

std::vector<NamedSmallGraph> simplicial_graphs() {
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    return {
        {"K2", named::complete(2)},
        {"K2 disjoint K2", two_k2},
        {"K2 1-sum K2", named::path(3)},
        {"K3", named::complete(3)},
        {"K4", named::complete(4)},
        {"C4", named::cycle(4)},
    };
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    if (a.node_count() > 8) throw GraphError("isomorphism check limited to 8 nodes");
    std::vector<int> da, db;
    for (NodeId v = 0; v < a.node_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<NodeId> perm(static_cast<std::size_t>(a.node_count()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

std::vector<EdgeIndex> first_cycle_through(const Graph& g, const std::vector<std::vector<NodeId>>& cycles, EdgeIndex e,
                                           std::size_t skip) {
    for (const auto& c : cycles) {
        auto edges = cycle_edges(g, c);
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) continue;
        if (skip-- == 0) return edges;
    }
    return {};
}

LinearInequality rooted_cycle(const Graph& g, const std::vector<EdgeIndex>& cycle, EdgeIndex e) {
    return cycle_inequality(g, cycle, {e});
}

/// Witness inside a 2-connected block b (not K3), lifted through emap to dimension m.
std::vector<LinearInequality> origin_witness(const Graph& b, const std::vector<EdgeIndex>& emap, int m) {
    const auto cycles = chordless_cycles(b);
    std::vector<LinearInequality> local;
    for (EdgeIndex e = 0; e < b.edge_count(); ++e) local.push_back(rooted_cycle(b, first_cycle_through(b, cycles, e, 0), e));
    if (cycles.size() == 1) {
        std::vector<Coeff> c(static_cast<std::size_t>(b.edge_count()), 0);
        c[0] = -1;
        local.push_back(LinearInequality::make(std::move(c), 0));
    } else {
        for (EdgeIndex e = 0; e < b.edge_count(); ++e) {
            const auto second = first_cycle_through(b, cycles, e, 1);
            if (second.empty()) continue;
            local.push_back(rooted_cycle(b, second, e));
            break;
        }
    }
    std::vector<LinearInequality> out;
    for (const auto& q : local) {
        std::vector<Coeff> c(static_cast<std::size_t>(m), 0);
        for (std::size_t k = 0; k < emap.size(); ++k) c[static_cast<std::size_t>(emap[k])] = q.coeffs[k];
        out.push_back(LinearInequality::make(std::move(c), q.rhs));
    }
    return out;
}

}  // namespace

ClassificationReport classify(const Graph& input) {
    if (input.edge_count() == 0) throw GraphError("graph has no edges");
    ClassificationReport r;
    std::vector<NodeId> kept;
    const Graph g = drop_isolated_nodes(input, &kept);
    if (g.node_count() != input.node_count())
        r.warnings.push_back("dropped " + std::to_string(input.node_count() - g.node_count()) + " isolated node(s)");

    const auto bd = blocks(g);
    r.simple = true;
    for (const auto& b : bd.blocks) {
        if (b.size() <= 3) continue;
        r.simple = false;
        std::vector<EdgeIndex> emap;
        const Graph local = g.induced(b, &emap);
        r.origin_witness = origin_witness(local, emap, g.edge_count());
        std::vector<NodeId> orig;
        for (NodeId v : b) orig.push_back(kept[static_cast<std::size_t>(v)]);
        r.c4_block = std::move(orig);
        break;
    }
    r.simple_reason = r.simple ? "every block is an edge or a triangle"
                               : "block on " + std::to_string(r.c4_block->size()) + " nodes has a C4 minor";

    if (g.node_count() <= 4)
        for (auto& [name, h] : simplicial_graphs())
            if (isomorphic_small(g, h)) {
                r.matched = name;
                break;
            }
    r.simplicial = r.matched.has_value();
    const bool connected = is_connected(g);
    if (!r.simplicial && connected)
        r.proof_case = triangles(g).empty() ? ProofCase::TriangleFree : ProofCase::Triangle;

    if (r.matched) {
        r.simplicial_reason = "isomorphic to " + *r.matched;
    } else if (!connected) {
        r.simplicial_reason = "disjoint union other than two copies of K2";
    } else {
        r.simplicial_reason = std::string("case (") + case_label(*r.proof_case) + "): " +
                              (*r.proof_case == ProofCase::TriangleFree ? "edge facet x_e >= 0" : "triangle facet")
                              + " has more vertices than the dimension";
    }
    return r;
}

BruteClassification brute_classify(const Graph& g, HullLimits limits) {
    if (g.edge_count() == 0) throw GraphError("graph has no edges");
    const auto cuts = enumerate_cuts(g);
    const auto hull = brute_hull(cuts, g.edge_count(), limits);
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    BruteClassification out{true, true};
    std::vector<std::size_t> per_vertex(cuts.size(), 0);
    for (const auto& inc : hull.incidence) {
        if (inc.size() != m) out.simplicial = false;
        for (int v : inc) ++per_vertex[static_cast<std::size_t>(v)];
    }
    for (auto c : per_vertex)
        if (c != m) out.simple = false;
    return out;
}

}  // namespace k33cut
