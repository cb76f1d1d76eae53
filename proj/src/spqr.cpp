#include "k33cut/spqr.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <sstream>

#include "k33cut/planar.hpp"

namespace k33cut {

char kind_letter(SprKind k) {
    switch (k) {
        case SprKind::S: return 'S';
        case SprKind::P: return 'P';
        case SprKind::R: return 'R';
    }
    return '?';
}

const char* class_name(ComponentClass c) {
    switch (c) {
        case ComponentClass::PlanarTriangulation: return "PlanarTriangulation";
        case ComponentClass::Planar: return "Planar";
        case ComponentClass::K5: return "K5";
        case ComponentClass::Cycle: return "Cycle";
        case ComponentClass::NonPlanar: return "NonPlanar";
    }
    return "?";
}

namespace {

using Comp = std::vector<SkeletonEdge>;

std::vector<NodeId> comp_nodes(const Comp& c) {
    std::vector<NodeId> out;
    for (const auto& e : c) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool edge_less(const SkeletonEdge& a, const SkeletonEdge& b) {
    return std::tie(a.u, a.v, a.kind, a.id) < std::tie(b.u, b.v, b.kind, b.id);
}

/// Components of the skeleton minus {a,b}; returns component id per node (-1 for a, b).
std::map<NodeId, int> split_components(const Comp& c, const std::vector<NodeId>& nodes, NodeId a, NodeId b, int& count) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& e : c) {
        if (e.u == a || e.u == b || e.v == a || e.v == b) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<NodeId, int> comp;
    count = 0;
    for (NodeId s : nodes) {
        if (s == a || s == b || comp.count(s)) continue;
        std::vector<NodeId> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : adj[x])
                if (!comp.count(y)) {
                    comp[y] = count;
                    stack.push_back(y);
                }
        }
        ++count;
    }
    return comp;
}

std::vector<std::vector<NodeId>> skeleton_faces(const Graph& s) {
    const auto emb = planar_embed(s);
    std::vector<std::vector<NodeId>> out;
    for (const auto& f : faces(*emb)) {
        std::vector<NodeId> cyc;
        for (const auto& d : f) cyc.push_back(d.from);
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        out.push_back(std::move(cyc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Simple graph of a skeleton on local ids 0..k-1 (positions in node.nodes).
Graph skeleton_graph(const SprNode& node) {
    Graph s(static_cast<int>(node.nodes.size()));
    auto local = [&](NodeId v) {
        return static_cast<NodeId>(std::lower_bound(node.nodes.begin(), node.nodes.end(), v) - node.nodes.begin());
    };
    for (const auto& e : node.edges)
        if (!s.adjacent(local(e.u), local(e.v))) s.add_edge(local(e.u), local(e.v), e.w);
    return s;
}

bool is_k5_skeleton(const SprNode& n) { return n.kind == SprKind::R && n.nodes.size() == 5 && n.edges.size() == 10; }

/// Node order around an S skeleton, starting at its smallest node toward the smaller neighbor.
std::vector<NodeId> cycle_order(const SprNode& n) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& e : n.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<NodeId> out{n.nodes.front()};
    NodeId prev = n.nodes.front();
    NodeId cur = std::min(adj[prev][0], adj[prev][1]);
    while (cur != n.nodes.front()) {
        out.push_back(cur);
        const auto& nb = adj[cur];
        const NodeId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return out;
}

}  // namespace

SprTree spr_tree(const Graph& g) {
    const auto bd = blocks(g);
    if (g.node_count() < 3 || bd.blocks.size() != 1 || static_cast<int>(bd.blocks[0].size()) != g.node_count())
        throw GraphError("SPR-tree requires a 2-connected graph on at least 3 nodes");
    auto weight_of = [&](NodeId a, NodeId b) -> Weight {
        const auto e = g.find_edge(a, b);
        return e ? g.edge(*e).w : 0;
    };

    Comp initial;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        initial.push_back({ed.u, ed.v, SkeletonEdgeKind::Original, e, ed.w});
    }
    std::vector<Comp> work{initial};
    std::vector<std::pair<SprKind, Comp>> done;
    int next_pair = 0;
    while (!work.empty()) {
        Comp c = std::move(work.back());
        work.pop_back();
        std::sort(c.begin(), c.end(), edge_less);
        const auto nodes = comp_nodes(c);
        if (nodes.size() == 2) {
            done.emplace_back(SprKind::P, std::move(c));
            continue;
        }
        // split off the first bundle of parallel edges
        bool split = false;
        for (std::size_t i = 0; i + 1 < c.size() && !split; ++i) {
            if (c[i].u != c[i + 1].u || c[i].v != c[i + 1].v) continue;
            std::size_t j = i;
            while (j < c.size() && c[j].u == c[i].u && c[j].v == c[i].v) ++j;
            const int p = next_pair++;
            const SkeletonEdge virt{c[i].u, c[i].v, SkeletonEdgeKind::Virtual, p, weight_of(c[i].u, c[i].v)};
            Comp bundle(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(j));
            bundle.push_back(virt);
            Comp rest(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            rest.insert(rest.end(), c.begin() + static_cast<std::ptrdiff_t>(j), c.end());
            rest.push_back(virt);
            work.push_back(std::move(rest));
            work.push_back(std::move(bundle));
            split = true;
        }
        if (split) continue;
        if (nodes.size() == 3) {
            done.emplace_back(SprKind::S, std::move(c));
            continue;
        }
        for (std::size_t ia = 0; ia < nodes.size() && !split; ++ia)
            for (std::size_t ib = ia + 1; ib < nodes.size() && !split; ++ib) {
                const NodeId a = nodes[ia], b = nodes[ib];
                int count = 0;
                const auto comp = split_components(c, nodes, a, b, count);
                if (count < 2) continue;
                // first component: the one holding the smallest node other than a, b
                int first = -1;
                for (NodeId v : nodes)
                    if (v != a && v != b) {
                        first = comp.at(v);
                        break;
                    }
                Comp e1, e2;
                for (const auto& e : c) {
                    const bool in1 = (e.u != a && e.u != b && comp.at(e.u) == first) ||
                                     (e.v != a && e.v != b && comp.at(e.v) == first);
                    (in1 ? e1 : e2).push_back(e);
                }
                const int p = next_pair++;
                const SkeletonEdge virt{a, b, SkeletonEdgeKind::Virtual, p, weight_of(a, b)};
                e1.push_back(virt);
                e2.push_back(virt);
                work.push_back(std::move(e2));
                work.push_back(std::move(e1));
                split = true;
            }
        if (split) continue;
        done.emplace_back(nodes.size() == 3 ? SprKind::S : SprKind::R, std::move(c));
    }

    // merge adjacent S-S and P-P components
    std::vector<char> alive(done.size(), 1);
    while (true) {
        std::map<int, std::vector<std::size_t>> holders;
        for (std::size_t i = 0; i < done.size(); ++i)
            if (alive[i])
                for (const auto& e : done[i].second)
                    if (e.kind == SkeletonEdgeKind::Virtual) holders[e.id].push_back(i);
        bool merged = false;
        for (const auto& [p, hs] : holders) {
            if (hs.size() != 2) throw GraphError("internal error: virtual pair not shared by two components");
            const auto i = hs[0], j = hs[1];
            if (done[i].first != done[j].first || done[i].first == SprKind::R) continue;
            Comp joined;
            for (auto k : {i, j})
                for (const auto& e : done[k].second)
                    if (!(e.kind == SkeletonEdgeKind::Virtual && e.id == p)) joined.push_back(e);
            done[i].second = std::move(joined);
            alive[j] = 0;
            merged = true;
            break;
        }
        if (!merged) break;
    }

    // renumber pairs in split order, order tree nodes by their smallest original edge
    std::vector<std::pair<SprKind, Comp>> comps;
    for (std::size_t i = 0; i < done.size(); ++i)
        if (alive[i]) comps.push_back(std::move(done[i]));
    std::set<int> used;
    for (const auto& [k, c] : comps)
        for (const auto& e : c)
            if (e.kind == SkeletonEdgeKind::Virtual) used.insert(e.id);
    std::map<int, int> renumber;
    for (int p : used) renumber[p] = static_cast<int>(renumber.size());
    auto key = [](const Comp& c) {
        int orig = std::numeric_limits<int>::max(), virt = std::numeric_limits<int>::max();
        for (const auto& e : c) {
            int& slot = e.kind == SkeletonEdgeKind::Original ? orig : virt;
            slot = std::min(slot, e.id);
        }
        return std::make_pair(orig, virt);
    };
    for (auto& [k, c] : comps)
        for (auto& e : c)
            if (e.kind == SkeletonEdgeKind::Virtual) e.id = renumber.at(e.id);
    std::sort(comps.begin(), comps.end(), [&](const auto& x, const auto& y) { return key(x.second) < key(y.second); });

    SprTree t;
    t.pair_count = static_cast<int>(renumber.size());
    std::vector<std::vector<int>> holder(static_cast<std::size_t>(t.pair_count));
    for (auto& [k, c] : comps) {
        std::sort(c.begin(), c.end(), edge_less);
        SprNode node{k, comp_nodes(c), c};
        for (const auto& e : c)
            if (e.kind == SkeletonEdgeKind::Virtual)
                holder[static_cast<std::size_t>(e.id)].push_back(static_cast<int>(t.nodes.size()));
        t.nodes.push_back(std::move(node));
    }
    for (int p = 0; p < t.pair_count; ++p) {
        const auto& h = holder[static_cast<std::size_t>(p)];
        t.tree_edges.push_back({std::min(h[0], h[1]), std::max(h[0], h[1]), p});
    }
    return t;
}

Graph recompose(const SprTree& t, int node_count) {
    std::map<int, SkeletonEdge> originals;
    std::map<int, int> pair_uses;
    for (const auto& n : t.nodes)
        for (const auto& e : n.edges) {
            if (e.kind == SkeletonEdgeKind::Virtual) {
                ++pair_uses[e.id];
            } else if (!originals.emplace(e.id, e).second) {
                throw GraphError("original edge " + std::to_string(e.id) + " appears twice");
            }
        }
    for (const auto& [p, uses] : pair_uses)
        if (uses != 2) throw GraphError("virtual pair " + std::to_string(p) + " used " + std::to_string(uses) + " times");
    Graph g(node_count);
    int expect = 0;
    for (const auto& [id, e] : originals) {
        if (id != expect++) throw GraphError("original edge indices are not contiguous");
        g.add_edge(e.u, e.v, e.w);
    }
    return g;
}

Augmented augment_with_parallel_originals(const Graph& g, const SprTree& t) {
    Augmented out{g, t};
    auto& tree = out.tree;
    for (auto& node : tree.nodes) {
        if (node.kind != SprKind::P) continue;
        const bool has_orig = std::any_of(node.edges.begin(), node.edges.end(),
                                          [](const SkeletonEdge& e) { return e.kind == SkeletonEdgeKind::Original; });
        if (has_orig) continue;
        const NodeId a = node.nodes[0], b = node.nodes[1];
        const EdgeIndex e = out.graph.add_edge(a, b, 0);
        node.edges.push_back({a, b, SkeletonEdgeKind::Original, e, 0});
        std::sort(node.edges.begin(), node.edges.end(), edge_less);
    }
    const auto snapshot = tree.tree_edges;
    std::vector<TreeEdge> edges;
    for (const auto& te : snapshot) {
        if (tree.nodes[static_cast<std::size_t>(te.a)].kind == SprKind::P ||
            tree.nodes[static_cast<std::size_t>(te.b)].kind == SprKind::P) {
            edges.push_back(te);
            continue;
        }
        auto& y = tree.nodes[static_cast<std::size_t>(te.b)];
        const auto it = std::find_if(y.edges.begin(), y.edges.end(), [&](const SkeletonEdge& e) {
            return e.kind == SkeletonEdgeKind::Virtual && e.id == te.pair;
        });
        const NodeId a = it->u, b = it->v;
        const int q = tree.pair_count++;
        it->id = q;
        std::sort(y.edges.begin(), y.edges.end(), edge_less);
        const EdgeIndex e = out.graph.add_edge(a, b, 0);
        SprNode p{SprKind::P, {a, b},
                  {{a, b, SkeletonEdgeKind::Original, e, 0},
                   {a, b, SkeletonEdgeKind::Virtual, te.pair, 0},
                   {a, b, SkeletonEdgeKind::Virtual, q, 0}}};
        const int pid = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(std::move(p));
        edges.push_back({std::min(te.a, pid), std::max(te.a, pid), te.pair});
        edges.push_back({std::min(te.b, pid), std::max(te.b, pid), q});
    }
    std::sort(edges.begin(), edges.end(), [](const TreeEdge& x, const TreeEdge& y) { return x.pair < y.pair; });
    tree.tree_edges = std::move(edges);
    for (auto& node : tree.nodes)
        for (auto& e : node.edges)
            if (e.kind == SkeletonEdgeKind::Virtual) {
                const auto orig = out.graph.find_edge(e.u, e.v);
                e.w = orig ? out.graph.edge(*orig).w : 0;
            }
    return out;
}

K33Decomposition k33_decompose(const Graph& g) {
    K33Decomposition d;
    d.block_decomposition = blocks(g);
    const auto& bd = d.block_decomposition;
    bool structural_maximal = g.edge_count() > 0 && is_connected(g) && bd.blocks.size() == 1;
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        if (bd.block_edges[bi].size() == 1) {
            d.trees.emplace_back();
            continue;
        }
        std::vector<EdgeIndex> emap;
        const auto& bnodes = bd.blocks[bi];
        const Graph local = g.induced(bnodes, &emap);
        SprTree t = spr_tree(local);
        for (auto& n : t.nodes) {
            for (auto& v : n.nodes) v = bnodes[static_cast<std::size_t>(v)];
            for (auto& e : n.edges) {
                e.u = bnodes[static_cast<std::size_t>(e.u)];
                e.v = bnodes[static_cast<std::size_t>(e.v)];
                if (e.u > e.v) std::swap(e.u, e.v);
                if (e.kind == SkeletonEdgeKind::Original) e.id = emap[static_cast<std::size_t>(e.id)];
            }
            std::sort(n.nodes.begin(), n.nodes.end());
            std::sort(n.edges.begin(), n.edges.end(), edge_less);
        }
        for (std::size_t ni = 0; ni < t.nodes.size(); ++ni) {
            const auto& n = t.nodes[ni];
            if (n.kind == SprKind::P) {
                const bool has_orig = std::any_of(n.edges.begin(), n.edges.end(),
                                                  [](const SkeletonEdge& e) { return e.kind == SkeletonEdgeKind::Original; });
                if (!has_orig) structural_maximal = false;
                continue;
            }
            ComponentClass cls;
            if (n.kind == SprKind::S) {
                cls = ComponentClass::Cycle;
                if (n.nodes.size() != 3) structural_maximal = false;
            } else if (is_k5_skeleton(n)) {
                cls = ComponentClass::K5;
            } else {
                const Graph s = skeleton_graph(n);
                if (planar_embed(s)) {
                    const int k = s.node_count();
                    cls = s.edge_count() == 3 * k - 6 ? ComponentClass::PlanarTriangulation : ComponentClass::Planar;
                    if (cls == ComponentClass::Planar) structural_maximal = false;
                } else {
                    cls = ComponentClass::NonPlanar;
                    d.is_k33_minor_free = false;
                    if (!d.witness) d.witness = n;
                }
            }
            d.components.push_back({static_cast<int>(bi), static_cast<int>(ni), cls});
        }
        for (const auto& te : t.tree_edges)
            if (t.nodes[static_cast<std::size_t>(te.a)].kind != SprKind::P &&
                t.nodes[static_cast<std::size_t>(te.b)].kind != SprKind::P)
                structural_maximal = false;
        d.trees.emplace_back(std::move(t));
    }
    d.is_maximal = d.is_k33_minor_free && structural_maximal;
    return d;
}

Completion maximal_completion(const Graph& g) {
    if (!is_connected(g)) throw GraphError("maximal completion requires a connected graph");
    const auto dec = k33_decompose(g);
    if (!dec.is_k33_minor_free) throw GraphError("graph has a K33 minor");
    Completion c{g, {}};
    Graph& h = c.graph;
    if (h.node_count() < 3) return c;

    // join neighbors of a cut node across two of its blocks
    while (true) {
        const auto bd = blocks(h);
        if (bd.cut_nodes.empty()) break;
        const NodeId v = bd.cut_nodes.front();
        std::vector<std::size_t> holding;
        for (std::size_t i = 0; i < bd.blocks.size() && holding.size() < 2; ++i)
            if (std::binary_search(bd.blocks[i].begin(), bd.blocks[i].end(), v)) holding.push_back(i);
        NodeId w[2] = {-1, -1};
        for (int s = 0; s < 2; ++s) {
            const auto& bn = bd.blocks[holding[static_cast<std::size_t>(s)]];
            for (NodeId x : bn)
                if (x != v && h.adjacent(v, x)) {
                    w[s] = x;
                    break;
                }
        }
        h.add_edge(w[0], w[1], 0);
    }

    while (true) {
        const SprTree t = spr_tree(h);
        std::vector<std::pair<NodeId, NodeId>> add;
        for (const auto& n : t.nodes) {
            if (n.kind == SprKind::P) {
                const bool has_orig = std::any_of(n.edges.begin(), n.edges.end(),
                                                  [](const SkeletonEdge& e) { return e.kind == SkeletonEdgeKind::Original; });
                if (!has_orig) add.emplace_back(n.nodes[0], n.nodes[1]);
            } else if (n.kind == SprKind::S && n.nodes.size() > 3) {
                const auto cyc = cycle_order(n);
                for (std::size_t i = 2; i + 1 < cyc.size(); ++i) add.emplace_back(cyc[0], cyc[i]);
            } else if (n.kind == SprKind::R && !is_k5_skeleton(n)) {
                Graph s = skeleton_graph(n);
                if (!planar_embed(s)) throw GraphError("graph has a K33 minor");
                while (s.edge_count() < 3 * s.node_count() - 6) {
                    const auto fs = skeleton_faces(s);
                    bool added = false;
                    for (const auto& f : fs) {
                        if (f.size() <= 3) continue;
                        for (std::size_t i = 0; i < f.size() && !added; ++i)
                            for (std::size_t j = i + 2; j < f.size() && !added; ++j) {
                                if (i == 0 && j + 1 == f.size()) continue;
                                if (s.adjacent(f[i], f[j])) continue;
                                s.add_edge(f[i], f[j], 0);
                                add.emplace_back(n.nodes[static_cast<std::size_t>(f[i])], n.nodes[static_cast<std::size_t>(f[j])]);
                                added = true;
                            }
                        break;
                    }
                    if (!added) throw GraphError("internal error: face without a free chord");
                }
            }
            if (!add.empty()) break;
        }
        if (add.empty())
            for (const auto& te : t.tree_edges) {
                const auto& x = t.nodes[static_cast<std::size_t>(te.a)];
                const auto& y = t.nodes[static_cast<std::size_t>(te.b)];
                if (x.kind == SprKind::P || y.kind == SprKind::P) continue;
                for (const auto& e : x.edges)
                    if (e.kind == SkeletonEdgeKind::Virtual && e.id == te.pair) add.emplace_back(e.u, e.v);
                break;
            }
        if (add.empty()) break;
        for (auto [a, b] : add)
            if (!h.adjacent(a, b)) h.add_edge(a, b, 0);
    }
    for (EdgeIndex e = g.edge_count(); e < h.edge_count(); ++e) c.added.push_back(e);
    return c;
}

std::string format_tree(const SprTree& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        os << "node " << i << " kind=" << kind_letter(n.kind) << " nodes=";
        for (std::size_t k = 0; k < n.nodes.size(); ++k) os << (k ? "," : "") << n.nodes[k] + 1;
        os << " edges=";
        for (std::size_t k = 0; k < n.edges.size(); ++k)
            os << (k ? "," : "") << (n.edges[k].kind == SkeletonEdgeKind::Original ? 'o' : 'v') << n.edges[k].id;
        os << '\n';
    }
    for (const auto& te : t.tree_edges) os << "tree " << te.a << ' ' << te.b << " via " << te.pair << '\n';
    return os.str();
}

}  // namespace k33cut
