#include "k33cut/maxcut.hpp"

#include <algorithm>
#include <stdexcept>

#include "k33cut/planar.hpp"
#include "k33cut/rng.hpp"
#include "k33cut/tjoin.hpp"

namespace k33cut {

namespace {

bool lex_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Side vector of a cut given by its edge indicator; node 0 on side 0.
std::vector<std::uint8_t> side_from_indicator(const Graph& g, const std::vector<std::uint8_t>& ind) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::uint8_t> side(n, 0);
    std::vector<char> seen(n, 0);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::vector<NodeId> stack{s};
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                const std::uint8_t want = side[static_cast<std::size_t>(x)] ^ ind[static_cast<std::size_t>(inc.edge)];
                if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                    seen[static_cast<std::size_t>(inc.neighbor)] = 1;
                    side[static_cast<std::size_t>(inc.neighbor)] = want;
                    stack.push_back(inc.neighbor);
                } else if (side[static_cast<std::size_t>(inc.neighbor)] != want) {
                    throw std::logic_error("edge set is not a cut");
                }
            }
        }
    }
    return side;
}

struct ConditionalOptimum {
    Weight plus;
    Weight minus;
    std::vector<std::uint8_t> side_plus;
    std::vector<std::uint8_t> side_minus;
};

/// Best cuts of a small graph with edge `e` cut / not cut, by enumeration.
ConditionalOptimum enumerate_conditional(const Graph& g, EdgeIndex e) {
    ConditionalOptimum best{0, 0, {}, {}};
    bool have_plus = false, have_minus = false;
    for (const auto& c : enumerate_cuts(g)) {
        const Weight w = c.weight(g);
        if (c.indicator[static_cast<std::size_t>(e)]) {
            if (!have_plus || w > best.plus || (w == best.plus && lex_less(c.side, best.side_plus))) {
                best.plus = w;
                best.side_plus = c.side;
                have_plus = true;
            }
        } else if (!have_minus || w > best.minus || (w == best.minus && lex_less(c.side, best.side_minus))) {
            best.minus = w;
            best.side_minus = c.side;
            have_minus = true;
        }
    }
    return best;
}

bool is_k5(const Graph& g) { return g.node_count() == 5 && g.edge_count() == 10; }

}  // namespace

MaxCutResult maxcut_bruteforce(const Graph& g) {
    if (g.node_count() > kMaxEnumerationNodes)
        throw GraphError("brute force limited to " + std::to_string(kMaxEnumerationNodes) + " nodes");
    std::vector<NodeId> free_nodes;
    for (const auto& comp : connected_components(g)) free_nodes.insert(free_nodes.end(), comp.begin() + 1, comp.end());
    std::sort(free_nodes.begin(), free_nodes.end());
    const std::uint64_t count = std::uint64_t{1} << free_nodes.size();
    std::vector<std::uint8_t> side(static_cast<std::size_t>(g.node_count()), 0), best_side = side;
    Weight best = 0;
    bool have = false;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < free_nodes.size(); ++i) side[static_cast<std::size_t>(free_nodes[i])] = (mask >> i) & 1U;
        Weight w = 0;
        for (const auto& e : g.edges())
            if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) w += e.w;
        if (!have || w > best || (w == best && lex_less(side, best_side))) {
            best = w;
            best_side = side;
            have = true;
        }
    }
    MaxCutResult r{best, Cut::from_side(g, best_side)};
    return r;
}

MaxCutResult planar_maxcut(const Graph& g, std::optional<ForcedEdge> forced) {
    const auto bd = blocks(g);
    if (g.node_count() < 3 || bd.blocks.size() != 1 || static_cast<int>(bd.blocks[0].size()) != g.node_count())
        throw UnsupportedGraph("planar_maxcut requires a 2-connected graph");
    const auto emb = planar_embed(g);
    if (!emb) throw UnsupportedGraph("planar_maxcut requires a planar graph");
    const Weight big = 1 + g.total_abs_weight();
    auto dual = dual_graph(*emb);
    if (forced) {
        if (forced->edge < 0 || forced->edge >= g.edge_count()) throw GraphError("forced edge out of range");
        dual.edges[static_cast<std::size_t>(forced->edge)].w += forced->in_cut ? big : -big;
    }
    TJoinInstance inst;
    inst.node_count = dual.node_count;
    std::vector<int> degree(static_cast<std::size_t>(dual.node_count), 0);
    for (const auto& e : dual.edges) {
        inst.edges.push_back({e.a, e.b, e.w});
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
    }
    for (int f = 0; f < dual.node_count; ++f)
        if (degree[static_cast<std::size_t>(f)] % 2) inst.terminals.push_back(f);
    const auto join = min_weight_t_join(inst);
    std::vector<std::uint8_t> ind(static_cast<std::size_t>(g.edge_count()), 1);
    for (int e : join.edges) ind[static_cast<std::size_t>(e)] = 0;
    MaxCutResult r;
    r.cut = Cut::from_side(g, side_from_indicator(g, ind));
    r.value = r.cut.weight(g);
    return r;
}

EliminationState::EliminationState(Graph g, SprTree t) : g_(std::move(g)), nodes_(std::move(t.nodes)) {
    alive_.assign(nodes_.size(), 1);
    pair_original_.assign(static_cast<std::size_t>(t.pair_count), -1);
    for (const auto& n : nodes_)
        for (const auto& e : n.edges)
            if (e.kind == SkeletonEdgeKind::Virtual) {
                const auto orig = g_.find_edge(e.u, e.v);
                if (!orig) throw GraphError("virtual edge without a parallel original edge");
                pair_original_[static_cast<std::size_t>(e.id)] = *orig;
            }
}

int EliminationState::alive_count() const {
    return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
}

std::vector<int> EliminationState::leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!alive_[i] || nodes_[i].kind == SprKind::P) continue;
        const auto virt = std::count_if(nodes_[i].edges.begin(), nodes_[i].edges.end(),
                                        [](const SkeletonEdge& e) { return e.kind == SkeletonEdgeKind::Virtual; });
        if (virt == 1) out.push_back(static_cast<int>(i));
    }
    return out;
}

EliminationStep EliminationState::eliminate_leaf(int leaf) {
    auto& h = nodes_.at(static_cast<std::size_t>(leaf));
    if (!alive_[static_cast<std::size_t>(leaf)] || h.kind == SprKind::P) throw GraphError("not an S/R leaf");
    int pair = -1;
    for (const auto& e : h.edges)
        if (e.kind == SkeletonEdgeKind::Virtual) {
            if (pair >= 0) throw GraphError("leaf holds more than one virtual edge");
            pair = e.id;
        }
    if (pair < 0) throw GraphError("leaf holds no virtual edge");
    const EdgeIndex orig = pair_original_[static_cast<std::size_t>(pair)];

    Graph local(static_cast<int>(h.nodes.size()));
    auto loc = [&](NodeId v) {
        return static_cast<NodeId>(std::lower_bound(h.nodes.begin(), h.nodes.end(), v) - h.nodes.begin());
    };
    EdgeIndex ab = -1;
    for (const auto& e : h.edges) {
        const Weight w = e.kind == SkeletonEdgeKind::Original ? g_.edge(e.id).w : g_.edge(orig).w;
        const EdgeIndex le = local.add_edge(loc(e.u), loc(e.v), w);
        if (e.kind == SkeletonEdgeKind::Virtual) ab = le;
    }
    EliminationStep step;
    step.leaf = leaf;
    step.a = g_.edge(orig).u;
    step.b = g_.edge(orig).v;
    step.nodes = h.nodes;
    if (is_k5(local)) {
        const auto opt = enumerate_conditional(local, ab);
        step.beta_plus = opt.plus;
        step.beta_minus = opt.minus;
        step.side_plus = opt.side_plus;
        step.side_minus = opt.side_minus;
    } else {
        const auto plus = planar_maxcut(local, ForcedEdge{ab, true});
        const auto minus = planar_maxcut(local, ForcedEdge{ab, false});
        step.beta_plus = plus.value;
        step.beta_minus = minus.value;
        step.side_plus = plus.cut.side;
        step.side_minus = minus.cut.side;
    }
    step.gamma = step.beta_plus - step.beta_minus;
    g_.set_weight(orig, step.gamma);
    alive_[static_cast<std::size_t>(leaf)] = 0;

    // drop the pair from its P-node; dissolve the P-node when one virtual edge remains
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!alive_[i] || nodes_[i].kind != SprKind::P) continue;
        auto& pe = nodes_[i].edges;
        const auto it = std::find_if(pe.begin(), pe.end(), [&](const SkeletonEdge& e) {
            return e.kind == SkeletonEdgeKind::Virtual && e.id == pair;
        });
        if (it == pe.end()) continue;
        pe.erase(it);
        const auto virt = std::count_if(pe.begin(), pe.end(), [](const SkeletonEdge& e) { return e.kind == SkeletonEdgeKind::Virtual; });
        if (virt == 1) {
            const int q = std::find_if(pe.begin(), pe.end(), [](const SkeletonEdge& e) {
                              return e.kind == SkeletonEdgeKind::Virtual;
                          })->id;
            for (std::size_t j = 0; j < nodes_.size(); ++j) {
                if (j == i || !alive_[j]) continue;
                for (auto& e : nodes_[j].edges)
                    if (e.kind == SkeletonEdgeKind::Virtual && e.id == q) {
                        e.kind = SkeletonEdgeKind::Original;
                        e.id = orig;
                    }
            }
            alive_[i] = 0;
        }
        break;
    }
    steps_.push_back(step);
    return step;
}

MaxCutResult EliminationState::finish() {
    int last = -1;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (alive_[i]) {
            if (last >= 0) throw GraphError("elimination not finished");
            last = static_cast<int>(i);
        }
    const auto& h = nodes_.at(static_cast<std::size_t>(last));
    std::vector<std::uint8_t> side(static_cast<std::size_t>(g_.node_count()), 0);
    Weight xi = 0;
    if (h.kind == SprKind::P) {
        const auto& e = g_.edge(h.edges.front().id);
        xi = std::max<Weight>(0, e.w);
        side[static_cast<std::size_t>(e.v)] = e.w > 0 ? 1 : 0;
    } else {
        Graph local(static_cast<int>(h.nodes.size()));
        for (const auto& e : h.edges) {
            if (e.kind != SkeletonEdgeKind::Original) throw GraphError("virtual edge left in the final component");
            const auto a = static_cast<NodeId>(std::lower_bound(h.nodes.begin(), h.nodes.end(), e.u) - h.nodes.begin());
            const auto b = static_cast<NodeId>(std::lower_bound(h.nodes.begin(), h.nodes.end(), e.v) - h.nodes.begin());
            local.add_edge(a, b, g_.edge(e.id).w);
        }
        const auto r = is_k5(local) ? maxcut_bruteforce(local) : planar_maxcut(local);
        xi = r.value;
        for (std::size_t i = 0; i < h.nodes.size(); ++i) side[static_cast<std::size_t>(h.nodes[i])] = r.cut.side[i];
    }
    Weight total = xi;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        total += it->beta_minus;
        const bool cut = side[static_cast<std::size_t>(it->a)] != side[static_cast<std::size_t>(it->b)];
        const auto& s = cut ? it->side_plus : it->side_minus;
        const auto ia = static_cast<std::size_t>(std::lower_bound(it->nodes.begin(), it->nodes.end(), it->a) - it->nodes.begin());
        const std::uint8_t flip = s[ia] ^ side[static_cast<std::size_t>(it->a)];
        for (std::size_t i = 0; i < it->nodes.size(); ++i) side[static_cast<std::size_t>(it->nodes[i])] = s[i] ^ flip;
    }
    MaxCutResult r;
    r.value = total;
    r.cut = Cut::from_side(g_, side);
    return r;
}

namespace {

/// Optimum of one 2-connected block, on the block's local node ids.
MaxCutResult solve_block(const Graph& block, const MaxCutOptions& options, std::uint64_t salt) {
    const auto aug = augment_with_parallel_originals(block, spr_tree(block));
    EliminationState state(aug.graph, aug.tree);
    std::optional<Rng> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    while (state.alive_count() > 1) {
        const auto ls = state.leaves();
        if (ls.empty()) throw std::logic_error("SPR-tree without an S/R leaf");
        const int pick = rng ? ls[static_cast<std::size_t>(rng->below(ls.size()))] : ls.front();
        state.eliminate_leaf(pick);
    }
    auto r = state.finish();
    // the augmented edges carry weight 0 in the input weighting
    Graph plain = block;
    std::vector<std::uint8_t> side(r.cut.side.begin(), r.cut.side.begin() + block.node_count());
    MaxCutResult out;
    out.cut = Cut::from_side(plain, side);
    out.value = out.cut.weight(plain);
    if (out.value != r.value) throw std::logic_error("elimination value disagrees with its witness");
    if (options.steps) options.steps->insert(options.steps->end(), state.steps().begin(), state.steps().end());
    return out;
}

}  // namespace

MaxCutResult maxcut(const Graph& g, const MaxCutOptions& options) {
    const auto dec = k33_decompose(g);
    if (!dec.is_k33_minor_free) throw UnsupportedGraph("graph has a K33 minor", dec.witness->nodes);
    const auto& bd = dec.block_decomposition;
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::uint8_t> side(n, 0);
    std::vector<char> assigned(n, 0), done(bd.blocks.size(), 0);
    for (std::size_t processed = 0; processed < bd.blocks.size(); ++processed) {
        std::size_t pick = bd.blocks.size();
        for (std::size_t i = 0; i < bd.blocks.size() && pick == bd.blocks.size(); ++i)
            if (!done[i])
                for (NodeId v : bd.blocks[i])
                    if (assigned[static_cast<std::size_t>(v)]) {
                        pick = i;
                        break;
                    }
        if (pick == bd.blocks.size())
            for (std::size_t i = 0; i < bd.blocks.size(); ++i)
                if (!done[i]) {
                    pick = i;
                    break;
                }
        done[pick] = 1;
        const auto& nodes = bd.blocks[pick];
        std::vector<std::uint8_t> local_side;
        if (bd.block_edges[pick].size() == 1) {
            const auto& e = g.edge(bd.block_edges[pick][0]);
            local_side = {0, static_cast<std::uint8_t>(e.w > 0 ? 1 : 0)};
        } else {
            local_side = solve_block(g.induced(nodes), options, pick).cut.side;
        }
        std::uint8_t flip = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (assigned[static_cast<std::size_t>(nodes[i])]) flip = local_side[i] ^ side[static_cast<std::size_t>(nodes[i])];
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            side[static_cast<std::size_t>(nodes[i])] = local_side[i] ^ flip;
            assigned[static_cast<std::size_t>(nodes[i])] = 1;
        }
    }
    MaxCutResult r;
    r.cut = Cut::from_side(g, side);
    r.value = r.cut.weight(g);
    return r;
}

}  // namespace k33cut
