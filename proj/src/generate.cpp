#include "k33cut/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "k33cut/rng.hpp"

namespace k33cut {

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

EdgeList triangulation(int n, Rng& rng) {
    EdgeList edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::array<NodeId, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (NodeId v = 4; v < n; ++v) {
        const std::size_t f = rng.below(faces.size());
        const auto [a, b, c] = faces[f];
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
        edges.insert(edges.end(), {{a, v}, {b, v}, {c, v}});
    }
    return edges;
}

Graph build(int n, const EdgeList& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(std::min(u, v), std::max(u, v));
    return g;
}

Graph without_edge(const Graph& g, EdgeIndex drop) {
    std::vector<EdgeIndex> keep;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (e != drop) keep.push_back(e);
    return g.edge_subgraph(keep);
}

Graph assign_weights(const Graph& g, Weight lo, Weight hi, Rng& rng) {
    Graph h = g;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) h.set_weight(e, rng.range(lo, hi));
    return h;
}

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<NodeId> perm(static_cast<std::size_t>(g.node_count()));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    std::vector<EdgeIndex> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    Graph h(g.node_count());
    for (EdgeIndex e : order) {
        const auto& ed = g.edge(e);
        const NodeId a = perm[static_cast<std::size_t>(ed.u)], b = perm[static_cast<std::size_t>(ed.v)];
        h.add_edge(std::min(a, b), std::max(a, b), ed.w);
    }
    return h;
}

void check_weights(Weight lo, Weight hi) {
    if (lo > hi || lo < -kMaxAbsWeight || hi > kMaxAbsWeight) throw std::invalid_argument("invalid weight range");
}

}  // namespace

Graph gen_k33free(const GeneratorSpec& spec) {
    if (spec.components.empty()) throw std::invalid_argument("generator needs at least one component");
    if (spec.triangulation_min_nodes < 4 || spec.triangulation_min_nodes > spec.triangulation_max_nodes)
        throw std::invalid_argument("invalid triangulation size range");
    if (spec.deletion_percent < 0 || spec.deletion_percent > 100) throw std::invalid_argument("deletion percent outside 0..100");
    check_weights(spec.weight_min, spec.weight_max);
    Rng rng(spec.seed);

    int n = 0;
    EdgeList edges;
    for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
        int k;
        EdgeList part;
        if (spec.components[ci] == ComponentKind::K5) {
            k = 5;
            for (NodeId a = 0; a < 5; ++a)
                for (NodeId b = a + 1; b < 5; ++b) part.emplace_back(a, b);
        } else {
            k = static_cast<int>(rng.range(spec.triangulation_min_nodes, spec.triangulation_max_nodes));
            part = triangulation(k, rng);
        }
        if (ci == 0) {
            n = k;
            edges = std::move(part);
            continue;
        }
        // 2-sum along a random edge xy of the current graph and uv of the new part
        const std::size_t host = rng.below(edges.size());
        auto [x, y] = edges[host];
        auto [u, v] = part[rng.below(part.size())];
        if (rng.chance(1, 2)) std::swap(u, v);
        std::vector<NodeId> map(static_cast<std::size_t>(k), -1);
        map[static_cast<std::size_t>(u)] = x;
        map[static_cast<std::size_t>(v)] = y;
        for (NodeId w = 0; w < k; ++w)
            if (map[static_cast<std::size_t>(w)] < 0) map[static_cast<std::size_t>(w)] = n++;
        for (auto [a, b] : part) {
            if ((a == u && b == v) || (a == v && b == u)) continue;
            edges.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
        }
        if (!spec.strict) edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(host));
    }
    Graph g = build(n, edges);

    if (spec.deletion_percent > 0) {
        std::vector<EdgeIndex> order(static_cast<std::size_t>(g.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        shuffle(order, rng);
        std::vector<char> removed(order.size(), 0);
        for (EdgeIndex e : order) {
            if (!rng.chance(static_cast<std::uint64_t>(spec.deletion_percent), 100)) continue;
            removed[static_cast<std::size_t>(e)] = 1;
            std::vector<EdgeIndex> keep;
            for (EdgeIndex f = 0; f < g.edge_count(); ++f)
                if (!removed[static_cast<std::size_t>(f)]) keep.push_back(f);
            if (!is_connected(g.edge_subgraph(keep))) removed[static_cast<std::size_t>(e)] = 0;
        }
        std::vector<EdgeIndex> keep;
        for (EdgeIndex f = 0; f < g.edge_count(); ++f)
            if (!removed[static_cast<std::size_t>(f)]) keep.push_back(f);
        g = g.edge_subgraph(keep);
    }
    g = assign_weights(g, spec.weight_min, spec.weight_max, rng);
    return spec.relabel ? relabel(g, rng) : g;
}

GeneratorSpec spec_for_seed(std::uint64_t seed, int max_nodes) {
    if (max_nodes < 4) throw std::invalid_argument("need room for at least four nodes");
    Rng rng(seed ^ 0x6b33637574ULL);
    GeneratorSpec s;
    s.seed = seed;
    s.components.clear();
    s.triangulation_min_nodes = 4;
    s.triangulation_max_nodes = std::min(8, max_nodes);
    const int wanted = static_cast<int>(rng.range(1, 4));
    // worst-case node count: first component full size, each later one adds size - 2
    int budget = max_nodes;
    for (int i = 0; i < wanted; ++i) {
        const int extra = i == 0 ? 0 : 2;
        const bool k5_fits = 5 - extra <= budget;
        const bool tri_fits = s.triangulation_max_nodes - extra <= budget;
        if (!k5_fits && !tri_fits) break;
        const ComponentKind kind =
            (k5_fits && (!tri_fits || rng.chance(1, 2))) ? ComponentKind::K5 : ComponentKind::Triangulation;
        s.components.push_back(kind);
        budget -= (kind == ComponentKind::K5 ? 5 : s.triangulation_max_nodes) - extra;
    }
    if (s.components.empty()) s.components.push_back(ComponentKind::Triangulation);
    s.strict = rng.chance(1, 2);
    static constexpr int kDeletion[] = {0, 0, 10, 25};
    s.deletion_percent = kDeletion[rng.below(4)];
    s.weight_min = -10;
    s.weight_max = 10;
    s.relabel = true;
    return s;
}

Graph gen_planar_2connected(std::uint64_t seed, int min_nodes, int max_nodes, Weight wmin, Weight wmax) {
    if (min_nodes < 3 || min_nodes > max_nodes) throw std::invalid_argument("invalid node range");
    check_weights(wmin, wmax);
    Rng rng(seed);
    const int n = static_cast<int>(rng.range(min_nodes, max_nodes));
    Graph g;
    if (n == 3) {
        g = named::cycle(3);
    } else {
        g = build(n, triangulation(n, rng));
        const int deletions = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.edge_count() - n) + 1));
        for (int i = 0; i < deletions; ++i) {
            const auto e = static_cast<EdgeIndex>(rng.below(static_cast<std::uint64_t>(g.edge_count())));
            Graph h = without_edge(g, e);
            if (is_k_connected(h, 2)) g = std::move(h);
        }
    }
    g = assign_weights(g, wmin, wmax, rng);
    return relabel(g, rng);
}

Graph gen_random_graph(std::uint64_t seed, int n, int m, Weight wmin, Weight wmax) {
    if (n < 0 || m < 0 || static_cast<long>(m) > static_cast<long>(n) * (n - 1) / 2)
        throw std::invalid_argument("too many edges for node count");
    check_weights(wmin, wmax);
    Rng rng(seed);
    EdgeList all;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) all.emplace_back(a, b);
    shuffle(all, rng);
    all.resize(static_cast<std::size_t>(m));
    std::sort(all.begin(), all.end());
    return assign_weights(build(n, all), wmin, wmax, rng);
}

}  // namespace k33cut
