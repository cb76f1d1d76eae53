#include "k33cut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace k33cut {

Graph::Graph(int node_count) {
    if (node_count < 0) throw GraphError("negative node count");
    adjacency_.resize(static_cast<std::size_t>(node_count));
}

EdgeIndex Graph::add_edge(NodeId u, NodeId v, Weight w) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
        throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
    if (find_edge(u, v)) throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    const auto e = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back({u, v, w});
    adjacency_[static_cast<std::size_t>(u)].push_back({v, e});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, e});
    return e;
}

std::optional<EdgeIndex> Graph::find_edge(NodeId u, NodeId v) const {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) return std::nullopt;
    const auto& a = incident(u).size() <= incident(v).size() ? incident(u) : incident(v);
    const NodeId other = incident(u).size() <= incident(v).size() ? v : u;
    for (const auto& inc : a)
        if (inc.neighbor == other) return inc.edge;
    return std::nullopt;
}

void Graph::set_weight(EdgeIndex e, Weight w) { edges_.at(static_cast<std::size_t>(e)).w = w; }

Weight Graph::total_abs_weight() const {
    Weight s = 0;
    for (const auto& e : edges_) s += e.w < 0 ? -e.w : e.w;
    return s;
}

Graph Graph::induced(const std::vector<NodeId>& nodes, std::vector<EdgeIndex>* edge_map) const {
    std::vector<int> local(adjacency_.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(nodes.size()));
    if (edge_map) edge_map->clear();
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        const int a = local[static_cast<std::size_t>(ed.u)];
        const int b = local[static_cast<std::size_t>(ed.v)];
        if (a < 0 || b < 0) continue;
        h.add_edge(a, b, ed.w);
        if (edge_map) edge_map->push_back(e);
    }
    return h;
}

Graph Graph::edge_subgraph(const std::vector<EdgeIndex>& keep) const {
    Graph h(node_count());
    for (EdgeIndex e : keep) {
        const auto& ed = edge(e);
        h.add_edge(ed.u, ed.v, ed.w);
    }
    return h;
}

bool Graph::operator==(const Graph& other) const {
    if (node_count() != other.node_count() || edge_count() != other.edge_count()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& a = edges_[i];
        const auto& b = other.edges_[i];
        if (a.u != b.u || a.v != b.v || a.w != b.w) return false;
    }
    return true;
}

Cut Cut::from_side(const Graph& g, std::vector<std::uint8_t> side) {
    if (static_cast<int>(side.size()) != g.node_count()) throw GraphError("side vector has wrong length");
    if (!side.empty() && side[0])
        for (auto& s : side) s ^= 1;
    Cut c;
    c.indicator.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        c.indicator[static_cast<std::size_t>(e)] = side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)];
    }
    c.side = std::move(side);
    return c;
}

Weight Cut::weight(const Graph& g) const {
    Weight s = 0;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (indicator[static_cast<std::size_t>(e)]) s += g.edge(e).w;
    return s;
}

// ---- parsing -------------------------------------------------------------

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
bool parse_int(std::string_view s, T& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    ParsedGraph result;
    bool have_header = false;
    long long declared_edges = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        const auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(ParseErrorKind::Malformed, line_no, "duplicate header");
            int n = 0;
            if (tok.size() != 4 || tok[1] != "cut" || !parse_int(tok[2], n) || !parse_int(tok[3], declared_edges) ||
                n < 0 || declared_edges < 0)
                throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'p cut <n> <m>'");
            result.graph = Graph(n);
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(ParseErrorKind::Malformed, line_no, "edge before header");
            long long u = 0, v = 0;
            Weight w = 0;
            if (tok.size() != 4 || !parse_int(tok[1], u) || !parse_int(tok[2], v) || !parse_int(tok[3], w))
                throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'e <u> <v> <w>'");
            const int n = result.graph.node_count();
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(ParseErrorKind::NodeOutOfRange, line_no, "node id out of range");
            if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no, "self-loop");
            if (w > kMaxAbsWeight || w < -kMaxAbsWeight)
                throw ParseError(ParseErrorKind::WeightOutOfRange, line_no, "weight exceeds 2^40 in magnitude");
            if (result.graph.adjacent(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1)))
                throw ParseError(ParseErrorKind::DuplicateEdge, line_no, "duplicate edge");
            result.graph.add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w);
        } else {
            throw ParseError(ParseErrorKind::Malformed, line_no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw ParseError(ParseErrorKind::Malformed, line_no, "missing header");
    if (result.graph.edge_count() != declared_edges)
        throw ParseError(ParseErrorKind::Malformed, line_no,
                         "header declares " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(result.graph.edge_count()));
    int isolated = 0;
    for (NodeId v = 0; v < result.graph.node_count(); ++v)
        if (result.graph.degree(v) == 0) ++isolated;
    if (isolated > 0) result.warnings.push_back(std::to_string(isolated) + " isolated node(s)");
    return result;
}

std::string format_graph(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << '\n';
    os << "p cut " << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return os.str();
}

Graph drop_isolated_nodes(const Graph& g, std::vector<NodeId>* kept) {
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) nodes.push_back(v);
    if (kept) *kept = nodes;
    return g.induced(nodes);
}

// ---- structure -----------------------------------------------------------

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<std::vector<NodeId>> out;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<NodeId> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (const auto& inc : g.incident(v))
                if (comp[static_cast<std::size_t>(inc.neighbor)] < 0) {
                    comp[static_cast<std::size_t>(inc.neighbor)] = id;
                    stack.push_back(inc.neighbor);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BlockDecomposition blocks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeIndex> edge_stack;
    BlockDecomposition out;
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    struct Frame {
        NodeId v;
        EdgeIndex parent_edge;
        std::size_t next;
        int children;
    };
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const auto [w, e] = inc[f.next++];
                if (e == f.parent_edge) continue;
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.push_back(e);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    ++f.children;
                    stack.push_back({w, e, 0, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& parent = stack.back();
            const auto pv = static_cast<std::size_t>(parent.v);
            low[pv] = std::min(low[pv], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= disc[pv]) {
                // parent.v separates the subtree of done.v: pop one block
                std::vector<EdgeIndex> bedges;
                while (true) {
                    const EdgeIndex e = edge_stack.back();
                    edge_stack.pop_back();
                    bedges.push_back(e);
                    if (e == done.parent_edge) break;
                }
                std::vector<NodeId> bnodes;
                for (EdgeIndex e : bedges) {
                    bnodes.push_back(g.edge(e).u);
                    bnodes.push_back(g.edge(e).v);
                }
                std::sort(bnodes.begin(), bnodes.end());
                bnodes.erase(std::unique(bnodes.begin(), bnodes.end()), bnodes.end());
                std::sort(bedges.begin(), bedges.end());
                out.blocks.push_back(std::move(bnodes));
                out.block_edges.push_back(std::move(bedges));
                if (parent.parent_edge >= 0 || parent.children > 1) is_cut[pv] = 1;
            }
        }
    }
    // deterministic order: by smallest edge index
    std::vector<std::size_t> order(out.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.block_edges[a].front() < out.block_edges[b].front(); });
    BlockDecomposition sorted;
    for (std::size_t i : order) {
        sorted.blocks.push_back(std::move(out.blocks[i]));
        sorted.block_edges.push_back(std::move(out.block_edges[i]));
    }
    // a root is a cut node iff it lies in two blocks; recount from the blocks themselves
    std::vector<int> count(n, 0);
    for (const auto& b : sorted.blocks)
        for (NodeId v : b) ++count[static_cast<std::size_t>(v)];
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (count[static_cast<std::size_t>(v)] > 1) sorted.cut_nodes.push_back(v);
    return sorted;
}

namespace {

/// Maximum number of internally disjoint s-t paths, capped at `limit`.
int disjoint_paths(const Graph& g, NodeId s, NodeId t, int limit) {
    // node-split network: x_in = 2x, x_out = 2x+1
    const int n = g.node_count();
    const int size = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), 0));
    for (NodeId x = 0; x < n; ++x)
        cap[static_cast<std::size_t>(2 * x)][static_cast<std::size_t>(2 * x + 1)] = (x == s || x == t) ? limit : 1;
    for (const auto& e : g.edges()) {
        cap[static_cast<std::size_t>(2 * e.u + 1)][static_cast<std::size_t>(2 * e.v)] = 1;
        cap[static_cast<std::size_t>(2 * e.v + 1)][static_cast<std::size_t>(2 * e.u)] = 1;
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (flow < limit) {
        std::vector<int> prev(static_cast<std::size_t>(size), -1);
        prev[static_cast<std::size_t>(src)] = src;
        std::deque<int> q{src};
        while (!q.empty() && prev[static_cast<std::size_t>(dst)] < 0) {
            const int x = q.front();
            q.pop_front();
            for (int y = 0; y < size; ++y)
                if (prev[static_cast<std::size_t>(y)] < 0 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
                    prev[static_cast<std::size_t>(y)] = x;
                    q.push_back(y);
                }
        }
        if (prev[static_cast<std::size_t>(dst)] < 0) break;
        for (int y = dst; y != src; y = prev[static_cast<std::size_t>(y)]) {
            const int x = prev[static_cast<std::size_t>(y)];
            --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3) throw GraphError("is_k_connected supports k in {1,2,3}");
    if (g.node_count() <= 1) return true;
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    for (NodeId s = 0; s < g.node_count(); ++s)
        for (NodeId t = s + 1; t < g.node_count(); ++t)
            if (disjoint_paths(g, s, t, k) < k) return false;
    return true;
}

std::vector<std::vector<NodeId>> triangles(const Graph& g) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& e : g.edges())
        for (const auto& inc : g.incident(e.u)) {
            const NodeId w = inc.neighbor;
            if (w > e.v && g.adjacent(e.v, w)) out.push_back({e.u, e.v, w});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<NodeId>> chordless_cycles(const Graph& g, std::size_t cap) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> path;
    std::vector<char> on_path(n, 0);

    // path = s, v1, ..., vk; extensions keep the path induced apart from the closing edge to s
    std::function<void(NodeId)> extend = [&](NodeId s) {
        const NodeId last = path.back();
        for (const auto& inc : g.incident(last)) {
            const NodeId u = inc.neighbor;
            if (u <= s || on_path[static_cast<std::size_t>(u)]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(path[i])]) { chord = true; break; }
            if (chord) continue;
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)]) {
                if (path.size() >= 2 && path[1] < u) {
                    if (out.size() >= cap) throw GraphError("chordless cycle cap exceeded");
                    out.push_back(path);
                    out.back().push_back(u);
                }
                continue;
            }
            path.push_back(u);
            on_path[static_cast<std::size_t>(u)] = 1;
            extend(s);
            on_path[static_cast<std::size_t>(u)] = 0;
            path.pop_back();
        }
    };
    for (NodeId s = 0; s < g.node_count(); ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = 1;
        for (const auto& inc : g.incident(s)) {
            if (inc.neighbor <= s) continue;
            path.push_back(inc.neighbor);
            on_path[static_cast<std::size_t>(inc.neighbor)] = 1;
            extend(s);
            on_path[static_cast<std::size_t>(inc.neighbor)] = 0;
            path.pop_back();
        }
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<NodeId>> k5_subgraphs(const Graph& g) {
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> clique;
    std::function<void(NodeId)> grow = [&](NodeId from) {
        if (clique.size() == 5) {
            out.push_back(clique);
            return;
        }
        for (NodeId v = from; v < g.node_count(); ++v) {
            if (g.degree(v) < 4) continue;
            bool ok = true;
            for (NodeId c : clique)
                if (!g.adjacent(c, v)) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(v);
            grow(v + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return out;
}

std::vector<std::vector<NodeId>> ear_decomposition(const Graph& g) {
    const auto bd = blocks(g);
    if (g.node_count() < 3 || bd.blocks.size() != 1 || static_cast<int>(bd.blocks[0].size()) != g.node_count())
        throw GraphError("ear decomposition requires a 2-connected graph");
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<char> in_nodes(n, 0), in_edges(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::vector<NodeId>> ears;

    // shortest cycle through edge 0
    {
        const auto& e0 = g.edge(0);
        std::vector<NodeId> prev(n, -1);
        prev[static_cast<std::size_t>(e0.u)] = e0.u;
        std::deque<NodeId> q{e0.u};
        while (!q.empty()) {
            const NodeId x = q.front();
            q.pop_front();
            for (const auto& inc : g.incident(x)) {
                if (inc.edge == 0 || prev[static_cast<std::size_t>(inc.neighbor)] >= 0) continue;
                prev[static_cast<std::size_t>(inc.neighbor)] = x;
                q.push_back(inc.neighbor);
            }
        }
        std::vector<NodeId> cyc;
        for (NodeId x = e0.v; x != e0.u; x = prev[static_cast<std::size_t>(x)]) cyc.push_back(x);
        cyc.push_back(e0.u);
        std::reverse(cyc.begin(), cyc.end());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            in_nodes[static_cast<std::size_t>(cyc[i])] = 1;
            in_edges[static_cast<std::size_t>(*g.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]))] = 1;
        }
        ears.push_back(std::move(cyc));
    }
    while (true) {
        EdgeIndex pick = -1;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (!in_edges[static_cast<std::size_t>(e)] &&
                (in_nodes[static_cast<std::size_t>(g.edge(e).u)] || in_nodes[static_cast<std::size_t>(g.edge(e).v)])) {
                pick = e;
                break;
            }
        if (pick < 0) break;
        NodeId a = g.edge(pick).u, b = g.edge(pick).v;
        if (!in_nodes[static_cast<std::size_t>(a)]) std::swap(a, b);
        std::vector<NodeId> ear{a, b};
        if (!in_nodes[static_cast<std::size_t>(b)]) {
            std::vector<NodeId> prev(n, -1);
            prev[static_cast<std::size_t>(b)] = b;
            std::deque<NodeId> q{b};
            NodeId hit = -1;
            while (!q.empty() && hit < 0) {
                const NodeId x = q.front();
                q.pop_front();
                for (const auto& inc : g.incident(x)) {
                    const NodeId y = inc.neighbor;
                    if (y == a || prev[static_cast<std::size_t>(y)] >= 0) continue;
                    prev[static_cast<std::size_t>(y)] = x;
                    if (in_nodes[static_cast<std::size_t>(y)]) { hit = y; break; }
                    q.push_back(y);
                }
            }
            if (hit < 0) throw GraphError("ear decomposition failed: graph is not 2-connected");
            std::vector<NodeId> tail;
            for (NodeId x = hit; x != b; x = prev[static_cast<std::size_t>(x)]) tail.push_back(x);
            std::reverse(tail.begin(), tail.end());
            ear.insert(ear.end(), tail.begin(), tail.end());
        }
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            in_nodes[static_cast<std::size_t>(ear[i])] = in_nodes[static_cast<std::size_t>(ear[i + 1])] = 1;
            in_edges[static_cast<std::size_t>(*g.find_edge(ear[i], ear[i + 1]))] = 1;
        }
        ears.push_back(std::move(ear));
    }
    return ears;
}

std::vector<Cut> enumerate_cuts(const Graph& g) {
    if (g.node_count() > kMaxEnumerationNodes)
        throw GraphError("cut enumeration limited to " + std::to_string(kMaxEnumerationNodes) + " nodes");
    std::vector<NodeId> free_nodes;
    for (const auto& comp : connected_components(g))
        free_nodes.insert(free_nodes.end(), comp.begin() + 1, comp.end());
    std::sort(free_nodes.begin(), free_nodes.end());
    const std::uint64_t count = std::uint64_t{1} << free_nodes.size();
    std::vector<Cut> out;
    out.reserve(count);
    std::vector<std::uint8_t> side(static_cast<std::size_t>(g.node_count()), 0);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < free_nodes.size(); ++i) side[static_cast<std::size_t>(free_nodes[i])] = (mask >> i) & 1U;
        out.push_back(Cut::from_side(g, side));
    }
    return out;
}

std::vector<EdgeIndex> cycle_edges(const Graph& g, const std::vector<NodeId>& cycle) {
    if (cycle.size() < 3) throw GraphError("a cycle needs at least 3 nodes");
    std::vector<EdgeIndex> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto e = g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (!e) throw GraphError("node sequence is not a cycle of the graph");
        out.push_back(*e);
    }
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw GraphError("cycle repeats a node");
    return out;
}

namespace named {

Graph complete(int n, Weight w) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j, w);
    return g;
}

Graph cycle(int n, Weight w) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, w);
    return g;
}

Graph path(int n, Weight w) {
    Graph g(n);
    for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, w);
    return g;
}

Graph complete_bipartite(int a, int b, Weight w) {
    Graph g(a + b);
    for (NodeId i = 0; i < a; ++i)
        for (NodeId j = 0; j < b; ++j) g.add_edge(i, a + j, w);
    return g;
}

Graph octahedron(Weight w) {
    Graph g(6);
    for (NodeId i = 0; i < 6; ++i)
        for (NodeId j = i + 1; j < 6; ++j)
            if (i / 2 != j / 2) g.add_edge(i, j, w);
    return g;
}

Graph k5_pair_without_shared_edge(Weight w) {
    Graph g(8);
    const std::vector<NodeId> left{0, 1, 2, 3, 4}, right{3, 4, 5, 6, 7};
    for (const auto* side : {&left, &right})
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j) {
                const NodeId a = (*side)[i], b = (*side)[j];
                if ((a == 3 && b == 4) || g.adjacent(a, b)) continue;
                g.add_edge(a, b, w);
            }
    return g;
}

}  // namespace named

}  // namespace k33cut
