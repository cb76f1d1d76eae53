#include "k33cut/planar.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

namespace k33cut {

namespace {

using Cycle = std::vector<NodeId>;

struct Fragment {
    std::vector<NodeId> attachments;  // sorted
    std::vector<NodeId> path;         // attachment ... attachment
};

std::vector<Fragment> fragments(const Graph& g, const std::vector<char>& in_h, const std::vector<char>& edge_in_h) {
    std::vector<Fragment> out;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (!edge_in_h[static_cast<std::size_t>(e)] && in_h[static_cast<std::size_t>(ed.u)] &&
            in_h[static_cast<std::size_t>(ed.v)])
            out.push_back({{ed.u, ed.v}, {ed.u, ed.v}});
    }
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<int> comp(n, -1);
    int next = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (in_h[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<NodeId> members{s};
        comp[static_cast<std::size_t>(s)] = next;
        std::vector<NodeId> att;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (const auto& inc : g.incident(members[i])) {
                const NodeId y = inc.neighbor;
                if (in_h[static_cast<std::size_t>(y)]) {
                    att.push_back(y);
                } else if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = next;
                    members.push_back(y);
                }
            }
        std::sort(att.begin(), att.end());
        att.erase(std::unique(att.begin(), att.end()), att.end());
        if (att.size() < 2) throw GraphError("fragment with fewer than two attachments");
        // path from att[0] through the component to another attachment
        const NodeId a = att[0];
        std::vector<NodeId> prev(n, -1);
        std::deque<NodeId> q;
        for (const auto& inc : g.incident(a))
            if (comp[static_cast<std::size_t>(inc.neighbor)] == next && prev[static_cast<std::size_t>(inc.neighbor)] < 0) {
                prev[static_cast<std::size_t>(inc.neighbor)] = a;
                q.push_back(inc.neighbor);
            }
        NodeId hit = -1, hit_from = -1;
        while (!q.empty() && hit < 0) {
            const NodeId x = q.front();
            q.pop_front();
            for (const auto& inc : g.incident(x)) {
                const NodeId y = inc.neighbor;
                if (in_h[static_cast<std::size_t>(y)]) {
                    if (y != a) { hit = y; hit_from = x; break; }
                } else if (prev[static_cast<std::size_t>(y)] < 0) {
                    prev[static_cast<std::size_t>(y)] = x;
                    q.push_back(y);
                }
            }
        }
        std::vector<NodeId> path{hit};
        for (NodeId x = hit_from; x != a; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        out.push_back({std::move(att), std::move(path)});
        ++next;
    }
    return out;
}

bool face_contains_all(const Cycle& face, const std::vector<NodeId>& nodes) {
    for (NodeId v : nodes)
        if (std::find(face.begin(), face.end(), v) == face.end()) return false;
    return true;
}

/// Faces (oriented node cycles) of a 2-connected graph on >= 3 nodes, or nullopt.
std::optional<std::vector<Cycle>> embed_biconnected(const Graph& g) {
    const auto ears = ear_decomposition(g);
    const Cycle& first = ears.front();
    std::vector<Cycle> face_list{first, Cycle(first.rbegin(), first.rend())};
    std::vector<char> in_h(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<char> edge_in_h(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < first.size(); ++i) {
        in_h[static_cast<std::size_t>(first[i])] = 1;
        edge_in_h[static_cast<std::size_t>(*g.find_edge(first[i], first[(i + 1) % first.size()]))] = 1;
    }
    while (true) {
        const auto frags = fragments(g, in_h, edge_in_h);
        if (frags.empty()) break;
        std::size_t chosen = frags.size();
        std::size_t chosen_face = 0;
        for (std::size_t k = 0; k < frags.size(); ++k) {
            std::vector<std::size_t> admissible;
            for (std::size_t f = 0; f < face_list.size(); ++f)
                if (face_contains_all(face_list[f], frags[k].attachments)) admissible.push_back(f);
            if (admissible.empty()) return std::nullopt;
            if (admissible.size() == 1) {
                chosen = k;
                chosen_face = admissible[0];
                break;
            }
            if (chosen == frags.size()) {
                chosen = k;
                chosen_face = admissible[0];
            }
        }
        const auto& path = frags[chosen].path;
        const Cycle face = face_list[chosen_face];
        const auto k = face.size();
        const auto i = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.front()) - face.begin());
        const auto j = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.back()) - face.begin());
        Cycle a, b;
        for (std::size_t t = i;; t = (t + 1) % k) {
            a.push_back(face[t]);
            if (t == j) break;
        }
        for (std::size_t t = path.size() - 2; t >= 1; --t) a.push_back(path[t]);
        for (std::size_t t = j;; t = (t + 1) % k) {
            b.push_back(face[t]);
            if (t == i) break;
        }
        for (std::size_t t = 1; t + 1 < path.size(); ++t) b.push_back(path[t]);
        face_list[chosen_face] = std::move(a);
        face_list.push_back(std::move(b));
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            in_h[static_cast<std::size_t>(path[t])] = in_h[static_cast<std::size_t>(path[t + 1])] = 1;
            edge_in_h[static_cast<std::size_t>(*g.find_edge(path[t], path[t + 1]))] = 1;
        }
    }
    return face_list;
}

}  // namespace

std::optional<Embedding> planar_embed(const Graph& g) {
    if (!is_connected(g)) throw GraphError("planar_embed requires a connected graph");
    Embedding emb;
    emb.node_count = g.node_count();
    emb.edges = g.edges();
    emb.rotation.assign(static_cast<std::size_t>(g.node_count()), {});
    const auto bd = blocks(g);
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const auto& bedges = bd.block_edges[bi];
        if (bedges.size() == 1) {
            const auto& ed = g.edge(bedges[0]);
            emb.rotation[static_cast<std::size_t>(ed.u)].push_back(bedges[0]);
            emb.rotation[static_cast<std::size_t>(ed.v)].push_back(bedges[0]);
            continue;
        }
        std::vector<EdgeIndex> emap;
        const Graph block = g.induced(bd.blocks[bi], &emap);
        // edge-only restriction of the induced graph is the block itself
        const auto block_faces = embed_biconnected(block);
        if (!block_faces) return std::nullopt;
        // succ at v: edge (v,u) -> edge (v,w) for consecutive u,v,w of a face
        std::map<std::pair<NodeId, EdgeIndex>, EdgeIndex> succ;
        for (const auto& f : *block_faces)
            for (std::size_t t = 0; t < f.size(); ++t) {
                const NodeId u = f[t], v = f[(t + 1) % f.size()], w = f[(t + 2) % f.size()];
                succ[{v, *block.find_edge(v, u)}] = *block.find_edge(v, w);
            }
        for (NodeId lv = 0; lv < block.node_count(); ++lv) {
            const auto& inc = block.incident(lv);
            EdgeIndex start = inc.front().edge;
            for (const auto& x : inc) start = std::min(start, x.edge);
            auto& rot = emb.rotation[static_cast<std::size_t>(bd.blocks[bi][static_cast<std::size_t>(lv)])];
            EdgeIndex cur = start;
            do {
                rot.push_back(emap[static_cast<std::size_t>(cur)]);
                cur = succ.at({lv, cur});
            } while (cur != start);
        }
    }
    emb.face_count = static_cast<int>(faces(emb).size());
    return emb;
}

std::vector<Face> faces(const Embedding& e) {
    const auto m = e.edges.size();
    std::vector<Face> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    // position of each edge in the rotation of each endpoint
    std::vector<std::array<std::size_t, 2>> pos(m);
    for (NodeId v = 0; v < e.node_count; ++v) {
        const auto& rot = e.rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const auto& ed = e.edges[static_cast<std::size_t>(rot[i])];
            pos[static_cast<std::size_t>(rot[i])][ed.u == v ? 0 : 1] = i;
        }
    }
    auto other = [&](EdgeIndex edge, NodeId from) {
        const auto& ed = e.edges[static_cast<std::size_t>(edge)];
        return ed.u == from ? ed.v : ed.u;
    };
    std::vector<Dart> darts;
    for (EdgeIndex i = 0; i < static_cast<EdgeIndex>(m); ++i) {
        darts.push_back({e.edges[static_cast<std::size_t>(i)].u, i});
        darts.push_back({e.edges[static_cast<std::size_t>(i)].v, i});
    }
    std::sort(darts.begin(), darts.end(), [&](const Dart& a, const Dart& b) {
        const auto ka = std::make_pair(a.from, other(a.edge, a.from));
        const auto kb = std::make_pair(b.from, other(b.edge, b.from));
        return ka < kb;
    });
    std::vector<std::array<char, 2>> used(m, {0, 0});
    auto slot = [&](const Dart& d) { return e.edges[static_cast<std::size_t>(d.edge)].u == d.from ? 0 : 1; };
    for (const auto& start : darts) {
        if (used[static_cast<std::size_t>(start.edge)][static_cast<std::size_t>(slot(start))]) continue;
        Face f;
        Dart d = start;
        while (!used[static_cast<std::size_t>(d.edge)][static_cast<std::size_t>(slot(d))]) {
            used[static_cast<std::size_t>(d.edge)][static_cast<std::size_t>(slot(d))] = 1;
            f.push_back(d);
            const NodeId v = other(d.edge, d.from);
            const auto& rot = e.rotation[static_cast<std::size_t>(v)];
            const auto& ed = e.edges[static_cast<std::size_t>(d.edge)];
            const std::size_t i = pos[static_cast<std::size_t>(d.edge)][ed.u == v ? 0 : 1];
            d = {v, rot[(i + 1) % rot.size()]};
        }
        out.push_back(std::move(f));
    }
    return out;
}

DualGraph dual_graph(const Embedding& e) {
    const auto fs = faces(e);
    DualGraph d;
    d.node_count = static_cast<int>(fs.size());
    std::vector<std::array<int, 2>> side(e.edges.size(), {-1, -1});
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (const auto& dart : fs[f]) {
            const auto& ed = e.edges[static_cast<std::size_t>(dart.edge)];
            side[static_cast<std::size_t>(dart.edge)][ed.u == dart.from ? 0 : 1] = static_cast<int>(f);
        }
    for (std::size_t i = 0; i < e.edges.size(); ++i)
        d.edges.push_back({side[i][0], side[i][1], static_cast<EdgeIndex>(i), e.edges[i].w});
    return d;
}

std::string format_rotation(const Embedding& e) {
    std::ostringstream os;
    for (NodeId v = 0; v < e.node_count; ++v) {
        os << v + 1 << ':';
        for (EdgeIndex x : e.rotation[static_cast<std::size_t>(v)]) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

}  // namespace k33cut
