#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "k33cut/generate.hpp"
#include "k33cut/graph.hpp"
#include "oracles.hpp"

using namespace k33cut;

namespace {

ParseErrorKind parse_kind(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error");
    return ParseErrorKind::Malformed;
}

Graph disjoint_k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

}  // namespace

TEST_CASE("parse single edge and triangle") {
    auto k2 = parse_graph("p cut 2 1\ne 1 2 5\n").graph;
    CHECK(k2.node_count() == 2);
    REQUIRE(k2.edge_count() == 1);
    CHECK(k2.edge(0).w == 5);

    auto k3 = parse_graph("c a comment\np cut 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 1\n").graph;
    CHECK(k3 == named::complete(3));
}

TEST_CASE("parse errors are distinct") {
    CHECK(parse_kind("p cut 2 1\ne 1 1 2\n") == ParseErrorKind::SelfLoop);
    CHECK(parse_kind("p cut 2 2\ne 1 2 1\ne 2 1 1\n") == ParseErrorKind::DuplicateEdge);
    CHECK(parse_kind("p cut 2 1\ne 1 3 1\n") == ParseErrorKind::NodeOutOfRange);
    CHECK(parse_kind("p cut 2 1\ne 1 two 1\n") == ParseErrorKind::Malformed);
    CHECK(parse_kind("e 1 2 1\n") == ParseErrorKind::Malformed);
    CHECK(parse_kind("p cut 2 2\ne 1 2 1\n") == ParseErrorKind::Malformed);
    CHECK(parse_kind("p cut 2 1\ne 1 2 2000000000000\n") == ParseErrorKind::WeightOutOfRange);
}

TEST_CASE("isolated nodes produce a warning") {
    auto parsed = parse_graph("p cut 3 1\ne 1 2 1\n");
    CHECK(parsed.warnings.size() == 1);
    std::vector<NodeId> kept;
    CHECK(drop_isolated_nodes(parsed.graph, &kept).node_count() == 2);
    CHECK(kept == std::vector<NodeId>{0, 1});
}

TEST_CASE("format round trip") {
    const auto g = gen_random_graph(7, 6, 9, -5, 5);
    CHECK(parse_graph(format_graph(g, {"x"})).graph == g);
}

TEST_CASE("blocks") {
    const auto p = blocks(named::path(3));
    CHECK(p.blocks.size() == 2);
    CHECK(p.cut_nodes == std::vector<NodeId>{1});
    CHECK(blocks(named::complete(4)).blocks.size() == 1);
    const auto d = blocks(disjoint_k2());
    CHECK(d.blocks.size() == 2);
    CHECK(d.cut_nodes.empty());

    for (std::uint64_t s = 1; s <= 30; ++s) {
        const auto g = gen_random_graph(s, 9, 11);
        const auto bd = blocks(g);
        std::size_t total = 0;
        std::set<EdgeIndex> seen;
        for (const auto& be : bd.block_edges) {
            total += be.size();
            seen.insert(be.begin(), be.end());
        }
        CHECK(total == static_cast<std::size_t>(g.edge_count()));
        CHECK(seen.size() == static_cast<std::size_t>(g.edge_count()));
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                std::vector<NodeId> common;
                std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(), bd.blocks[j].begin(), bd.blocks[j].end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
                for (NodeId v : common) CHECK(std::binary_search(bd.cut_nodes.begin(), bd.cut_nodes.end(), v));
            }
    }
}

TEST_CASE("k-connectivity") {
    CHECK(is_k_connected(named::cycle(4), 2));
    CHECK_FALSE(is_k_connected(named::cycle(4), 3));
    CHECK(is_k_connected(named::complete(5), 3));
    CHECK_FALSE(is_k_connected(named::path(3), 2));
    CHECK(is_k_connected(named::path(3), 1));
    CHECK_FALSE(is_k_connected(disjoint_k2(), 1));
    CHECK(is_k_connected(named::octahedron(), 3));
    CHECK(is_k_connected(named::complete_bipartite(3, 3), 3));
}

TEST_CASE("triangles and chordless cycles") {
    CHECK(triangles(named::complete(3)).size() == 1);
    CHECK(triangles(named::complete(4)).size() == 4);
    CHECK(triangles(named::cycle(4)).empty());

    const auto c5 = chordless_cycles(named::cycle(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].size() == 5);
    const auto k4 = chordless_cycles(named::complete(4));
    CHECK(k4.size() == 4);
    for (const auto& c : k4) CHECK(c.size() == 3);
    auto chorded = named::cycle(4);
    chorded.add_edge(0, 2);
    const auto ch = chordless_cycles(chorded);
    CHECK(ch.size() == 2);
    for (const auto& c : ch) CHECK(c.size() == 3);
    CHECK(chordless_cycles(named::octahedron()).size() == 11);
    CHECK(chordless_cycles(named::complete_bipartite(3, 3)).size() == 9);
    CHECK_THROWS_AS(chordless_cycles(named::complete(6), 5), GraphError);
}

TEST_CASE("chordless cycles match an induced-subgraph oracle") {
    for (std::uint64_t s = 1; s <= 25; ++s) {
        const auto g = gen_random_graph(s, 7, 12);
        std::set<std::vector<NodeId>> found;
        for (auto c : chordless_cycles(g)) {
            std::sort(c.begin(), c.end());
            CHECK(found.insert(c).second);
        }
        // node sets whose induced subgraph is a single cycle
        std::set<std::vector<NodeId>> expected;
        for (std::uint32_t mask = 0; mask < (1U << g.node_count()); ++mask) {
            std::vector<NodeId> nodes;
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (mask >> v & 1U) nodes.push_back(v);
            if (nodes.size() < 3) continue;
            const auto h = g.induced(nodes);
            if (h.edge_count() != h.node_count() || !oracle::connected(h)) continue;
            bool two_regular = true;
            for (NodeId v = 0; v < h.node_count(); ++v) two_regular = two_regular && h.degree(v) == 2;
            if (two_regular) expected.insert(nodes);
        }
        CHECK(found == expected);
    }
}

TEST_CASE("K5 subgraphs") {
    CHECK(k5_subgraphs(named::complete(5)).size() == 1);
    CHECK(k5_subgraphs(named::complete(6)).size() == 6);
    CHECK(k5_subgraphs(named::octahedron()).empty());
}

TEST_CASE("minor tests") {
    CHECK_FALSE(has_minor(named::complete(5), MinorKind::K33));
    CHECK(has_minor(named::complete(5), MinorKind::K5));
    CHECK(has_minor(named::cycle(4), MinorKind::C4));
    CHECK_FALSE(has_minor(named::complete(3), MinorKind::C4));
    CHECK_FALSE(has_minor(named::k5_pair_without_shared_edge(), MinorKind::K33));
    CHECK(has_minor(named::complete_bipartite(3, 3), MinorKind::K33));
    CHECK_FALSE(has_minor(named::complete_bipartite(3, 3), MinorKind::K5));
    CHECK(has_minor(named::complete(6), MinorKind::K33));
}

TEST_CASE("structural minor tests agree with exhaustive search") {
    for (std::uint64_t s = 1; s <= 60; ++s) {
        const int n = 5 + static_cast<int>(s % 4);
        const int m = std::min(n * (n - 1) / 2, n + static_cast<int>(s % 9) + 2);
        const auto g = gen_random_graph(s, n, m);
        for (auto h : {MinorKind::K5, MinorKind::K33, MinorKind::C4}) {
            INFO("seed " << s);
            CHECK(has_minor(g, h) == has_minor_exhaustive(g, h));
        }
    }
}

TEST_CASE("minor presence is monotone under edge addition") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const auto full = gen_random_graph(s, 7, 21);
        bool k5 = false, k33 = false, c4 = false;
        for (int m = 1; m <= full.edge_count(); ++m) {
            std::vector<EdgeIndex> keep(static_cast<std::size_t>(m));
            std::iota(keep.begin(), keep.end(), 0);
            const auto g = full.edge_subgraph(keep);
            const bool a = has_minor(g, MinorKind::K5), b = has_minor(g, MinorKind::K33), c = has_minor(g, MinorKind::C4);
            CHECK((!k5 || a));
            CHECK((!k33 || b));
            CHECK((!c4 || c));
            k5 = a;
            k33 = b;
            c4 = c;
        }
    }
}

TEST_CASE("ear decomposition") {
    CHECK(ear_decomposition(named::complete(3)).size() == 1);
    CHECK(ear_decomposition(named::cycle(5)).size() == 1);
    const auto k4 = ear_decomposition(named::complete(4));
    REQUIRE(k4.size() == 3);
    CHECK(k4[0].size() == 3);
    CHECK_THROWS_AS(ear_decomposition(named::path(3)), GraphError);

    for (std::uint64_t s = 1; s <= 40; ++s) {
        const auto g = gen_random_graph(s, 7, 11);
        const bool two = is_k_connected(g, 2);
        if (!two) {
            CHECK_THROWS_AS(ear_decomposition(g), GraphError);
            continue;
        }
        const auto ears = ear_decomposition(g);
        std::set<EdgeIndex> used;
        std::set<NodeId> seen;
        std::size_t edges = 0;
        for (std::size_t i = 0; i < ears.size(); ++i) {
            const auto& ear = ears[i];
            const std::size_t len = i == 0 ? ear.size() : ear.size() - 1;
            for (std::size_t k = 0; k < len; ++k) {
                const auto e = g.find_edge(ear[k], ear[(k + 1) % ear.size()]);
                REQUIRE(e);
                CHECK(used.insert(*e).second);
                ++edges;
            }
            if (i > 0) {
                CHECK(seen.count(ear.front()) == 1);
                CHECK(seen.count(ear.back()) == 1);
                for (std::size_t k = 1; k + 1 < ear.size(); ++k) CHECK(seen.count(ear[k]) == 0);
            }
            seen.insert(ear.begin(), ear.end());
        }
        CHECK(edges == static_cast<std::size_t>(g.edge_count()));
    }
}

TEST_CASE("cut enumeration") {
    const auto k3 = enumerate_cuts(named::complete(3));
    std::set<oracle::Vec> got;
    for (const auto& c : k3) got.insert(c.indicator);
    CHECK(got == std::set<oracle::Vec>{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(enumerate_cuts(named::complete(2)).size() == 2);
    CHECK(enumerate_cuts(disjoint_k2()).size() == 4);
    CHECK_THROWS_AS(enumerate_cuts(Graph(25)), GraphError);

    for (std::uint64_t s = 1; s <= 20; ++s) {
        const auto g = gen_random_graph(s, 8, 7 + static_cast<int>(s % 8));
        const auto cuts = enumerate_cuts(g);
        std::set<oracle::Vec> vecs;
        for (const auto& c : cuts) {
            vecs.insert(c.indicator);
            CHECK(c.side[0] == 0);
            CHECK(Cut::from_side(g, c.side) == c);
        }
        CHECK(vecs.size() == cuts.size());
        CHECK(vecs == oracle::cut_vectors(g));
        CHECK(cuts.size() == (std::size_t{1} << (g.node_count() - static_cast<int>(connected_components(g).size()))));
    }
}

TEST_CASE("cuts meet cycles evenly") {
    for (std::uint64_t s = 1; s <= 50; ++s) {
        const auto g = gen_random_graph(s, 7, 8 + static_cast<int>(s % 10));
        const auto cycles = chordless_cycles(g);
        for (const auto& c : enumerate_cuts(g))
            for (const auto& cyc : cycles) {
                int hits = 0;
                for (EdgeIndex e : cycle_edges(g, cyc)) hits += c.indicator[static_cast<std::size_t>(e)];
                CHECK(hits % 2 == 0);
            }
    }
}

TEST_CASE("cut normalization") {
    const auto g = named::cycle(4);
    const auto a = Cut::from_side(g, {1, 0, 0, 0});
    const auto b = Cut::from_side(g, {0, 1, 1, 1});
    CHECK(a == b);
    CHECK(a.side[0] == 0);
    CHECK(a.weight(g) == 2);
}
