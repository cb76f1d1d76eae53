#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "k33cut/generate.hpp"
#include "k33cut/planar.hpp"
#include "oracles.hpp"

using namespace k33cut;

namespace {

int faces_of_length(const std::vector<Face>& fs, std::size_t len) {
    return static_cast<int>(std::count_if(fs.begin(), fs.end(), [&](const Face& f) { return f.size() == len; }));
}

/// Indicator vectors of dual edge sets in which every dual node has even degree.
std::set<oracle::Vec> even_dual_sets(const DualGraph& d) {
    std::set<oracle::Vec> out;
    const std::size_t m = d.edges.size();
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(d.node_count), 0);
        oracle::Vec x(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1U) {
                x[i] = 1;
                deg[static_cast<std::size_t>(d.edges[i].a)] ^= 1;
                deg[static_cast<std::size_t>(d.edges[i].b)] ^= 1;
            }
        if (std::all_of(deg.begin(), deg.end(), [](int v) { return v == 0; })) out.insert(x);
    }
    return out;
}

}  // namespace

TEST_CASE("embedding examples") {
    const auto k4 = planar_embed(named::complete(4));
    REQUIRE(k4);
    CHECK(k4->face_count == 4);
    CHECK_FALSE(planar_embed(named::complete(5)));
    CHECK_FALSE(planar_embed(named::complete_bipartite(3, 3)));
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_THROWS_AS(planar_embed(two), GraphError);
}

TEST_CASE("faces") {
    const auto c4 = faces(*planar_embed(named::cycle(4)));
    CHECK(c4.size() == 2);
    CHECK(faces_of_length(c4, 4) == 2);
    const auto k4 = faces(*planar_embed(named::complete(4)));
    CHECK(k4.size() == 4);
    CHECK(faces_of_length(k4, 3) == 4);
    const auto k2 = faces(*planar_embed(named::complete(2)));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].size() == 2);
}

TEST_CASE("dual graphs") {
    const auto c4 = dual_graph(*planar_embed(named::cycle(4)));
    CHECK(c4.node_count == 2);
    CHECK(c4.edges.size() == 4);
    for (const auto& e : c4.edges) CHECK(e.a != e.b);

    const auto k4 = dual_graph(*planar_embed(named::complete(4)));
    CHECK(k4.node_count == 4);
    Graph simple(k4.node_count);
    for (const auto& e : k4.edges) simple.add_edge(std::min(e.a, e.b), std::max(e.a, e.b));
    CHECK(simple.edge_count() == 6);

    const auto k2 = dual_graph(*planar_embed(named::complete(2)));
    CHECK(k2.node_count == 1);
    REQUIRE(k2.edges.size() == 1);
    CHECK(k2.edges[0].a == k2.edges[0].b);
}

TEST_CASE("Euler formula, dart coverage and dual degrees on random planar graphs") {
    for (std::uint64_t s = 1; s <= 60; ++s) {
        const auto g = gen_planar_2connected(s, 3, 14, 1, 1);
        const auto emb = planar_embed(g);
        REQUIRE(emb);
        const auto fs = faces(*emb);
        CHECK(g.node_count() - g.edge_count() + static_cast<int>(fs.size()) == 2);
        CHECK(emb->face_count == static_cast<int>(fs.size()));
        std::set<std::pair<NodeId, EdgeIndex>> darts;
        for (const auto& f : fs)
            for (const auto& d : f) CHECK(darts.insert({d.from, d.edge}).second);
        CHECK(darts.size() == 2 * static_cast<std::size_t>(g.edge_count()));
        const auto d = dual_graph(*emb);
        CHECK(d.edges.size() == static_cast<std::size_t>(g.edge_count()));
        std::vector<int> deg(static_cast<std::size_t>(d.node_count), 0);
        for (const auto& e : d.edges) {
            ++deg[static_cast<std::size_t>(e.a)];
            ++deg[static_cast<std::size_t>(e.b)];
        }
        CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.edge_count());
    }
}

TEST_CASE("primal cuts are exactly the even dual edge sets") {
    for (std::uint64_t s = 1; s <= 40; ++s) {
        const auto g = gen_planar_2connected(s, 3, 9, 1, 1);
        if (g.edge_count() > 16) continue;
        const auto d = dual_graph(*planar_embed(g));
        INFO("seed " << s);
        CHECK(oracle::cut_vectors(g) == even_dual_sets(d));
    }
}

TEST_CASE("planarity agrees with exhaustive minor search") {
    for (std::uint64_t s = 1; s <= 80; ++s) {
        const int n = 5 + static_cast<int>(s % 5);
        const int m = std::min(n * (n - 1) / 2, 2 * n + static_cast<int>(s % 5) - 1);
        const auto g = gen_random_graph(s, n, m);
        if (!is_connected(g)) continue;
        const bool kuratowski = has_minor_exhaustive(g, MinorKind::K5) || has_minor_exhaustive(g, MinorKind::K33);
        INFO("seed " << s);
        CHECK(planar_embed(g).has_value() == !kuratowski);
    }
}

TEST_CASE("rotation output is deterministic") {
    const auto g = named::octahedron();
    CHECK(format_rotation(*planar_embed(g)) == format_rotation(*planar_embed(g)));
}
