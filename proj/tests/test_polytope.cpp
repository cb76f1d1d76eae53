#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "k33cut/generate.hpp"
#include "k33cut/maxcut.hpp"
#include "k33cut/polytope.hpp"
#include "k33cut/rng.hpp"
#include "k33cut/spqr.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace k33cut;

namespace {

std::vector<Coeff> coeffs_of(const Graph& g, const std::vector<std::pair<std::pair<NodeId, NodeId>, Coeff>>& terms) {
    std::vector<Coeff> c(static_cast<std::size_t>(g.edge_count()), 0);
    for (auto [e, v] : terms) c[static_cast<std::size_t>(*g.find_edge(e.first, e.second))] = v;
    return c;
}

bool facet_by_oracle(const Graph& g, const LinearInequality& q) { return oracle::is_facet(g, q.coeffs, q.rhs); }

LinearInequality swap_sides(const Graph& g, const LinearInequality& q) {
    // automorphism exchanging v_i and w_i, fixing u1 and u2
    const std::vector<NodeId> perm{5, 6, 7, 3, 4, 0, 1, 2};
    std::vector<Coeff> c(q.coeffs.size(), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const EdgeIndex f = *g.find_edge(perm[static_cast<std::size_t>(ed.u)], perm[static_cast<std::size_t>(ed.v)]);
        c[static_cast<std::size_t>(f)] = q.coeffs[static_cast<std::size_t>(e)];
    }
    return LinearInequality::make(c, q.rhs);
}

Graph two_triangles() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    return g;
}

}  // namespace

TEST_CASE("canonical form") {
    const auto q = LinearInequality::make({2, -4, 0}, 6);
    CHECK(q.coeffs == std::vector<Coeff>{1, -2, 0});
    CHECK(q.rhs == 3);
    CHECK(LinearInequality::make({-3}, 0).coeffs == std::vector<Coeff>{-1});
    CHECK_THROWS_AS(LinearInequality::make({0, 0}, 1), GraphError);
    InequalitySystem sys(3);
    CHECK(sys.add(q));
    CHECK_FALSE(sys.add(LinearInequality::make({3, -6, 0}, 9)));
    CHECK(sys.size() == 1);
}

TEST_CASE("metric inequalities") {
    const auto k3 = named::complete(3);
    const auto m = metric_inequalities(k3, 0, 1, 2);
    CHECK(m.size() == 4);
    InequalitySystem sys(3);
    for (const auto& q : m) sys.add(q);
    CHECK(sys == brute_hull(enumerate_cuts(k3), 3).facets);

    const auto k4 = named::complete(4);
    InequalitySystem all(6);
    for (const auto& t : triangles(k4)) {
        const auto e = cycle_edges(k4, t);
        for (const auto& q : metric_inequalities(k4, e[0], e[1], e[2])) all.add(q);
    }
    CHECK(all.size() == 16);
    CHECK_THROWS_AS(metric_inequalities(k3, 0, 0, 1), GraphError);
    CHECK_THROWS_AS(metric_inequalities(named::cycle(4), 0, 1, 2), GraphError);
}

TEST_CASE("edge inequalities") {
    const auto c4 = named::cycle(4);
    for (EdgeIndex e = 0; e < 4; ++e) CHECK(edge_inequalities(c4, e).size() == 2);
    CHECK(edge_inequalities(named::complete(3), 0).empty());
    const auto k2 = named::complete(2);
    const auto q = edge_inequalities(k2, 0);
    REQUIRE(q.size() == 2);
    InequalitySystem sys(1);
    for (const auto& x : q) sys.add(x);
    CHECK(sys == brute_hull(enumerate_cuts(k2), 1).facets);
}

TEST_CASE("cycle inequalities") {
    const auto k3 = named::complete(3);
    const auto sum = cycle_inequality(k3, {0, 1, 2}, {0, 1, 2});
    CHECK(sum.coeffs == std::vector<Coeff>{1, 1, 1});
    CHECK(sum.rhs == 2);

    const auto c4 = named::cycle(4);
    const auto edges = cycle_edges(c4, {0, 1, 2, 3});
    const auto one = cycle_inequality(c4, edges, {edges[0]});
    std::vector<Coeff> expect(4, -1);
    expect[static_cast<std::size_t>(edges[0])] = 1;
    CHECK(one.coeffs == expect);
    CHECK(one.rhs == 0);
    CHECK(cycle_inequalities(c4, {0, 1, 2, 3}).size() == 8);
    CHECK_THROWS_AS(cycle_inequality(c4, edges, {edges[0], edges[1]}), GraphError);
    auto chorded = named::cycle(4);
    const EdgeIndex chord = chorded.add_edge(0, 2);
    CHECK_THROWS_AS(cycle_inequality(chorded, {0, 1, 2}, {chord}), GraphError);
}

TEST_CASE("cycle inequalities are facets exactly for chordless cycles") {
    auto g = named::cycle(5);
    g.add_edge(0, 2);
    const auto outer = cycle_edges(g, {0, 1, 2, 3, 4});
    for (const auto& q : cycle_inequalities(g, {0, 1, 2, 3, 4})) {
        CHECK(is_valid(g, q));
        CHECK_FALSE(is_facet(g, q));
    }
    for (const auto& q : cycle_inequalities(g, {0, 2, 3, 4})) CHECK(is_facet(g, q));
    (void)outer;
}

TEST_CASE("hypermetric inequality") {
    const auto k5 = named::complete(5);
    const auto h = hypermetric_k5(k5, {0, 1, 2, 3, 4});
    CHECK(h.rhs == 6);
    CHECK(std::count(h.coeffs.begin(), h.coeffs.end(), 1) == 10);
    CHECK_THROWS_AS(hypermetric_k5(named::k5_pair_without_shared_edge(), {0, 1, 2, 3, 4}), GraphError);
    const auto k6 = named::complete(6);
    for (const auto& five : k5_subgraphs(k6)) CHECK(hypermetric_k5(k6, five).rhs == 6);
    CHECK(is_facet(k5, h));
}

TEST_CASE("switching examples") {
    const auto k3 = named::complete(3);
    // edges: 0 = {0,1}, 1 = {0,2}, 2 = {1,2}; node 2 touches edges 1 and 2
    const auto sum = cycle_inequality(k3, {0, 1, 2}, {0, 1, 2});
    const auto sw = switching(sum, Cut::from_side(k3, {0, 0, 1}));
    CHECK(sw.coeffs == std::vector<Coeff>{1, -1, -1});
    CHECK(sw.rhs == 0);
    CHECK(switching(sum, Cut::from_side(k3, {0, 0, 0})) == sum);

    const auto k5 = named::complete(5);
    const auto h = hypermetric_k5(k5, {0, 1, 2, 3, 4});
    std::set<LinearInequality> all;
    for (const auto& c : enumerate_cuts(k5)) all.insert(switching(h, c));
    CHECK(all.size() == 16);
}

TEST_CASE("switching is an involution and preserves facets") {
    Rng rng(4);
    const std::vector<Graph> graphs{named::complete(5), named::octahedron(), two_triangles(), named::cycle(5),
                                    named::k5_pair_without_shared_edge()};
    for (const auto& g : graphs) {
        const auto sys = facet_description(g);
        const auto cuts = enumerate_cuts(g);
        for (int k = 0; k < 40; ++k) {
            const auto& q = sys.items()[rng.below(sys.size())];
            const auto& w = cuts[rng.below(cuts.size())];
            const auto s = switching(q, w);
            CHECK(switching(s, w) == q);
            CHECK(is_facet(cuts, g.edge_count(), s));
            CHECK(sys.contains(s));
        }
    }
}

TEST_CASE("every facet has a homogeneous switching") {
    for (const auto& g : {named::complete(5), named::complete(4), two_triangles()}) {
        const auto cuts = enumerate_cuts(g);
        for (const auto& q : facet_description(g)) {
            bool found = false;
            for (const auto& c : cuts)
                if (q.lhs(c.indicator) == q.rhs) {
                    const auto h = switching(q, c);
                    CHECK(h.rhs == 0);
                    CHECK(is_facet(cuts, g.edge_count(), h));
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("validity and facet checks") {
    const auto k3 = named::complete(3);
    const auto up = LinearInequality::make({1, 0, 0}, 1);
    CHECK(is_valid(k3, up));
    CHECK_FALSE(is_facet(k3, up));
    const auto k5 = named::complete(5);
    CHECK_FALSE(is_valid(k5, LinearInequality::make(std::vector<Coeff>(10, 1), 5)));
    CHECK_THROWS_AS(is_facet(named::path(23), LinearInequality::make(std::vector<Coeff>(22, 1), 30)), GraphError);
}

TEST_CASE("facet checks agree with a definition-level oracle") {
    Rng rng(8);
    for (std::uint64_t s = 1; s <= 30; ++s) {
        const auto g = gen_random_graph(s, 6, 7 + static_cast<int>(s % 6));
        const auto cuts = enumerate_cuts(g);
        for (int k = 0; k < 20; ++k) {
            std::vector<Coeff> c(static_cast<std::size_t>(g.edge_count()));
            for (auto& x : c) x = rng.range(-1, 1);
            if (std::all_of(c.begin(), c.end(), [](Coeff x) { return x == 0; })) continue;
            Coeff best = 0;
            for (const auto& cut : cuts) {
                Coeff v = 0;
                for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * cut.indicator[i];
                best = std::max(best, v);
            }
            const auto q = LinearInequality::make(c, best);
            CHECK(is_facet(g, q) == facet_by_oracle(g, q));
        }
    }
}

TEST_CASE("dimension equals edge count") {
    CHECK(polytope_dim(named::complete(3)) == 3);
    CHECK(polytope_dim(named::complete(4)) == 6);
    CHECK(polytope_dim(named::complete(2)) == 1);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        const auto g = gen_random_graph(s, 8, 6 + static_cast<int>(s % 20));
        CHECK(polytope_dim(g) == g.edge_count());
    }
    // wide enough to take the exact-rational path
    CHECK(polytope_dim(named::complete(8)) == 28);
}

TEST_CASE("affine rank paths agree") {
    Rng rng(12);
    for (int round = 0; round < 20; ++round) {
        // modular below 63 columns, exact rationals above
        const bool wide = round % 2 == 1;
        const int dim = wide ? 63 + static_cast<int>(rng.below(8)) : 20 + static_cast<int>(rng.below(20));
        std::vector<std::vector<std::uint8_t>> pts(static_cast<std::size_t>(wide ? 6 + rng.below(6) : 10 + rng.below(30)));
        for (auto& p : pts) {
            p.resize(static_cast<std::size_t>(dim));
            for (auto& x : p) x = static_cast<std::uint8_t>(rng.below(2));
        }
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            std::vector<std::int64_t> r;
            for (int k = 0; k < dim; ++k) r.push_back(pts[i][static_cast<std::size_t>(k)] - pts[0][static_cast<std::size_t>(k)]);
            rows.push_back(r);
        }
        CHECK(affine_rank(pts, dim) == oracle::rank(rows));
    }
}

TEST_CASE("facet descriptions match the hull") {
    auto c4_chord = named::cycle(4);
    c4_chord.add_edge(0, 2);
    const std::vector<std::pair<const char*, Graph>> cases{
        {"K5", named::complete(5)}, {"K4", named::complete(4)}, {"C4", named::cycle(4)}, {"C5", named::cycle(5)},
        {"octahedron", named::octahedron()}, {"two triangles", two_triangles()}, {"K33", named::complete_bipartite(3, 3)},
    };
    for (const auto& [name, g] : cases) {
        INFO(name);
        const auto fd = facet_description(g);
        CHECK(fd == brute_hull(enumerate_cuts(g), g.edge_count()).facets);
    }
    CHECK(facet_description(named::complete(5)).size() == 56);
    CHECK(facet_description(named::octahedron()).size() == 56);
    CHECK(maximal_system(named::octahedron()) == edge_cycle_system(named::octahedron()));
}

TEST_CASE("facet description rejects graphs with both minors") {
    CHECK_THROWS_AS(facet_description(named::complete(6)), UnsupportedGraph);
}

TEST_CASE("facets of disconnected and 1-connected graphs") {
    for (std::uint64_t s = 1; s <= 15; ++s) {
        const auto g = gen_random_graph(s, 7, 6 + static_cast<int>(s % 6));
        if (has_minor(g, MinorKind::K5) && has_minor(g, MinorKind::K33)) continue;
        const auto cuts = enumerate_cuts(g);
        if (g.edge_count() > 12 || cuts.size() > 64) continue;
        CHECK(facet_description(g) == brute_hull(cuts, g.edge_count()).facets);
    }
}

TEST_CASE("worked projection example") {
    const auto g = named::k5_pair_without_shared_edge();
    const NodeId v1 = 0, u1 = 3, u2 = 4, w1 = 5;
    const std::vector<NodeId> vs{0, 1, 2, 3, 4}, ws{3, 4, 5, 6, 7};
    const auto c = maximal_completion(g);
    const Graph& h = c.graph;
    REQUIRE(c.added.size() == 1);
    const EdgeIndex x = c.added[0];

    auto on = [&](const std::vector<std::pair<std::pair<NodeId, NodeId>, Coeff>>& t, Coeff rhs) {
        return std::make_pair(coeffs_of(h, t), rhs);
    };
    const auto f1 = on({{{u1, u2}, 1}, {{u2, v1}, 1}, {{u1, v1}, 1}}, 2);
    std::vector<std::pair<std::pair<NodeId, NodeId>, Coeff>> all_v, sw_w;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            all_v.push_back({{vs[i], vs[j]}, 1});
            const bool touches = ws[i] == u2 || ws[j] == u2;
            sw_w.push_back({{ws[i], ws[j]}, touches ? -1 : 1});
        }
    const auto f2 = on(all_v, 6);
    const auto f3 = on({{{u1, u2}, -1}, {{u2, w1}, -1}, {{u1, w1}, 1}}, 0);
    const auto f4 = on(sw_w, 2);

    auto add = [&](const auto& a, const auto& b) {
        std::vector<Coeff> s(a.first.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.first[k] + b.first[k];
        CHECK(s[static_cast<std::size_t>(x)] == 0);
        s.erase(s.begin() + x);
        return LinearInequality::make(s, a.second + b.second);
    };
    const auto s13 = add(f1, f3), s14 = add(f1, f4), s23 = add(f2, f3), s24 = add(f2, f4);
    CHECK(s13.rhs == 2);
    CHECK(s14.rhs == 4);
    CHECK(s23.rhs == 6);
    CHECK(s24.rhs == 8);

    const auto cyc = cycle_edges(g, {u1, v1, u2, w1});
    CHECK(s13 == cycle_inequality(g, cyc, {*g.find_edge(u2, v1), *g.find_edge(u1, v1), *g.find_edge(u1, w1)}));
    std::vector<std::uint8_t> side(8, 0);
    side[static_cast<std::size_t>(u2)] = 1;
    CHECK(switching(s14, Cut::from_side(g, side)) == swap_sides(g, s23));
    CHECK(switching(s14, Cut::from_side(g, side)) != s23);

    for (const auto& q : {s13, s14, s23, s24}) {
        CHECK(facet_by_oracle(g, q));
        CHECK(is_facet(g, q));
    }
    CHECK(std::count(s24.coeffs.begin(), s24.coeffs.end(), 0) == 0);

    const auto fd = facet_description(g);
    for (const auto& q : {s13, s14, s23, s24}) CHECK(fd.contains(q));
    const auto projected = fourier_motzkin_project(maximal_system(h), x, enumerate_cuts(g));
    CHECK(projected == fd);
    for (const auto& q : fd) CHECK(facet_by_oracle(g, q));
}

TEST_CASE("eliminating an unused coordinate keeps the system") {
    const auto k4 = named::complete(4);
    Graph wide(5);
    for (const auto& e : k4.edges()) wide.add_edge(e.u, e.v);
    wide.add_edge(3, 4);
    const auto sys = facet_description(k4);
    InequalitySystem lifted(7);
    for (const auto& q : sys) {
        auto c = q.coeffs;
        c.push_back(0);
        lifted.add(LinearInequality::make(c, q.rhs));
    }
    CHECK(fourier_motzkin_project(lifted, 6, enumerate_cuts(k4)) == sys);
}

TEST_CASE("coefficients are 0 or +-1 and supports have the expected shape") {
    for (std::uint64_t s = 1; s <= 25; ++s) {
        GeneratorSpec spec;
        spec.seed = s;
        spec.components = s % 3 == 0 ? std::vector<ComponentKind>{ComponentKind::K5, ComponentKind::K5}
                                     : std::vector<ComponentKind>{ComponentKind::K5, ComponentKind::Triangulation};
        spec.triangulation_max_nodes = 5;
        spec.strict = s % 2 == 0;
        spec.deletion_percent = s % 4 == 0 ? 15 : 0;
        const auto g = gen_k33free(spec);
        INFO("seed " << s);
        for (const auto& q : facet_description(g)) {
            for (Coeff a : q.coeffs) CHECK(std::abs(a) <= 1);
            std::vector<EdgeIndex> support;
            for (std::size_t k = 0; k < q.coeffs.size(); ++k)
                if (q.coeffs[k] != 0) support.push_back(static_cast<EdgeIndex>(k));
            CHECK(support_shape_ok(g.edge_subgraph(support)));
        }
    }
}

TEST_CASE("strict 3-sum of two K4 copies composes by identification") {
    // K5 minus edge {3,4}: two K4 on {0,1,2,3} and {0,1,2,4} glued on triangle 012
    Graph g(5);
    for (NodeId a = 0; a < 5; ++a)
        for (NodeId b = a + 1; b < 5; ++b)
            if (!(a == 3 && b == 4)) g.add_edge(a, b);
    InequalitySystem composed(g.edge_count());
    for (const std::vector<NodeId>& part : {std::vector<NodeId>{0, 1, 2, 3}, std::vector<NodeId>{0, 1, 2, 4}}) {
        std::vector<EdgeIndex> emap;
        const auto local = g.induced(part, &emap);
        for (const auto& q : facet_description(local)) {
            std::vector<Coeff> c(static_cast<std::size_t>(g.edge_count()), 0);
            for (std::size_t k = 0; k < emap.size(); ++k) c[static_cast<std::size_t>(emap[k])] = q.coeffs[k];
            composed.add(LinearInequality::make(c, q.rhs));
        }
    }
    CHECK(composed == brute_hull(enumerate_cuts(g), g.edge_count()).facets);
    CHECK(composed == facet_description(g));
}

TEST_CASE("ridge filtering does not change a projection") {
    for (std::uint64_t s = 1; s <= 12; ++s) {
        GeneratorSpec spec;
        spec.seed = s;
        spec.components = {ComponentKind::K5, s % 2 ? ComponentKind::K5 : ComponentKind::Triangulation};
        spec.triangulation_max_nodes = 5;
        spec.strict = false;
        const auto g = gen_k33free(spec);
        const auto c = maximal_completion(g);
        if (c.added.empty()) continue;
        std::vector<EdgeIndex> keep;
        for (EdgeIndex e = 0; e < c.graph.edge_count(); ++e)
            if (e != c.added.back()) keep.push_back(e);
        const auto lifted = enumerate_cuts(c.graph);
        const auto projected = enumerate_cuts(c.graph.edge_subgraph(keep));
        const auto sys = maximal_system(c.graph);
        CHECK(fourier_motzkin_project(sys, c.added.back(), projected, &lifted) ==
              fourier_motzkin_project(sys, c.added.back(), projected));
    }
}
