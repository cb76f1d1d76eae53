#include "k33cut/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "k33cut/maxcut.hpp"
#include "k33cut/spqr.hpp"

namespace k33cut {

LinearInequality LinearInequality::make(std::vector<Coeff> coeffs, Coeff rhs) {
    Coeff g = 0;
    for (Coeff c : coeffs) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw GraphError("inequality with all coefficients zero");
    g = std::gcd(g, rhs < 0 ? -rhs : rhs);
    for (auto& c : coeffs) c /= g;
    return {std::move(coeffs), rhs / g};
}

Coeff LinearInequality::lhs(const std::vector<std::uint8_t>& x) const {
    Coeff s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (x[i]) s += coeffs[i];
    return s;
}

std::string format_inequality(const LinearInequality& q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) os << q.coeffs[i] << ' ';
    os << "<= " << q.rhs;
    return os.str();
}

bool InequalitySystem::add(const LinearInequality& q) {
    if (static_cast<int>(q.coeffs.size()) != dim_) throw GraphError("inequality dimension mismatch");
    const auto it = std::lower_bound(items_.begin(), items_.end(), q);
    if (it != items_.end() && *it == q) return false;
    items_.insert(it, q);
    return true;
}

void InequalitySystem::add_all(const InequalitySystem& other) {
    for (const auto& q : other) add(q);
}

bool InequalitySystem::contains(const LinearInequality& q) const {
    return std::binary_search(items_.begin(), items_.end(), q);
}

namespace {

std::vector<Coeff> zeros(const Graph& g) { return std::vector<Coeff>(static_cast<std::size_t>(g.edge_count()), 0); }

void check_edge(const Graph& g, EdgeIndex e) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("edge index out of range");
}

}  // namespace

std::vector<LinearInequality> metric_inequalities(const Graph& g, EdgeIndex e, EdgeIndex f, EdgeIndex h) {
    for (EdgeIndex x : {e, f, h}) check_edge(g, x);
    if (e == f || f == h || e == h) throw GraphError("metric inequalities need three distinct edges");
    std::vector<NodeId> ends;
    for (EdgeIndex x : {e, f, h}) {
        ends.push_back(g.edge(x).u);
        ends.push_back(g.edge(x).v);
    }
    std::sort(ends.begin(), ends.end());
    if (std::unique(ends.begin(), ends.end()) - ends.begin() != 3) throw GraphError("edges do not form a triangle");
    std::vector<LinearInequality> out;
    const EdgeIndex t[3] = {e, f, h};
    auto c = zeros(g);
    for (EdgeIndex x : t) c[static_cast<std::size_t>(x)] = 1;
    out.push_back(LinearInequality::make(c, 2));
    for (int root = 0; root < 3; ++root) {
        auto d = zeros(g);
        for (int k = 0; k < 3; ++k) d[static_cast<std::size_t>(t[k])] = k == root ? 1 : -1;
        out.push_back(LinearInequality::make(d, 0));
    }
    return out;
}

std::vector<LinearInequality> edge_inequalities(const Graph& g, EdgeIndex e) {
    check_edge(g, e);
    const auto& ed = g.edge(e);
    for (const auto& inc : g.incident(ed.u))
        if (inc.neighbor != ed.v && g.adjacent(inc.neighbor, ed.v)) return {};
    auto lo = zeros(g), hi = zeros(g);
    lo[static_cast<std::size_t>(e)] = -1;
    hi[static_cast<std::size_t>(e)] = 1;
    return {LinearInequality::make(lo, 0), LinearInequality::make(hi, 1)};
}

LinearInequality cycle_inequality(const Graph& g, const std::vector<EdgeIndex>& cycle, const std::vector<EdgeIndex>& f) {
    if (cycle.size() < 3) throw GraphError("a cycle needs at least three edges");
    std::vector<EdgeIndex> cs = cycle;
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) throw GraphError("cycle repeats an edge");
    std::vector<int> deg(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<NodeId> touched;
    for (EdgeIndex e : cs) {
        check_edge(g, e);
        for (NodeId v : {g.edge(e).u, g.edge(e).v}) {
            if (deg[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
        }
    }
    for (NodeId v : touched)
        if (deg[static_cast<std::size_t>(v)] != 2) throw GraphError("edge set is not a cycle");
    if (touched.size() != cs.size() || !is_connected(g.edge_subgraph(cs).induced(touched)))
        throw GraphError("edge set is not a single cycle");
    std::vector<EdgeIndex> fs = f;
    std::sort(fs.begin(), fs.end());
    if (std::adjacent_find(fs.begin(), fs.end()) != fs.end()) throw GraphError("F repeats an edge");
    if (fs.size() % 2 == 0) throw GraphError("F must have odd size");
    if (!std::includes(cs.begin(), cs.end(), fs.begin(), fs.end())) throw GraphError("F is not contained in the cycle");
    auto c = zeros(g);
    for (EdgeIndex e : cs) c[static_cast<std::size_t>(e)] = -1;
    for (EdgeIndex e : fs) c[static_cast<std::size_t>(e)] = 1;
    return LinearInequality::make(c, static_cast<Coeff>(fs.size()) - 1);
}

std::vector<LinearInequality> cycle_inequalities(const Graph& g, const std::vector<NodeId>& cycle) {
    const auto edges = cycle_edges(g, cycle);
    if (edges.size() > 30) throw GraphError("cycle too long for odd-subset enumeration");
    std::vector<LinearInequality> out;
    for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
        if (std::popcount(mask) % 2 == 0) continue;
        std::vector<EdgeIndex> f;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1U) f.push_back(edges[i]);
        out.push_back(cycle_inequality(g, edges, f));
    }
    return out;
}

LinearInequality hypermetric_k5(const Graph& g, const std::vector<NodeId>& five) {
    auto nodes = five;
    std::sort(nodes.begin(), nodes.end());
    if (nodes.size() != 5 || std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw GraphError("hypermetric inequality needs five distinct nodes");
    auto c = zeros(g);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            const auto e = g.find_edge(nodes[i], nodes[j]);
            if (!e) throw GraphError("node set does not induce a K5");
            c[static_cast<std::size_t>(*e)] = 1;
        }
    return LinearInequality::make(c, 6);
}

LinearInequality switching(const LinearInequality& q, const Cut& w) {
    if (w.indicator.size() != q.coeffs.size()) throw GraphError("switching cut has wrong dimension");
    auto c = q.coeffs;
    Coeff rhs = q.rhs;
    for (std::size_t e = 0; e < c.size(); ++e)
        if (w.indicator[e]) {
            rhs -= c[e];
            c[e] = -c[e];
        }
    return LinearInequality::make(std::move(c), rhs);
}

// ---- facet certification ---------------------------------------------------

namespace {

constexpr std::uint64_t kPrimes[] = {(std::uint64_t{1} << 61) - 1, (std::uint64_t{1} << 62) - 57,
                                     (std::uint64_t{1} << 63) - 25};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    if (p == kPrimes[0]) {
        const std::uint64_t r = (static_cast<std::uint64_t>(z) & p) + static_cast<std::uint64_t>(z >> 61);
        return r >= p ? r - p : r;
    }
    return static_cast<std::uint64_t>(z % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Entries of the difference rows lie in {-1,0,1}, so any r x r minor is bounded
// by r^(r/2) (Hadamard). A nonzero minor below the product of the primes used is
// nonzero modulo at least one of them, so up to rank r the rational rank is the
// largest modular rank. Past the last prime the rational path takes over.
int primes_needed(int r) {
    const double bound = r <= 1 ? 1.0 : 0.5 * r * std::log2(static_cast<double>(r)) + 1.0;
    double bits = 0;
    int k = 0;
    for (std::uint64_t p : kPrimes) {
        bits += std::floor(std::log2(static_cast<double>(p)));
        ++k;
        if (bits > bound) return k;
    }
    return 0;
}

int rank_modular(const std::vector<std::vector<std::uint8_t>>& pts, int dim, std::uint64_t prime) {
    std::vector<std::vector<std::uint64_t>> basis;  // rows with leading 1 at pivot
    std::vector<int> pivots;
    const auto& p0 = pts.front();
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < dim; ++i) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) {
            const int d = static_cast<int>(pts[i][static_cast<std::size_t>(k)]) - static_cast<int>(p0[static_cast<std::size_t>(k)]);
            row[static_cast<std::size_t>(k)] = d >= 0 ? static_cast<std::uint64_t>(d) : prime - 1;
        }
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = row[static_cast<std::size_t>(pivots[b])];
            if (!f) continue;
            for (int k = 0; k < dim; ++k) {
                const std::uint64_t sub = mulmod(f, basis[b][static_cast<std::size_t>(k)], prime);
                auto& x = row[static_cast<std::size_t>(k)];
                x = x >= sub ? x - sub : x + (prime - sub);
            }
        }
        int piv = -1;
        for (int k = 0; k < dim; ++k)
            if (row[static_cast<std::size_t>(k)]) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        const std::uint64_t inv = powmod(row[static_cast<std::size_t>(piv)], prime - 2, prime);
        for (auto& x : row) x = mulmod(x, inv, prime);
        basis.push_back(std::move(row));
        pivots.push_back(piv);
    }
    return static_cast<int>(basis.size());
}

int rank_exact(const std::vector<std::vector<std::uint8_t>>& pts, int dim) {
    std::vector<std::vector<mpq_class>> basis;
    std::vector<int> pivots;
    const auto& p0 = pts.front();
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < dim; ++i) {
        std::vector<mpq_class> row(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k)
            row[static_cast<std::size_t>(k)] =
                static_cast<int>(pts[i][static_cast<std::size_t>(k)]) - static_cast<int>(p0[static_cast<std::size_t>(k)]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const mpq_class f = row[static_cast<std::size_t>(pivots[b])];
            if (f == 0) continue;
            for (int k = 0; k < dim; ++k) row[static_cast<std::size_t>(k)] -= f * basis[b][static_cast<std::size_t>(k)];
        }
        int piv = -1;
        for (int k = 0; k < dim; ++k)
            if (row[static_cast<std::size_t>(k)] != 0) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        const mpq_class inv = 1 / row[static_cast<std::size_t>(piv)];
        for (auto& x : row) x *= inv;
        basis.push_back(std::move(row));
        pivots.push_back(piv);
    }
    return static_cast<int>(basis.size());
}

}  // namespace

namespace {

// Rank over GF(2), a lower bound for the rational rank.
int rank_gf2(const std::vector<std::vector<std::uint8_t>>& pts, int dim, int cap) {
    const std::size_t words = (static_cast<std::size_t>(dim) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    const auto& p0 = pts.front();
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < cap; ++i) {
        std::vector<std::uint64_t> row(words, 0);
        for (int k = 0; k < dim; ++k)
            if (pts[i][static_cast<std::size_t>(k)] != p0[static_cast<std::size_t>(k)])
                row[static_cast<std::size_t>(k) / 64] |= std::uint64_t{1} << (k % 64);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (row[pivots[b] / 64] >> (pivots[b] % 64) & 1U)
                for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
        for (std::size_t w = 0; w < words; ++w)
            if (row[w]) {
                pivots.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
                basis.push_back(std::move(row));
                break;
            }
    }
    return static_cast<int>(basis.size());
}

// Affine rank, knowing it cannot exceed `cap`.
int capped_rank(const std::vector<std::vector<std::uint8_t>>& points, int dim, int cap) {
    const int most = std::min({cap, dim, static_cast<int>(points.size()) - 1});
    if (rank_gf2(points, dim, most) == most) return most;
    const int primes = primes_needed(most);
    if (primes == 0) return std::min(most, rank_exact(points, dim));
    int best = 0;
    for (int i = 0; i < primes && best < most; ++i) best = std::max(best, rank_modular(points, dim, kPrimes[i]));
    return best;
}

}  // namespace

int affine_rank(const std::vector<std::vector<std::uint8_t>>& points, int dim) {
    if (points.empty()) return -1;
    return capped_rank(points, dim, dim);
}

bool is_valid(const std::vector<Cut>& cuts, const LinearInequality& q) {
    for (const auto& c : cuts)
        if (q.lhs(c.indicator) > q.rhs) return false;
    return true;
}

namespace {

/// Facet test against a fixed vertex list. Cuts are packed into words when the
/// dimension allows, so +-1 inequalities are evaluated with popcounts.
class FacetChecker {
public:
    FacetChecker(const std::vector<Cut>& cuts, int dim) : cuts_(cuts), dim_(dim) {
        if (dim > 64) return;
        masks_.reserve(cuts.size());
        for (const auto& c : cuts) {
            std::uint64_t m = 0;
            for (int k = 0; k < dim; ++k)
                if (c.indicator[static_cast<std::size_t>(k)]) m |= std::uint64_t{1} << k;
            masks_.push_back(m);
        }
    }

    bool operator()(const LinearInequality& q) const {
        if (static_cast<int>(q.coeffs.size()) != dim_) throw GraphError("inequality dimension mismatch");
        std::vector<std::size_t> tight;
        if (!tight_points(q, tight)) return false;
        if (static_cast<int>(tight.size()) < dim_) return false;
        if (!masks_.empty() && rank_words(tight) == dim_ - 1) return true;
        std::vector<std::vector<std::uint8_t>> pts;
        pts.reserve(tight.size());
        for (std::size_t i : tight) pts.push_back(cuts_[i].indicator);
        return capped_rank(pts, dim_, dim_ - 1) == dim_ - 1;
    }

private:
    bool tight_points(const LinearInequality& q, std::vector<std::size_t>& tight) const {
        const bool unit = std::all_of(q.coeffs.begin(), q.coeffs.end(), [](Coeff a) { return a >= -1 && a <= 1; });
        if (unit && !masks_.empty()) {
            std::uint64_t pos = 0, neg = 0;
            for (int k = 0; k < dim_; ++k) {
                if (q.coeffs[static_cast<std::size_t>(k)] > 0) pos |= std::uint64_t{1} << k;
                if (q.coeffs[static_cast<std::size_t>(k)] < 0) neg |= std::uint64_t{1} << k;
            }
            for (std::size_t i = 0; i < masks_.size(); ++i) {
                const Coeff v = std::popcount(masks_[i] & pos) - std::popcount(masks_[i] & neg);
                if (v > q.rhs) return false;
                if (v == q.rhs) tight.push_back(i);
            }
            return true;
        }
        for (std::size_t i = 0; i < cuts_.size(); ++i) {
            const Coeff v = q.lhs(cuts_[i].indicator);
            if (v > q.rhs) return false;
            if (v == q.rhs) tight.push_back(i);
        }
        return true;
    }

    // GF(2) rank of the tight differences, stopping at dim - 1.
    int rank_words(const std::vector<std::size_t>& tight) const {
        std::uint64_t basis[64] = {};
        int r = 0;
        const std::uint64_t m0 = masks_[tight.front()];
        for (std::size_t i = 1; i < tight.size() && r < dim_ - 1; ++i) {
            std::uint64_t row = masks_[tight[i]] ^ m0;
            while (row) {
                const int p = std::countr_zero(row);
                if (!basis[p]) {
                    basis[p] = row;
                    ++r;
                    break;
                }
                row ^= basis[p];
            }
        }
        return r;
    }

    const std::vector<Cut>& cuts_;
    int dim_;
    std::vector<std::uint64_t> masks_;
};

}  // namespace

bool is_facet(const std::vector<Cut>& cuts, int dim, const LinearInequality& q) { return FacetChecker(cuts, dim)(q); }

namespace {

void guard(const Graph& g) {
    if (g.node_count() > kMaxFacetCheckNodes)
        throw GraphError("facet checks limited to " + std::to_string(kMaxFacetCheckNodes) + " nodes");
}

}  // namespace

bool is_valid(const Graph& g, const LinearInequality& q) {
    guard(g);
    if (static_cast<int>(q.coeffs.size()) != g.edge_count()) throw GraphError("inequality dimension mismatch");
    return is_valid(enumerate_cuts(g), q);
}

bool is_facet(const Graph& g, const LinearInequality& q) {
    guard(g);
    return is_facet(enumerate_cuts(g), g.edge_count(), q);
}

int polytope_dim(const Graph& g) {
    guard(g);
    std::vector<std::vector<std::uint8_t>> pts;
    for (const auto& c : enumerate_cuts(g)) pts.push_back(c.indicator);
    return affine_rank(pts, g.edge_count());
}

// ---- facet generation -------------------------------------------------------

InequalitySystem edge_cycle_system(const Graph& g) {
    InequalitySystem sys(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        for (const auto& q : edge_inequalities(g, e)) sys.add(q);
    for (const auto& cyc : chordless_cycles(g))
        for (const auto& q : cycle_inequalities(g, cyc)) sys.add(q);
    return sys;
}

InequalitySystem maximal_system(const Graph& g) {
    InequalitySystem sys = edge_cycle_system(g);
    for (const auto& five : k5_subgraphs(g)) {
        const auto base = hypermetric_k5(g, five);
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            std::vector<std::uint8_t> side(static_cast<std::size_t>(g.node_count()), 0);
            for (int i = 0; i < 4; ++i) side[static_cast<std::size_t>(five[static_cast<std::size_t>(i + 1)])] = (mask >> i) & 1U;
            sys.add(switching(base, Cut::from_side(g, side)));
        }
    }
    return sys;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits tight_bits(const LinearInequality& q, const std::vector<Cut>& cuts) {
    Bits b((cuts.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < cuts.size(); ++i)
        if (q.lhs(cuts[i].indicator) == q.rhs) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
}

bool subset(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

}  // namespace

InequalitySystem fourier_motzkin_project(const InequalitySystem& sys, int eliminate, const std::vector<Cut>& projected_cuts,
                                         const std::vector<Cut>* lifted_cuts) {
    const int dim = sys.dim();
    if (eliminate < 0 || eliminate >= dim) throw GraphError("eliminated coordinate out of range");
    auto drop = [&](const std::vector<Coeff>& c) {
        std::vector<Coeff> out(c);
        out.erase(out.begin() + eliminate);
        return out;
    };
    std::vector<std::size_t> pos, neg;
    std::set<LinearInequality> candidates;
    const auto& items = sys.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Coeff a = items[i].coeffs[static_cast<std::size_t>(eliminate)];
        if (a > 0) pos.push_back(i);
        else if (a < 0) neg.push_back(i);
        else candidates.insert(LinearInequality::make(drop(items[i].coeffs), items[i].rhs));
    }
    std::vector<Bits> zero;
    if (lifted_cuts)
        for (const auto& q : items) zero.push_back(tight_bits(q, *lifted_cuts));
    Bits common;
    for (std::size_t pi : pos)
        for (std::size_t ni : neg) {
            if (lifted_cuts) {
                // keep only pairs meeting in a ridge: no third facet holds their common vertices
                common = zero[pi];
                int count = 0;
                for (std::size_t w = 0; w < common.size(); ++w) {
                    common[w] &= zero[ni][w];
                    count += std::popcount(common[w]);
                }
                if (count < dim - 1) continue;
                bool ridge = true;
                for (std::size_t k = 0; k < items.size() && ridge; ++k)
                    if (k != pi && k != ni && subset(common, zero[k])) ridge = false;
                if (!ridge) continue;
            }
            const auto& p = items[pi];
            const auto& n = items[ni];
            const Coeff sp = p.coeffs[static_cast<std::size_t>(eliminate)];
            const Coeff sn = -n.coeffs[static_cast<std::size_t>(eliminate)];
            std::vector<Coeff> c(static_cast<std::size_t>(dim));
            for (int k = 0; k < dim; ++k)
                c[static_cast<std::size_t>(k)] = sn * p.coeffs[static_cast<std::size_t>(k)] + sp * n.coeffs[static_cast<std::size_t>(k)];
            auto reduced = drop(c);
            if (std::all_of(reduced.begin(), reduced.end(), [](Coeff x) { return x == 0; })) continue;
            candidates.insert(LinearInequality::make(std::move(reduced), sn * p.rhs + sp * n.rhs));
        }
    const FacetChecker facet(projected_cuts, dim - 1);
    InequalitySystem out(dim - 1);
    for (const auto& q : candidates)
        if (facet(q)) out.add(q);
    return out;
}

namespace {

InequalitySystem block_system(const Graph& b) {
    if (b.edge_count() == 1) {
        InequalitySystem sys(1);
        for (const auto& q : edge_inequalities(b, 0)) sys.add(q);
        return sys;
    }
    if (!has_minor(b, MinorKind::K5)) return edge_cycle_system(b);
    const auto dec = k33_decompose(b);
    if (!dec.is_k33_minor_free)
        throw UnsupportedGraph("graph has both a K5 minor and a K33 minor", dec.witness->nodes);
    if (dec.is_maximal) return maximal_system(b);
    if (b.node_count() > kMaxFacetCheckNodes)
        throw GraphError("projection limited to " + std::to_string(kMaxFacetCheckNodes) + " nodes");
    const auto comp = maximal_completion(b);
    InequalitySystem sys = maximal_system(comp.graph);
    std::vector<EdgeIndex> keep(static_cast<std::size_t>(comp.graph.edge_count()));
    std::iota(keep.begin(), keep.end(), 0);
    auto lifted = enumerate_cuts(comp.graph);
    for (auto it = comp.added.rbegin(); it != comp.added.rend(); ++it) {
        keep.pop_back();
        const Graph reduced = comp.graph.edge_subgraph(keep);
        sys = fourier_motzkin_project(sys, *it, enumerate_cuts(reduced), &lifted);
        lifted = enumerate_cuts(reduced);
    }
    return sys;
}

}  // namespace

InequalitySystem facet_description(const Graph& g) {
    InequalitySystem sys(g.edge_count());
    const auto bd = blocks(g);
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        std::vector<EdgeIndex> emap;
        const Graph local = g.induced(bd.blocks[bi], &emap);
        InequalitySystem part;
        try {
            part = block_system(local);
        } catch (const UnsupportedGraph& ex) {
            std::vector<NodeId> w;
            for (NodeId v : ex.witness()) w.push_back(bd.blocks[bi][static_cast<std::size_t>(v)]);
            throw UnsupportedGraph(ex.what(), std::move(w));
        }
        for (const auto& q : part) {
            std::vector<Coeff> c(static_cast<std::size_t>(g.edge_count()), 0);
            for (std::size_t k = 0; k < emap.size(); ++k) c[static_cast<std::size_t>(emap[k])] = q.coeffs[k];
            sys.add(LinearInequality::make(std::move(c), q.rhs));
        }
    }
    return sys;
}

}  // namespace k33cut
