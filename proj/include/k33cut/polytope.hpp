#ifndef K33CUT_POLYTOPE_HPP
#define K33CUT_POLYTOPE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "k33cut/graph.hpp"

namespace k33cut {

using Coeff = std::int64_t;

/// a^T x <= rhs with gcd(|a|, |rhs|) = 1 and a != 0.
struct LinearInequality {
    std::vector<Coeff> coeffs;
    Coeff rhs = 0;

    /// Divides by the gcd; throws GraphError when every coefficient is zero.
    static LinearInequality make(std::vector<Coeff> coeffs, Coeff rhs);

    Coeff lhs(const std::vector<std::uint8_t>& x) const;
    bool operator==(const LinearInequality&) const = default;
    auto operator<=>(const LinearInequality&) const = default;
};

std::string format_inequality(const LinearInequality& q);

/// Deduplicated, sorted inequality list over a fixed dimension.
class InequalitySystem {
public:
    explicit InequalitySystem(int dim = 0) : dim_(dim) {}
    int dim() const { return dim_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<LinearInequality>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    /// Returns true if the inequality was new.
    bool add(const LinearInequality& q);
    void add_all(const InequalitySystem& other);
    bool contains(const LinearInequality& q) const;
    bool operator==(const InequalitySystem& other) const { return dim_ == other.dim_ && items_ == other.items_; }

private:
    int dim_;
    std::vector<LinearInequality> items_;
};

/// The sum form and the three rooted difference forms on a triangle.
std::vector<LinearInequality> metric_inequalities(const Graph& g, EdgeIndex e, EdgeIndex f, EdgeIndex h);

/// 0 <= x_e and x_e <= 1 when e lies in no triangle; empty otherwise.
std::vector<LinearInequality> edge_inequalities(const Graph& g, EdgeIndex e);

/// sum_{F} x - sum_{C \ F} x <= |F| - 1 for a cycle given by its edges and odd F within it.
LinearInequality cycle_inequality(const Graph& g, const std::vector<EdgeIndex>& cycle, const std::vector<EdgeIndex>& f);

/// All odd-F cycle inequalities of a node cycle.
std::vector<LinearInequality> cycle_inequalities(const Graph& g, const std::vector<NodeId>& cycle);

/// sum over the ten edges of a K5 subgraph <= 6.
LinearInequality hypermetric_k5(const Graph& g, const std::vector<NodeId>& five);

/// Image under the symmetry x -> x xor delta(W).
LinearInequality switching(const LinearInequality& q, const Cut& w);

inline constexpr int kMaxFacetCheckNodes = 22;

bool is_valid(const Graph& g, const LinearInequality& q);
bool is_facet(const Graph& g, const LinearInequality& q);

/// Checks against an explicit vertex list of a polytope of dimension `dim`.
bool is_valid(const std::vector<Cut>& cuts, const LinearInequality& q);
bool is_facet(const std::vector<Cut>& cuts, int dim, const LinearInequality& q);

/// Affine rank of the 0/1 vectors.
int affine_rank(const std::vector<std::vector<std::uint8_t>>& points, int dim);

int polytope_dim(const Graph& g);

/// Edge inequalities for triangle-free edges plus every chordless-cycle inequality.
InequalitySystem edge_cycle_system(const Graph& g);

/// Generators for maximal K33-minor-free graphs: the edge/cycle system plus
/// every switching of the K5 inequality on every K5 subgraph.
InequalitySystem maximal_system(const Graph& g);

/// Eliminates coordinate `eliminate`; every candidate is kept only if it is a
/// facet for the vertex list `projected_cuts` (cuts of the graph without that edge).
/// When `lifted_cuts` is given, `sys` must be the complete facet list of their
/// hull, and only pairs meeting in a ridge are combined.
InequalitySystem fourier_motzkin_project(const InequalitySystem& sys, int eliminate, const std::vector<Cut>& projected_cuts,
                                         const std::vector<Cut>* lifted_cuts = nullptr);

/// Complete facet list for K5-minor-free or K33-minor-free graphs.
/// Throws UnsupportedGraph (see maxcut.hpp) for other graphs.
InequalitySystem facet_description(const Graph& g);

struct HullLimits {
    int max_dim = 12;
    std::size_t max_vertices = 64;
};

struct HullResult {
    InequalitySystem facets;
    std::vector<std::vector<int>> incidence;  // per facet, indices of the tight vertices
};

/// Facets of conv(cuts) by double description over exact integers.
HullResult brute_hull(const std::vector<Cut>& cuts, int dim, HullLimits limits = {});

}  // namespace k33cut

#endif  // K33CUT_POLYTOPE_HPP
