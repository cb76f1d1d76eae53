#ifndef K33CUT_GENERATE_HPP
#define K33CUT_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "k33cut/graph.hpp"

namespace k33cut {

enum class ComponentKind { K5, Triangulation };

struct GeneratorSpec {
    std::uint64_t seed = 1;
    std::vector<ComponentKind> components{ComponentKind::K5};
    int triangulation_min_nodes = 4;
    int triangulation_max_nodes = 6;
    /// When false, the shared edge of every 2-sum is removed afterwards.
    bool strict = true;
    /// Chance, in percent, that each edge is removed (only if connectivity survives).
    int deletion_percent = 0;
    Weight weight_min = 1;
    Weight weight_max = 1;
    /// Shuffle node labels and edge order.
    bool relabel = false;
};

/// 2-sums of planar triangulations and K5 copies, optionally thinned.
/// Throws std::invalid_argument for an infeasible spec.
Graph gen_k33free(const GeneratorSpec& spec);

/// Random spec with at most `max_nodes` nodes and weights in [-10, 10].
GeneratorSpec spec_for_seed(std::uint64_t seed, int max_nodes);

/// Random 2-connected planar graph: a triangulation thinned while staying 2-connected.
Graph gen_planar_2connected(std::uint64_t seed, int min_nodes, int max_nodes, Weight wmin, Weight wmax);

/// Uniform random simple graph with n nodes and m edges.
Graph gen_random_graph(std::uint64_t seed, int n, int m, Weight wmin = 1, Weight wmax = 1);

}  // namespace k33cut

#endif  // K33CUT_GENERATE_HPP
