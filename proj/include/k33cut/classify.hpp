#ifndef K33CUT_CLASSIFY_HPP
#define K33CUT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "k33cut/graph.hpp"
#include "k33cut/polytope.hpp"

namespace k33cut {

/// True iff every block is a single edge or a triangle.
bool is_c4_minor_free(const Graph& g);

enum class ProofCase { TriangleFree, Triangle };

struct ClassificationReport {
    bool simple = false;
    bool simplicial = false;

    /// Nodes of a 2-connected block on at least four nodes.
    std::optional<std::vector<NodeId>> c4_block;
    /// Name of the matched graph from the simplicial list.
    std::optional<std::string> matched;
    /// Table case for connected non-simplicial graphs.
    std::optional<ProofCase> proof_case;
    /// Facets tight at the origin, one more than the edges of c4_block.
    std::vector<LinearInequality> origin_witness;

    std::string simple_reason;
    std::string simplicial_reason;
    std::vector<std::string> warnings;
};

char case_label(ProofCase c);

/// Structural classification. Isolated nodes are dropped with a warning.
/// Throws GraphError for graphs without edges.
ClassificationReport classify(const Graph& g);

struct BruteClassification {
    bool simple = false;
    bool simplicial = false;
};

/// Reads both properties from the vertex-facet incidences of the hull.
BruteClassification brute_classify(const Graph& g, HullLimits limits = {});

/// Graphs on at most four nodes, no isolated nodes, up to isomorphism.
struct NamedSmallGraph {
    std::string name;
    Graph graph;
};
std::vector<NamedSmallGraph> simplicial_graphs();

bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace k33cut

#endif  // K33CUT_CLASSIFY_HPP
