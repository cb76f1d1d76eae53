#ifndef K33CUT_SPQR_HPP
#define K33CUT_SPQR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k33cut/graph.hpp"

namespace k33cut {

enum class SkeletonEdgeKind { Original, Virtual };

struct SkeletonEdge {
    NodeId u;  // original node ids, u < v
    NodeId v;
    SkeletonEdgeKind kind;
    int id;  // edge index for Original, pair id for Virtual
    Weight w;
};

enum class SprKind { S, P, R };

struct SprNode {
    SprKind kind;
    std::vector<NodeId> nodes;  // sorted
    std::vector<SkeletonEdge> edges;
};

struct TreeEdge {
    int a;
    int b;
    int pair;
};

struct SprTree {
    std::vector<SprNode> nodes;
    std::vector<TreeEdge> tree_edges;  // sorted by pair id
    int pair_count = 0;
};

char kind_letter(SprKind k);

/// Canonical SPR-tree of a 2-connected graph with at least 3 edges.
/// Virtual edges carry the weight of the parallel original edge, or 0.
SprTree spr_tree(const Graph& g);

/// Union of all original skeleton edges, each placed at its original index.
/// Throws if a pair id does not occur in exactly two skeletons or an edge is missing.
Graph recompose(const SprTree& t, int node_count);

struct Augmented {
    Graph graph;  // input edges first, then the new weight-0 edges
    SprTree tree;
};

/// Adds a weight-0 original edge to every P-node lacking one and a new P-node
/// on every tree edge joining two non-P nodes.
Augmented augment_with_parallel_originals(const Graph& g, const SprTree& t);

enum class ComponentClass { PlanarTriangulation, Planar, K5, Cycle, NonPlanar };

const char* class_name(ComponentClass c);

struct DecomposedComponent {
    int block;      // index into blocks(g)
    int tree_node;  // index into trees[block].nodes
    ComponentClass cls;
};

struct K33Decomposition {
    bool is_k33_minor_free = true;
    bool is_maximal = false;
    BlockDecomposition block_decomposition;
    std::vector<std::optional<SprTree>> trees;  // per block; empty for single edges
    std::vector<DecomposedComponent> components;
    std::optional<SprNode> witness;  // first non-planar non-K5 R-component
};

K33Decomposition k33_decompose(const Graph& g);

struct Completion {
    Graph graph;  // input edges keep their indices; added edges follow
    std::vector<EdgeIndex> added;
};

/// Maximal K33-minor-free supergraph. Throws GraphError if g has a K33 minor
/// or is disconnected.
Completion maximal_completion(const Graph& g);

std::string format_tree(const SprTree& t);

}  // namespace k33cut

#endif  // K33CUT_SPQR_HPP
