#ifndef K33CUT_PLANAR_HPP
#define K33CUT_PLANAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "k33cut/graph.hpp"

namespace k33cut {

/// Rotation system of a connected planar graph.
struct Embedding {
    int node_count = 0;
    std::vector<Edge> edges;                       // copy of the embedded graph's edges
    std::vector<std::vector<EdgeIndex>> rotation;  // per node, cyclic order of incident edges
    int face_count = 0;
};

/// Directed edge: `edge` traversed starting at node `from`.
struct Dart {
    NodeId from;
    EdgeIndex edge;
    bool operator==(const Dart&) const = default;
};

using Face = std::vector<Dart>;

struct DualEdge {
    int a;
    int b;
    EdgeIndex primal;
    Weight w;
};

struct DualGraph {
    int node_count = 0;
    std::vector<DualEdge> edges;  // edge i is dual to primal edge i
};

/// Path-addition planarity test. Returns std::nullopt for non-planar input.
/// Throws GraphError on disconnected input.
std::optional<Embedding> planar_embed(const Graph& g);

inline bool is_planar(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (!planar_embed(g.induced(comp))) return false;
    return true;
}

/// Face walks; face ids follow first discovery when scanning darts in
/// (from, to) lexicographic order.
std::vector<Face> faces(const Embedding& e);

DualGraph dual_graph(const Embedding& e);

std::string format_rotation(const Embedding& e);

}  // namespace k33cut

#endif  // K33CUT_PLANAR_HPP
