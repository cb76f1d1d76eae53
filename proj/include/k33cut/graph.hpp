#ifndef K33CUT_GRAPH_HPP
#define K33CUT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k33cut {

using NodeId = int;
using EdgeIndex = int;
using Weight = std::int64_t;

/// Largest accepted absolute edge weight. Keeps all solver sums far from overflow.
inline constexpr Weight kMaxAbsWeight = Weight{1} << 40;

struct Edge {
    NodeId u;
    NodeId v;
    Weight w;
};

struct Incidence {
    NodeId neighbor;
    EdgeIndex edge;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Simple undirected weighted graph with stable edge indices.
 *
 * Edges are stored with u < v. The index of an edge is its position in
 * edges() and never changes once the edge is added.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int node_count);

    /// Throws GraphError on self-loops, parallel edges or out-of-range ids.
    EdgeIndex add_edge(NodeId u, NodeId v, Weight w = 1);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Incidence>& incident(NodeId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(NodeId v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeIndex> find_edge(NodeId u, NodeId v) const;
    bool adjacent(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

    void set_weight(EdgeIndex e, Weight w);
    Weight total_abs_weight() const;

    /// Subgraph induced by `nodes`, relabeled 0..k-1 in the given order.
    /// `edge_map`, when given, receives the original index of every new edge.
    Graph induced(const std::vector<NodeId>& nodes, std::vector<EdgeIndex>* edge_map = nullptr) const;

    /// Edge-subgraph on all nodes; new edge i is edges[keep[i]].
    Graph edge_subgraph(const std::vector<EdgeIndex>& keep) const;

    bool operator==(const Graph& other) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Node bipartition with its edge indicator vector.
struct Cut {
    std::vector<std::uint8_t> side;       // per node: 1 iff in S
    std::vector<std::uint8_t> indicator;  // per edge: 1 iff the edge crosses

    /// Cut defined by `side`, normalized so node 0 is not in S.
    static Cut from_side(const Graph& g, std::vector<std::uint8_t> side);
    Weight weight(const Graph& g) const;
    bool operator==(const Cut&) const = default;
};

struct BlockDecomposition {
    std::vector<std::vector<NodeId>> blocks;       // sorted node sets
    std::vector<std::vector<EdgeIndex>> block_edges;  // parallel to blocks
    std::vector<NodeId> cut_nodes;                 // sorted
};

enum class MinorKind { K5, K33, C4 };

// ---- parsing -------------------------------------------------------------

enum class ParseErrorKind { Malformed, DuplicateEdge, SelfLoop, NodeOutOfRange, WeightOutOfRange };

class ParseError : public GraphError {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& what);
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// Reads the `p cut n m` / `e u v w` format (1-indexed node ids).
ParsedGraph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, const std::vector<std::string>& comments = {});

/// Drops isolated nodes; `kept`, when given, receives the surviving original ids.
Graph drop_isolated_nodes(const Graph& g, std::vector<NodeId>* kept = nullptr);

// ---- structure -----------------------------------------------------------

std::vector<std::vector<NodeId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
BlockDecomposition blocks(const Graph& g);
bool is_k_connected(const Graph& g, int k);

std::vector<std::vector<NodeId>> triangles(const Graph& g);

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Induced cycles of length >= 3, each once. A cycle is reported starting at
/// its smallest node, oriented so the second node is smaller than the last.
std::vector<std::vector<NodeId>> chordless_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

std::vector<std::vector<NodeId>> k5_subgraphs(const Graph& g);

/// Minor test through the 3-connected component structure.
bool has_minor(const Graph& g, MinorKind h);

/// Exhaustive contraction search; exponential, intended for small graphs.
bool has_minor_exhaustive(const Graph& g, MinorKind h);

/// Ears as node sequences; the first is a closed cycle (first node repeated
/// at the end is omitted), the others are paths with endpoints in the union.
std::vector<std::vector<NodeId>> ear_decomposition(const Graph& g);

inline constexpr int kMaxEnumerationNodes = 24;

/// Every distinct cut once; each connected component's smallest node is kept out of S.
std::vector<Cut> enumerate_cuts(const Graph& g);

/// Edge indices along a node cycle (closing edge last). Throws if not a cycle of g.
std::vector<EdgeIndex> cycle_edges(const Graph& g, const std::vector<NodeId>& cycle);

/// Named graphs used across tests, tools and the classifier.
namespace named {
Graph complete(int n, Weight w = 1);
Graph cycle(int n, Weight w = 1);
Graph path(int n, Weight w = 1);
Graph complete_bipartite(int a, int b, Weight w = 1);
Graph octahedron(Weight w = 1);
/// Two copies of K5 glued on {u1,u2} with the shared edge removed.
/// Node ids: v1,v2,v3 = 0,1,2; u1,u2 = 3,4; w1,w2,w3 = 5,6,7.
Graph k5_pair_without_shared_edge(Weight w = 1);
}  // namespace named

}  // namespace k33cut

#endif  // K33CUT_GRAPH_HPP
