#ifndef K33CUT_MAXCUT_HPP
#define K33CUT_MAXCUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "k33cut/graph.hpp"
#include "k33cut/spqr.hpp"

namespace k33cut {

struct MaxCutResult {
    Weight value = 0;
    Cut cut;
};

/// Raised when the input is outside the class a solver supports.
class UnsupportedGraph : public GraphError {
public:
    UnsupportedGraph(const std::string& what, std::vector<NodeId> witness = {})
        : GraphError(what), witness_(std::move(witness)) {}
    const std::vector<NodeId>& witness() const { return witness_; }

private:
    std::vector<NodeId> witness_;
};

struct EliminationStep {
    int leaf;
    NodeId a;
    NodeId b;
    Weight beta_plus;
    Weight beta_minus;
    Weight gamma;
    std::vector<NodeId> nodes;             // leaf skeleton nodes
    std::vector<std::uint8_t> side_plus;   // optimal assignment with ab cut
    std::vector<std::uint8_t> side_minus;  // optimal assignment with ab not cut
};

/// Exhaustive optimum; ties go to the lexicographically smallest canonical side vector.
MaxCutResult maxcut_bruteforce(const Graph& g);

struct ForcedEdge {
    EdgeIndex edge;
    bool in_cut;
};

/// Planar optimum through a minimum T-join in the dual. g must be 2-connected and planar.
MaxCutResult planar_maxcut(const Graph& g, std::optional<ForcedEdge> forced = std::nullopt);

/// Working graph and SPR-tree of one 2-connected block during leaf elimination.
class EliminationState {
public:
    /// `t` must come from augment_with_parallel_originals and `g` is its graph.
    EliminationState(Graph g, SprTree t);

    const Graph& graph() const { return g_; }
    const SprNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    bool alive(int id) const { return alive_[static_cast<std::size_t>(id)] != 0; }
    int alive_count() const;

    /// Alive S/R nodes holding exactly one virtual edge, ascending.
    std::vector<int> leaves() const;

    EliminationStep eliminate_leaf(int leaf);

    /// Solves the last remaining component and replays all steps into a witness.
    MaxCutResult finish();

    const std::vector<EliminationStep>& steps() const { return steps_; }

private:
    Graph g_;
    std::vector<SprNode> nodes_;
    std::vector<char> alive_;
    std::vector<EdgeIndex> pair_original_;
    std::vector<EliminationStep> steps_;
};

struct MaxCutOptions {
    /// When set, leaves are taken in a seeded random order instead of lowest id first.
    std::optional<std::uint64_t> shuffle_seed;
    /// Receives the elimination steps of every block, in order.
    std::vector<EliminationStep>* steps = nullptr;
};

/// Exact MaxCut for K33-minor-free graphs. Throws UnsupportedGraph otherwise.
MaxCutResult maxcut(const Graph& g, const MaxCutOptions& options = {});

}  // namespace k33cut

#endif  // K33CUT_MAXCUT_HPP
