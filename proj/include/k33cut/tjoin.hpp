#ifndef K33CUT_TJOIN_HPP
#define K33CUT_TJOIN_HPP

#include <utility>
#include <vector>

#include "k33cut/graph.hpp"

namespace k33cut {

/// Complete weighting on an even number of points.
class MatchingInstance {
public:
    explicit MatchingInstance(int points);
    int size() const { return n_; }
    void set(int i, int j, Weight w);
    Weight weight(int i, int j) const { return w_[static_cast<std::size_t>(i * n_ + j)]; }

private:
    int n_;
    std::vector<Weight> w_;
};

struct MatchingResult {
    std::vector<std::pair<int, int>> pairs;  // i < j, sorted
    Weight total = 0;
};

/// Exact minimum-weight perfect matching (primal-dual blossom, O(n^3)).
MatchingResult min_weight_perfect_matching(const MatchingInstance& inst);

/// Maximum-weight matching on a general graph; with `max_cardinality`
/// the maximum is taken over maximum-cardinality matchings.
/// Returns mate[v] or -1.
std::vector<int> max_weight_matching(int n, const std::vector<Edge>& edges, bool max_cardinality);

struct TJoinEdge {
    int a;
    int b;
    Weight w;
};

/// Connected multigraph (loops allowed) with terminal set T.
struct TJoinInstance {
    int node_count = 0;
    std::vector<TJoinEdge> edges;
    std::vector<int> terminals;
};

struct TJoinResult {
    std::vector<int> edges;  // sorted edge indices
    Weight total = 0;
};

/// Minimum-weight T-join with arbitrary integer weights.
TJoinResult min_weight_t_join(const TJoinInstance& inst);

/// Shortest path between two nodes with nonnegative weights; ties go to the
/// lexicographically smallest node sequence. Returns edge indices in order.
std::vector<int> shortest_path(const TJoinInstance& inst, int s, int t, Weight* length = nullptr);

}  // namespace k33cut

#endif  // K33CUT_TJOIN_HPP
