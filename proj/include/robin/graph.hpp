#ifndef ROBIN_GRAPH_HPP_
#define ROBIN_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "robin/rng.hpp"

namespace robin {

/// Unordered node pair, stored with first < second.
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph. Construction simplifies its input:
/// self-loops are dropped and duplicate edges collapse into one. Edges are
/// kept sorted, so two graphs compare equal iff they have the same node count
/// and the same edge set.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a raw edge multiset over nodes 0..node_count-1.
    /// Throws std::invalid_argument if node_count < 0 or an endpoint is out
    /// of range.
    Graph(int node_count, std::vector<Edge> raw_edges);

    Graph(int node_count, std::vector<Edge> raw_edges,
          std::vector<std::string> labels, std::vector<int> ground_truth);

    int node_count() const noexcept { return node_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Per-node text labels; empty when the source carried none.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }

    /// Per-node ground-truth community ids; empty when absent.
    const std::vector<int>& ground_truth() const noexcept { return ground_truth_; }
    bool has_ground_truth() const noexcept { return !ground_truth_.empty(); }

    /// Sorted neighbor lists.
    std::vector<std::vector<int>> adjacency() const;

    /// Structural equality: node count and edge set (labels ignored).
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<int> ground_truth_;
};

/// One entry per node: number of incident edges.
using DegreeSequence = std::vector<int>;

/// Drops self-loops and duplicate edges; node set unchanged. Idempotent.
Graph simplify(int node_count, std::vector<Edge> raw_edges);

DegreeSequence degree_sequence(const Graph& g);

/// Degree-preserving perturbation by double-edge swaps: two disjoint edges
/// {a,b},{c,d} are replaced by {a,c},{b,d} or {a,d},{b,c}, accepting only
/// swaps that keep the graph simple. Runs until ceil(fraction*m/2) successful
/// swaps (each swap relocates two edges) or until 100*m draws have been
/// spent. Graphs with no feasible swap come back unchanged.
Graph rewire_fraction(const Graph& g, double fraction, RngSeed seed);

/// Configuration-model null graph: same degree sequence, edge positions
/// randomized by driving the swap chain to 10*m successful swaps.
Graph null_configuration_model(const Graph& g, RngSeed seed);

}  // namespace robin

#endif  // ROBIN_GRAPH_HPP_
