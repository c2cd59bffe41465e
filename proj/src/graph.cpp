#include "robin/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace robin {

namespace {

std::uint64_t edge_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

std::vector<Edge> simplified_edges(int node_count, std::vector<Edge> raw) {
    std::vector<Edge> out;
    out.reserve(raw.size());
    for (Edge e : raw) {
        if (e.first < 0 || e.first >= node_count || e.second < 0 || e.second >= node_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.first == e.second) continue;
        if (e.first > e.second) std::swap(e.first, e.second);
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Graph::Graph(int node_count, std::vector<Edge> raw_edges)
    : Graph(node_count, std::move(raw_edges), {}, {}) {}

Graph::Graph(int node_count, std::vector<Edge> raw_edges,
             std::vector<std::string> labels, std::vector<int> ground_truth)
    : node_count_(node_count),
      labels_(std::move(labels)),
      ground_truth_(std::move(ground_truth)) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != node_count) {
        throw std::invalid_argument("label vector size does not match node count");
    }
    if (!ground_truth_.empty() && static_cast<int>(ground_truth_.size()) != node_count) {
        throw std::invalid_argument("ground-truth vector size does not match node count");
    }
    edges_ = simplified_edges(node_count, std::move(raw_edges));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count_));
    for (const Edge& e : edges_) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    return adj;
}

Graph simplify(int node_count, std::vector<Edge> raw_edges) {
    return Graph(node_count, std::move(raw_edges));
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence degrees(static_cast<std::size_t>(g.node_count()), 0);
    for (const Edge& e : g.edges()) {
        ++degrees[static_cast<std::size_t>(e.first)];
        ++degrees[static_cast<std::size_t>(e.second)];
    }
    return degrees;
}

namespace {

// Shared swap chain. Stops after target_swaps successes or attempt_budget draws.
Graph rewire_swaps(const Graph& g, long long target_swaps, long long attempt_budget,
                   RngSeed seed) {
    std::vector<Edge> edges = g.edges();
    const std::size_t m = edges.size();
    if (target_swaps <= 0 || m < 2) {
        return Graph(g.node_count(), std::move(edges),
                     g.labels(), g.ground_truth());
    }

    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (const Edge& e : edges) present.insert(edge_key(e.first, e.second));

    Rng rng(seed);
    long long swaps_done = 0;
    for (long long attempt = 0; attempt < attempt_budget && swaps_done < target_swaps;
         ++attempt) {
        const std::size_t i = rng.index(m);
        const std::size_t j = rng.index(m);
        if (i == j) continue;
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        if (a == c || a == d || b == c || b == d) continue;  // not disjoint

        // Two possible reconnections; pick one at random.
        int u1 = a, v1 = c, u2 = b, v2 = d;
        if (rng.flip()) {
            v1 = d;
            v2 = c;
        }
        if (u1 > v1) std::swap(u1, v1);
        if (u2 > v2) std::swap(u2, v2);
        if (present.count(edge_key(u1, v1)) || present.count(edge_key(u2, v2))) {
            continue;  // would create a multi-edge
        }

        present.erase(edge_key(a, b));
        present.erase(edge_key(c, d));
        present.insert(edge_key(u1, v1));
        present.insert(edge_key(u2, v2));
        edges[i] = {u1, v1};
        edges[j] = {u2, v2};
        ++swaps_done;
    }

    return Graph(g.node_count(), std::move(edges), g.labels(), g.ground_truth());
}

}  // namespace

Graph rewire_fraction(const Graph& g, double fraction, RngSeed seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("fraction must lie in [0, 1]");
    }
    const long long m = g.edge_count();
    const long long target =
        static_cast<long long>(std::ceil(fraction * static_cast<double>(m) / 2.0));
    return rewire_swaps(g, target, 100 * m, seed);
}

Graph null_configuration_model(const Graph& g, RngSeed seed) {
    const long long m = g.edge_count();
    return rewire_swaps(g, 10 * m, 100 * m, seed);
}

}  // namespace robin
