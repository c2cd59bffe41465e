// Independent reference implementations used only by tests. Everything here
// is computed from first principles (explicit block sets, pair counting,
// exhaustive enumeration) rather than through the library's confusion-table
// kernel, so the two paths can check each other.
#ifndef ROBIN_TESTS_ORACLES_HPP_
#define ROBIN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "robin/graph.hpp"
#include "robin/measures.hpp"
#include "robin/membership.hpp"
#include "robin/rng.hpp"

namespace oracle {

// All partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    auto recurse = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == n) {
            out.push_back(current);
            return;
        }
        for (int label = 0; label <= max_used + 1; ++label) {
            current[static_cast<std::size_t>(pos)] = label;
            self(self, pos + 1, std::max(max_used, label));
        }
    };
    if (n == 0) {
        out.push_back({});
    } else {
        current[0] = 0;
        recurse(recurse, 1, 0);
    }
    return out;
}

// Explicit block lists of a labeling.
inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& labels) {
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
        const int c = labels[static_cast<std::size_t>(v)];
        if (c >= static_cast<int>(blocks.size())) {
            blocks.resize(static_cast<std::size_t>(c) + 1);
        }
        blocks[static_cast<std::size_t>(c)].push_back(v);
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 blocks.end());
    return blocks;
}

inline int overlap(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    for (int x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) ++count;
    }
    return count;
}

inline double block_entropy(const std::vector<std::vector<int>>& blocks, double n) {
    double h = 0.0;
    for (const auto& block : blocks) {
        const double p = static_cast<double>(block.size()) / n;
        h -= p * std::log(p);
    }
    return h;
}

inline double block_mutual_information(const std::vector<std::vector<int>>& pa,
                                       const std::vector<std::vector<int>>& pb, double n) {
    double mi = 0.0;
    for (const auto& a : pa) {
        for (const auto& b : pb) {
            const int o = overlap(a, b);
            if (o > 0) {
                mi += (o / n) * std::log(o * n / (static_cast<double>(a.size()) *
                                                  static_cast<double>(b.size())));
            }
        }
    }
    return mi;
}

inline double vi_brute(const std::vector<int>& la, const std::vector<int>& lb) {
    const double n = static_cast<double>(la.size());
    if (n <= 1.0) return 0.0;
    const auto pa = blocks_of(la);
    const auto pb = blocks_of(lb);
    const double vi = block_entropy(pa, n) + block_entropy(pb, n) -
                      2.0 * block_mutual_information(pa, pb, n);
    return std::clamp(vi / std::log(n), 0.0, 1.0);
}

inline double nmi_brute(const std::vector<int>& la, const std::vector<int>& lb) {
    const double n = static_cast<double>(la.size());
    if (n <= 1.0) return 0.0;
    const auto pa = blocks_of(la);
    const auto pb = blocks_of(lb);
    const double ha = block_entropy(pa, n);
    const double hb = block_entropy(pb, n);
    if (ha == 0.0 && hb == 0.0) return 0.0;
    const double nmi = 2.0 * block_mutual_information(pa, pb, n) / (ha + hb);
    return std::clamp(1.0 - nmi, 0.0, 1.0);
}

inline double split_join_brute(const std::vector<int>& la, const std::vector<int>& lb) {
    const double n = static_cast<double>(la.size());
    if (n <= 1.0) return 0.0;
    const auto pa = blocks_of(la);
    const auto pb = blocks_of(lb);
    double total = 0.0;
    for (const auto& a : pa) {
        int best = 0;
        for (const auto& b : pb) best = std::max(best, overlap(a, b));
        total += static_cast<double>(a.size()) - best;
    }
    for (const auto& b : pb) {
        int best = 0;
        for (const auto& a : pa) best = std::max(best, overlap(a, b));
        total += static_cast<double>(b.size()) - best;
    }
    return std::clamp(total / (2.0 * n), 0.0, 1.0);
}

// Pair-counting adjusted Rand: a = pairs together in both, d = apart in both,
// b/c = together in exactly one. ARI = 2(ad - bc) / ((a+b)(b+d) + (a+c)(c+d)).
inline double ari_brute(const std::vector<int>& la, const std::vector<int>& lb) {
    const int n = static_cast<int>(la.size());
    if (n <= 1) return 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool same_a = la[static_cast<std::size_t>(i)] == la[static_cast<std::size_t>(j)];
            const bool same_b = lb[static_cast<std::size_t>(i)] == lb[static_cast<std::size_t>(j)];
            if (same_a && same_b) {
                a += 1.0;
            } else if (same_a) {
                b += 1.0;
            } else if (same_b) {
                c += 1.0;
            } else {
                d += 1.0;
            }
        }
    }
    const double denom = (a + b) * (b + d) + (a + c) * (c + d);
    if (denom == 0.0) return 0.0;  // both partitions trivial and equal
    const double ari = 2.0 * (a * d - b * c) / denom;
    return std::clamp(1.0 - ari, 0.0, 1.0);
}

inline double distance_brute(const std::vector<int>& a, const std::vector<int>& b,
                             robin::MeasureKind kind) {
    switch (kind) {
        case robin::MeasureKind::vi: return vi_brute(a, b);
        case robin::MeasureKind::nmi: return nmi_brute(a, b);
        case robin::MeasureKind::split_join: return split_join_brute(a, b);
        case robin::MeasureKind::ari: return ari_brute(a, b);
    }
    return -1.0;
}

// Unnormalized VI in nats, for the triangle-inequality property.
inline double vi_unnormalized(const std::vector<int>& la, const std::vector<int>& lb) {
    const double n = static_cast<double>(la.size());
    const auto pa = blocks_of(la);
    const auto pb = blocks_of(lb);
    return block_entropy(pa, n) + block_entropy(pb, n) -
           2.0 * block_mutual_information(pa, pb, n);
}

// Newman-Girvan Q written directly from its definition.
inline double modularity_direct(const robin::Graph& g, const std::vector<int>& labels) {
    const double m = g.edge_count();
    if (m == 0.0) return 0.0;
    double q = 0.0;
    const int k = 1 + *std::max_element(labels.begin(), labels.end());
    for (int c = 0; c < k; ++c) {
        double internal = 0.0, degree = 0.0;
        for (const robin::Edge& e : g.edges()) {
            const bool first_in = labels[static_cast<std::size_t>(e.first)] == c;
            const bool second_in = labels[static_cast<std::size_t>(e.second)] == c;
            if (first_in && second_in) internal += 1.0;
            if (first_in) degree += 1.0;
            if (second_in) degree += 1.0;
        }
        q += internal / m - (degree / (2.0 * m)) * (degree / (2.0 * m));
    }
    return q;
}

// Exhaustive modularity maximum over all partitions (tiny n only).
inline std::pair<double, std::vector<int>> max_modularity_partition(const robin::Graph& g) {
    double best_q = -1.0;
    std::vector<int> best;
    for (const auto& labels : all_partitions(g.node_count())) {
        const double q = modularity_direct(g, labels);
        if (q > best_q) {
            best_q = q;
            best = labels;
        }
    }
    return {best_q, best};
}

// Erdos-Renyi G(n, p) through the library's deterministic stream.
inline robin::Graph random_gnp(int n, double p, std::uint64_t seed) {
    robin::Rng rng(robin::RngSeed{seed});
    std::vector<robin::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.real01() < p) edges.push_back({u, v});
        }
    }
    return robin::Graph(n, std::move(edges));
}

// k disjoint cliques of the given size.
inline robin::Graph disjoint_cliques(int k, int size) {
    std::vector<robin::Edge> edges;
    for (int c = 0; c < k; ++c) {
        const int base = c * size;
        for (int u = 0; u < size; ++u) {
            for (int v = u + 1; v < size; ++v) {
                edges.push_back({base + u, base + v});
            }
        }
    }
    return robin::Graph(k * size, std::move(edges));
}

}  // namespace oracle

#endif  // ROBIN_TESTS_ORACLES_HPP_
