#include "robin/detect.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace robin {

std::string to_string(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::louvain: return "louvain";
        case DetectorKind::label_prop: return "label-prop";
        case DetectorKind::fast_greedy: return "fast-greedy";
        case DetectorKind::external: return "external";
    }
    return "?";
}

DetectorKind detector_kind_from_string(std::string_view name) {
    if (name == "louvain") return DetectorKind::louvain;
    if (name == "label-prop" || name == "label_prop") return DetectorKind::label_prop;
    if (name == "fast-greedy" || name == "fast_greedy") return DetectorKind::fast_greedy;
    if (name == "external") return DetectorKind::external;
    throw std::invalid_argument("unknown detector '" + std::string(name) + "'");
}

std::string DetectorSpec::display_name() const {
    if (kind != DetectorKind::external) return to_string(kind);
    return command.empty() ? "external" : "external:" + command.front();
}

void DetectorSpec::validate() const {
    if (kind == DetectorKind::external && command.empty()) {
        throw std::invalid_argument("external detector requires a command");
    }
}

double modularity(const Graph& g, const Membership& m) {
    if (m.size() != g.node_count()) {
        throw std::invalid_argument("membership length does not match graph");
    }
    const double edge_total = g.edge_count();
    if (edge_total == 0.0) return 0.0;

    const int k = m.community_count();
    std::vector<double> internal(static_cast<std::size_t>(k), 0.0);
    std::vector<double> degree(static_cast<std::size_t>(k), 0.0);
    for (const Edge& e : g.edges()) {
        const int cu = m[e.first];
        const int cv = m[e.second];
        if (cu == cv) internal[static_cast<std::size_t>(cu)] += 1.0;
        degree[static_cast<std::size_t>(cu)] += 1.0;
        degree[static_cast<std::size_t>(cv)] += 1.0;
    }
    double q = 0.0;
    for (int c = 0; c < k; ++c) {
        const double frac_internal = internal[static_cast<std::size_t>(c)] / edge_total;
        const double frac_degree = degree[static_cast<std::size_t>(c)] / (2.0 * edge_total);
        q += frac_internal - frac_degree * frac_degree;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Louvain multi-level modularity optimization
// ---------------------------------------------------------------------------

namespace {

// Weighted graph used between aggregation levels. Self-loop weight w
// contributes 2w to the node's strength.
struct LevelGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;  // neighbor, weight
    std::vector<double> self_loop;
    double two_m = 0.0;  // total strength
};

LevelGraph level_from_graph(const Graph& g) {
    LevelGraph lg;
    lg.n = g.node_count();
    lg.adj.assign(static_cast<std::size_t>(lg.n), {});
    lg.self_loop.assign(static_cast<std::size_t>(lg.n), 0.0);
    for (const Edge& e : g.edges()) {
        lg.adj[static_cast<std::size_t>(e.first)].push_back({e.second, 1.0});
        lg.adj[static_cast<std::size_t>(e.second)].push_back({e.first, 1.0});
    }
    lg.two_m = 2.0 * g.edge_count();
    return lg;
}

double node_strength(const LevelGraph& lg, int v) {
    double k = 2.0 * lg.self_loop[static_cast<std::size_t>(v)];
    for (const auto& [_, w] : lg.adj[static_cast<std::size_t>(v)]) k += w;
    return k;
}

// One local-move phase starting from the given assignment. Returns the
// node->community assignment and whether any node moved. Visit order is a
// fresh seeded permutation per sweep.
std::pair<std::vector<int>, bool> louvain_one_level(const LevelGraph& lg,
                                                    const std::vector<int>& initial,
                                                    Rng& rng) {
    const int n = lg.n;
    std::vector<int> community = initial;
    std::vector<double> strength(static_cast<std::size_t>(n));
    std::vector<double> community_total(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        strength[static_cast<std::size_t>(v)] = node_strength(lg, v);
        community_total[static_cast<std::size_t>(community[static_cast<std::size_t>(v)])] +=
            strength[static_cast<std::size_t>(v)];
    }

    std::vector<double> weight_to(static_cast<std::size_t>(n), 0.0);
    std::vector<int> touched;
    bool any_move = false;

    bool moved_in_sweep = true;
    // Zero-gain tie moves are allowed, so cap the sweep count as a guard
    // against oscillation; real inputs converge in a handful of sweeps.
    for (int sweep = 0; moved_in_sweep && sweep < 1000; ++sweep) {
        moved_in_sweep = false;
        const std::vector<int> order = rng.permutation(n);
        for (int v : order) {
            const int old_c = community[static_cast<std::size_t>(v)];
            const double k_v = strength[static_cast<std::size_t>(v)];

            touched.clear();
            for (const auto& [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
                const int c = community[static_cast<std::size_t>(u)];
                if (weight_to[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
                weight_to[static_cast<std::size_t>(c)] += w;
            }
            if (weight_to[static_cast<std::size_t>(old_c)] == 0.0) touched.push_back(old_c);

            community_total[static_cast<std::size_t>(old_c)] -= k_v;

            // gain of joining c (up to a constant): w_{v->c} - tot_c * k_v / 2m
            int best_c = old_c;
            double best_gain =
                weight_to[static_cast<std::size_t>(old_c)] -
                community_total[static_cast<std::size_t>(old_c)] * k_v / lg.two_m;
            for (int c : touched) {
                const double gain = weight_to[static_cast<std::size_t>(c)] -
                                    community_total[static_cast<std::size_t>(c)] * k_v / lg.two_m;
                if (gain > best_gain || (gain == best_gain && c < best_c)) {
                    best_gain = gain;
                    best_c = c;
                }
            }

            community_total[static_cast<std::size_t>(best_c)] += k_v;
            community[static_cast<std::size_t>(v)] = best_c;
            if (best_c != old_c) {
                moved_in_sweep = true;
                any_move = true;
            }

            for (int c : touched) weight_to[static_cast<std::size_t>(c)] = 0.0;
        }
    }
    return {std::move(community), any_move};
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& community,
                     std::vector<int>& dense_id) {
    dense_id.assign(static_cast<std::size_t>(lg.n), -1);
    int next = 0;
    for (int v = 0; v < lg.n; ++v) {
        int& id = dense_id[static_cast<std::size_t>(community[static_cast<std::size_t>(v)])];
        if (id < 0) id = next++;
    }

    LevelGraph out;
    out.n = next;
    out.adj.assign(static_cast<std::size_t>(next), {});
    out.self_loop.assign(static_cast<std::size_t>(next), 0.0);
    out.two_m = lg.two_m;

    std::vector<std::map<int, double>> between(static_cast<std::size_t>(next));
    for (int v = 0; v < lg.n; ++v) {
        const int cv = dense_id[static_cast<std::size_t>(community[static_cast<std::size_t>(v)])];
        out.self_loop[static_cast<std::size_t>(cv)] += lg.self_loop[static_cast<std::size_t>(v)];
        for (const auto& [u, w] : lg.adj[static_cast<std::size_t>(v)]) {
            const int cu =
                dense_id[static_cast<std::size_t>(community[static_cast<std::size_t>(u)])];
            if (cu == cv) {
                if (u > v) out.self_loop[static_cast<std::size_t>(cv)] += w;
            } else {
                between[static_cast<std::size_t>(cv)][cu] += w;
            }
        }
    }
    for (int c = 0; c < next; ++c) {
        for (const auto& [other, w] : between[static_cast<std::size_t>(c)]) {
            out.adj[static_cast<std::size_t>(c)].push_back({other, w});
        }
    }
    return out;
}

Membership louvain(const Graph& g, RngSeed seed) {
    const int n = g.node_count();
    std::vector<int> node_to_community(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) node_to_community[static_cast<std::size_t>(v)] = v;
    if (g.edge_count() == 0) return Membership(node_to_community);

    Rng rng(seed);
    LevelGraph lg = level_from_graph(g);
    while (true) {
        auto [community, any_move] = louvain_one_level(lg, rng);
        if (!any_move) break;
        std::vector<int> dense_id;
        lg = aggregate(lg, community, dense_id);
        for (int v = 0; v < n; ++v) {
            const int prev = node_to_community[static_cast<std::size_t>(v)];
            node_to_community[static_cast<std::size_t>(v)] = dense_id[static_cast<std::size_t>(
                community[static_cast<std::size_t>(prev)])];
        }
        if (lg.n == 1) break;
    }
    return Membership(node_to_community);
}

// ---------------------------------------------------------------------------
// Label propagation (asynchronous, seeded order, capped at 100 sweeps)
// ---------------------------------------------------------------------------

Membership label_propagation(const Graph& g, RngSeed seed) {
    const int n = g.node_count();
    const auto adj = g.adjacency();
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;

    Rng rng(seed);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<int> candidates;
    std::vector<int> modes;
    for (int sweep = 0; sweep < 100; ++sweep) {
        const std::vector<int> order = rng.permutation(n);
        int changes = 0;
        for (int v : order) {
            const auto& neighbors = adj[static_cast<std::size_t>(v)];
            if (neighbors.empty()) continue;

            candidates.clear();
            int best = 0;
            for (int u : neighbors) {
                const int label = labels[static_cast<std::size_t>(u)];
                if (count[static_cast<std::size_t>(label)] == 0) candidates.push_back(label);
                best = std::max(best, ++count[static_cast<std::size_t>(label)]);
            }
            modes.clear();
            for (int label : candidates) {
                if (count[static_cast<std::size_t>(label)] == best) modes.push_back(label);
            }
            const int current = labels[static_cast<std::size_t>(v)];
            if (std::find(modes.begin(), modes.end(), current) == modes.end()) {
                labels[static_cast<std::size_t>(v)] =
                    modes[rng.index(modes.size())];
                ++changes;
            }
            for (int label : candidates) count[static_cast<std::size_t>(label)] = 0;
        }
        if (changes == 0) break;
    }
    return Membership(labels);
}

// ---------------------------------------------------------------------------
// Greedy modularity agglomeration, dendrogram cut at maximum Q
// ---------------------------------------------------------------------------

struct MergeStep {
    int into = 0, from = 0;
};

Membership fast_greedy(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> community(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) community[static_cast<std::size_t>(v)] = v;
    const double m = g.edge_count();
    if (m == 0.0) return Membership(community);

    // between[c] maps neighbor community -> connecting edge count.
    std::vector<std::map<int, double>> between(static_cast<std::size_t>(n));
    std::vector<double> degree(static_cast<std::size_t>(n), 0.0);
    for (const Edge& e : g.edges()) {
        between[static_cast<std::size_t>(e.first)][e.second] += 1.0;
        between[static_cast<std::size_t>(e.second)][e.first] += 1.0;
        degree[static_cast<std::size_t>(e.first)] += 1.0;
        degree[static_cast<std::size_t>(e.second)] += 1.0;
    }
    std::vector<bool> alive(static_cast<std::size_t>(n), true);

    double q = 0.0;
    for (int v = 0; v < n; ++v) {
        q -= (degree[static_cast<std::size_t>(v)] / (2.0 * m)) *
             (degree[static_cast<std::size_t>(v)] / (2.0 * m));
    }
    double best_q = q;
    std::size_t best_step = 0;
    std::vector<MergeStep> merges;

    while (true) {
        // Best connected pair; ties by smallest (i, j).
        int pick_i = -1, pick_j = -1;
        double pick_gain = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<std::size_t>(i)]) continue;
            for (const auto& [j, w] : between[static_cast<std::size_t>(i)]) {
                if (j <= i) continue;
                const double gain = w / m - degree[static_cast<std::size_t>(i)] *
                                                degree[static_cast<std::size_t>(j)] /
                                                (2.0 * m * m);
                if (pick_i < 0 || gain > pick_gain) {
                    pick_gain = gain;
                    pick_i = i;
                    pick_j = j;
                }
            }
        }
        if (pick_i < 0) break;  // no connected pairs left

        // Merge pick_j into pick_i.
        merges.push_back({pick_i, pick_j});
        q += pick_gain;
        degree[static_cast<std::size_t>(pick_i)] += degree[static_cast<std::size_t>(pick_j)];
        between[static_cast<std::size_t>(pick_i)].erase(pick_j);
        for (const auto& [k, w] : between[static_cast<std::size_t>(pick_j)]) {
            if (k == pick_i) continue;
            between[static_cast<std::size_t>(pick_i)][k] += w;
            between[static_cast<std::size_t>(k)].erase(pick_j);
            between[static_cast<std::size_t>(k)][pick_i] =
                between[static_cast<std::size_t>(pick_i)][k];
        }
        between[static_cast<std::size_t>(pick_j)].clear();
        alive[static_cast<std::size_t>(pick_j)] = false;

        if (q > best_q) {
            best_q = q;
            best_step = merges.size();
        }
    }

    // Replay merges up to the best cut with a union-find.
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (std::size_t s = 0; s < best_step; ++s) {
        parent[static_cast<std::size_t>(merges[s].from)] = merges[s].into;
    }
    for (int v = 0; v < n; ++v) community[static_cast<std::size_t>(v)] = find(v);
    return Membership(community);
}

}  // namespace

Membership detect(const Graph& g, const DetectorSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case DetectorKind::louvain: return louvain(g, spec.seed);
        case DetectorKind::label_prop: return label_propagation(g, spec.seed);
        case DetectorKind::fast_greedy: return fast_greedy(g);
        case DetectorKind::external:
            return run_external_detector(g, spec.command, spec.seed, spec.timeout_seconds);
    }
    throw std::invalid_argument("unknown detector kind");
}

}  // namespace robin
