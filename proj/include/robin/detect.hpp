#ifndef ROBIN_DETECT_HPP_
#define ROBIN_DETECT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "robin/graph.hpp"
#include "robin/membership.hpp"
#include "robin/rng.hpp"

namespace robin {

enum class DetectorKind { louvain, label_prop, fast_greedy, external };

std::string to_string(DetectorKind kind);
DetectorKind detector_kind_from_string(std::string_view name);

/// Which community detection algorithm to run and how. External detectors are
/// arbitrary programs speaking the edge-list protocol (see
/// run_external_detector); they receive the seed as their last argument.
struct DetectorSpec {
    DetectorKind kind = DetectorKind::louvain;
    std::vector<std::string> command;  // external only: program path + args
    RngSeed seed{0};
    double timeout_seconds = 300.0;  // external only

    static DetectorSpec builtin(DetectorKind kind, RngSeed seed) {
        DetectorSpec spec;
        spec.kind = kind;
        spec.seed = seed;
        return spec;
    }

    static DetectorSpec external(std::vector<std::string> command, RngSeed seed) {
        DetectorSpec spec;
        spec.kind = DetectorKind::external;
        spec.command = std::move(command);
        spec.seed = seed;
        return spec;
    }

    /// Human-readable name for plots and serialized results.
    std::string display_name() const;

    /// Throws std::invalid_argument if an external spec has no command.
    void validate() const;
};

/// Runs the selected algorithm and returns a canonical membership.
/// Deterministic given (graph, spec): node visit orders and tie-breaks come
/// from the seeded stream. Throws DetectorError when an external process
/// fails, exits nonzero, emits malformed output, or times out.
Membership detect(const Graph& g, const DetectorSpec& spec);

/// Newman-Girvan modularity Q = sum_c (e_c/m - (d_c/2m)^2). A graph with no
/// edges scores 0.
double modularity(const Graph& g, const Membership& m);

/// Runs `command... seed` as a child process. The graph is written to its
/// stdin in write_edgelist form ("n m" header plus "u v" lines); the child
/// must print one community id per node, in node order, to stdout and exit 0.
Membership run_external_detector(const Graph& g, const std::vector<std::string>& command,
                                 RngSeed seed, double timeout_seconds = 300.0);

}  // namespace robin

#endif  // ROBIN_DETECT_HPP_
