// Example external detector speaking the edge-list protocol: reads "n m" plus
// edge lines from stdin, takes the seed as its last argument, prints one
// community id per node. Wraps the builtin Louvain so tests can check that a
// wrapped detector behaves identically to a direct call.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "robin/detect.hpp"
#include "robin/graph_io.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[argc - 1], nullptr, 10);

    try {
        const robin::Graph g = robin::parse_edgelist(std::cin);
        const robin::Membership m = robin::detect(
            g, robin::DetectorSpec::builtin(robin::DetectorKind::louvain,
                                            robin::RngSeed{seed}));
        for (int v = 0; v < m.size(); ++v) std::cout << m[v] << '\n';
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
