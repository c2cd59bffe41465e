#ifndef ROBIN_GRAPH_IO_HPP_
#define ROBIN_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "robin/graph.hpp"

namespace robin {

/// Parses the GML subset `graph [ node [ id .. label .. value .. ] edge
/// [ source .. target .. ] ]`. Unknown keys and nested blocks are skipped,
/// `#` comments are ignored. Node ids need not be contiguous; nodes are
/// re-indexed 0..n-1 in file order. When every node carries a `value`
/// attribute it is stored as the ground-truth community id. The result is
/// already simplified (loops and duplicate edges dropped).
///
/// Throws ParseError for malformed documents (with the offending line) and
/// ReferenceError for edges naming an undeclared node id.
Graph parse_gml(std::string_view text);
Graph parse_gml(std::istream& in);

/// Parses a plain edge list: whitespace-separated token pairs, one or more
/// pairs per line, tokens being arbitrary labels mapped to dense indices in
/// first-appearance order. A line with an odd token count is a ParseError.
///
/// Files produced by write_edgelist are recognized by their "n m" header
/// (first line = two integers, followed by exactly m integer pairs below n)
/// and parsed with the declared node count, so the write/parse round trip is
/// exact, isolated nodes included.
Graph parse_edgelist(std::string_view text);
Graph parse_edgelist(std::istream& in);

/// Canonical edge-list serialization: "n m\n" then one "u v" line per edge
/// with u < v, sorted. Round-trips through parse_edgelist.
std::string write_edgelist(const Graph& g);

}  // namespace robin

#endif  // ROBIN_GRAPH_IO_HPP_
