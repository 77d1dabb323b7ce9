#ifndef SPECCOL_IO_HPP
#define SPECCOL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "speccol/graph.hpp"
#include "speccol/hypergraph.hpp"

namespace speccol {

// Parsed input plus the original labels in dense-index order.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;
};

struct ParsedHypergraph {
    LinearHypergraph hypergraph;
    std::vector<long long> labels;
};

// Edge-list format: one "u v [w]" per line, integer labels, optional
// positive weight (default 1), '#' starts a comment. Labels are mapped to
// a dense range in first-appearance order.
ParsedGraph parse_graph_file(const std::string& path);
ParsedGraph parse_graph_stream(std::istream& in, const std::string& name);

// One hyperedge per line as space-separated integer labels; uniformity is
// inferred from the first hyperedge and enforced.
ParsedHypergraph parse_hypergraph_file(const std::string& path);
ParsedHypergraph parse_hypergraph_stream(std::istream& in, const std::string& name);

// 64-bit FNV-1a over raw bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

} // namespace speccol

#endif // SPECCOL_IO_HPP
