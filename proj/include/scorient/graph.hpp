#ifndef SCORIENT_GRAPH_HPP
#define SCORIENT_GRAPH_HPP

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scorient {

// Unordered endpoint pair, kept in the order it was listed.
struct Edge {
    int a;
    int b;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1. Edge ids are the
// positions in the edge list, which every orientation, trace and output
// format refers back to. Immutable after construction.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    // Validates: endpoints in range, no self-loops, no parallel edges.
    UndirectedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids incident to v, in edge-list order.
    std::span<const int> incident_edges(int v) const;

    int other_endpoint(int e, int v) const;
    int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }
    bool has_edge(int a, int b) const;
    // Edge id of the pair {a, b}, or -1 when absent.
    int edge_id(int a, int b) const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    static std::uint64_t pair_key(int a, int b);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<std::uint64_t, int> edge_ids_;
};

// Reads the edge-list document format:
//   n=<int>            header (first non-blank, non-comment line)
//   <a> <b>            one edge per line, 0 <= a,b < n
//   # ...              comment line
// Throws parse_error (with line number), validation_error or range_error.
UndirectedGraph parse_graph(std::string_view text);

// Inverse of parse_graph, up to comments and blank lines.
std::string to_edge_list_text(const UndirectedGraph& g);

} // namespace scorient

#endif
