#ifndef SCORIENT_ORIENTATION_HPP
#define SCORIENT_ORIENTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scorient/graph.hpp"

namespace scorient {

// Direction assignment for every edge of a fixed underlying graph. Stored as
// one bit per edge id: bit clear means the arc runs edge.a -> edge.b as
// listed, bit set means the reverse. The graph must outlive the orientation.
// Immutable after construction; reversal produces a new value.
class Orientation {
public:
    Orientation(const UndirectedGraph& g, std::vector<std::uint8_t> reversed);

    // Orientation whose bit vector is the binary expansion of mask
    // (bit i = edge i). Requires edge_count() <= 63.
    static Orientation from_mask(const UndirectedGraph& g, std::uint64_t mask);

    const UndirectedGraph& graph() const { return *graph_; }
    int tail(int e) const;
    int head(int e) const;
    bool is_reversed(int e) const { return reversed_[static_cast<std::size_t>(e)] != 0; }
    const std::vector<std::uint8_t>& bits() const { return reversed_; }

    int indegree(int v) const;
    int outdegree(int v) const;

    // Edge ids whose tail is v.
    std::span<const int> out_edges(int v) const;
    // Edge ids whose head is v.
    std::span<const int> in_edges(int v) const;

    friend bool operator==(const Orientation& x, const Orientation& y) {
        return x.graph_ == y.graph_ && x.reversed_ == y.reversed_;
    }

private:
    void check_vertex(int v) const;

    const UndirectedGraph* graph_ = nullptr;
    std::vector<std::uint8_t> reversed_;
    std::vector<int> indegree_;
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
};

// Vertex-simple directed path, stored as its vertex sequence plus the edge
// ids it traverses. An empty path is a single vertex and no arcs.
class DirectedPath {
public:
    static DirectedPath empty_at(int v);
    DirectedPath(std::vector<int> vertices, std::vector<int> edges);

    int source() const { return vertices_.front(); }
    int target() const { return vertices_.back(); }
    int arc_count() const { return static_cast<int>(edges_.size()); }
    bool is_empty() const { return edges_.empty(); }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& edges() const { return edges_; }

    // True iff every arc exists with this traversal direction under o and the
    // endpoints chain up.
    bool valid_under(const Orientation& o) const;

private:
    std::vector<int> vertices_;
    std::vector<int> edges_;
};

// Indegrees in non-increasing order; the object compared lexicographically.
class IndegreeSequence {
public:
    IndegreeSequence() = default;
    explicit IndegreeSequence(std::vector<int> values); // sorts non-increasing

    std::size_t size() const { return values_.size(); }
    const std::vector<int>& values() const { return values_; }
    std::string to_csv() const; // "2,2,1,1"

    friend bool operator==(const IndegreeSequence&, const IndegreeSequence&) = default;

private:
    std::vector<int> values_;
};

int indegree(const Orientation& o, int v);
IndegreeSequence indegree_sequence(const Orientation& o);

// -1, 0 or +1; sequences must have equal length.
int lex_compare(const IndegreeSequence& s, const IndegreeSequence& t);

// New orientation equal to o with every arc of p flipped. p must be a valid
// directed path under o.
Orientation reverse_path(const Orientation& o, const DirectedPath& p);

// Rebuilds a path from its vertex sequence (as recorded in traces); every
// consecutive pair must be an edge of the graph directed that way under o.
DirectedPath path_from_vertices(const Orientation& o, const std::vector<int>& vertices);

// Output document: one line "<i> <tail> <head>" per edge id, then a trailing
// "indegree_sequence=<csv>" line.
std::string orientation_to_text(const Orientation& o);

// Reads orientation_to_text output back against its underlying graph.
Orientation parse_orientation_text(const UndirectedGraph& g, std::string_view text);

} // namespace scorient

#endif
