#include "scorient/graph.hpp"

#include <charconv>
#include <sstream>

#include "scorient/errors.hpp"

namespace scorient {

std::uint64_t UndirectedGraph::pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw range_error("vertex count must be non-negative");
    incident_.assign(static_cast<std::size_t>(n_), {});
    edge_ids_.reserve(edges_.size());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto [a, b] = edges_[static_cast<std::size_t>(e)];
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw range_error("edge {" + std::to_string(a) + ", " + std::to_string(b) +
                              "} has an endpoint outside [0, " + std::to_string(n_) + ")");
        if (a == b)
            throw validation_error("self-loop {" + std::to_string(a) + ", " +
                                   std::to_string(b) + "}");
        if (!edge_ids_.emplace(pair_key(a, b), e).second)
            throw validation_error("duplicate edge {" + std::to_string(a) + ", " +
                                   std::to_string(b) + "}");
        incident_[static_cast<std::size_t>(a)].push_back(e);
        incident_[static_cast<std::size_t>(b)].push_back(e);
    }
}

std::span<const int> UndirectedGraph::incident_edges(int v) const {
    if (v < 0 || v >= n_)
        throw range_error("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(n_) + ")");
    return incident_[static_cast<std::size_t>(v)];
}

int UndirectedGraph::other_endpoint(int e, int v) const {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    return ed.a == v ? ed.b : ed.a;
}

bool UndirectedGraph::has_edge(int a, int b) const {
    return edge_id(a, b) != -1;
}

int UndirectedGraph::edge_id(int a, int b) const {
    if (a == b) return -1;
    const auto it = edge_ids_.find(pair_key(a, b));
    return it == edge_ids_.end() ? -1 : it->second;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view token, int& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

UndirectedGraph parse_graph(std::string_view text) {
    bool have_header = false;
    int n = 0;
    std::vector<Edge> edges;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (!have_header) {
            if (!line.starts_with("n=") || !parse_int(line.substr(2), n))
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected header 'n=<int>'");
            if (n < 0)
                throw range_error("line " + std::to_string(line_no) +
                                  ": vertex count must be non-negative");
            have_header = true;
            continue;
        }

        const std::size_t sep = line.find_first_of(" \t");
        int a = 0;
        int b = 0;
        if (sep == std::string_view::npos || !parse_int(line.substr(0, sep), a) ||
            !parse_int(trim(line.substr(sep)), b))
            throw parse_error("line " + std::to_string(line_no) + ": expected '<a> <b>'");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw range_error("line " + std::to_string(line_no) + ": edge {" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              "} has an endpoint outside [0, " + std::to_string(n) + ")");
        if (a == b)
            throw validation_error("line " + std::to_string(line_no) + ": self-loop {" +
                                   std::to_string(a) + ", " + std::to_string(b) + "}");
        edges.push_back(Edge{a, b});
    }
    if (!have_header) throw parse_error("missing header line 'n=<int>'");

    return UndirectedGraph(n, std::move(edges));
}

std::string to_edge_list_text(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
    return out.str();
}

} // namespace scorient
