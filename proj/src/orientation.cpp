#include "scorient/orientation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "scorient/errors.hpp"

namespace scorient {

Orientation::Orientation(const UndirectedGraph& g, std::vector<std::uint8_t> reversed)
    : graph_(&g), reversed_(std::move(reversed)) {
    const int m = g.edge_count();
    if (static_cast<int>(reversed_.size()) != m)
        throw contract_error("orientation needs exactly one direction bit per edge");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    indegree_.assign(n, 0);
    out_edges_.assign(n, {});
    in_edges_.assign(n, {});
    for (int e = 0; e < m; ++e) {
        const int h = head(e);
        const int t = tail(e);
        ++indegree_[static_cast<std::size_t>(h)];
        out_edges_[static_cast<std::size_t>(t)].push_back(e);
        in_edges_[static_cast<std::size_t>(h)].push_back(e);
    }
}

Orientation Orientation::from_mask(const UndirectedGraph& g, std::uint64_t mask) {
    const int m = g.edge_count();
    if (m > 63) throw contract_error("from_mask supports at most 63 edges");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        bits[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>((mask >> e) & 1u);
    return Orientation(g, std::move(bits));
}

int Orientation::tail(int e) const {
    const Edge& ed = graph_->edge(e);
    return is_reversed(e) ? ed.b : ed.a;
}

int Orientation::head(int e) const {
    const Edge& ed = graph_->edge(e);
    return is_reversed(e) ? ed.a : ed.b;
}

void Orientation::check_vertex(int v) const {
    if (v < 0 || v >= graph_->vertex_count())
        throw range_error("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(graph_->vertex_count()) + ")");
}

int Orientation::indegree(int v) const {
    check_vertex(v);
    return indegree_[static_cast<std::size_t>(v)];
}

int Orientation::outdegree(int v) const {
    check_vertex(v);
    return static_cast<int>(out_edges_[static_cast<std::size_t>(v)].size());
}

std::span<const int> Orientation::out_edges(int v) const {
    check_vertex(v);
    return out_edges_[static_cast<std::size_t>(v)];
}

std::span<const int> Orientation::in_edges(int v) const {
    check_vertex(v);
    return in_edges_[static_cast<std::size_t>(v)];
}

DirectedPath DirectedPath::empty_at(int v) { return DirectedPath({v}, {}); }

DirectedPath::DirectedPath(std::vector<int> vertices, std::vector<int> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty() || vertices_.size() != edges_.size() + 1)
        throw contract_error("directed path needs k+1 vertices for k arcs");
    std::unordered_set<int> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size())
        throw contract_error("directed path must be vertex-simple");
}

bool DirectedPath::valid_under(const Orientation& o) const {
    const UndirectedGraph& g = o.graph();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const int e = edges_[i];
        if (e < 0 || e >= g.edge_count()) return false;
        if (o.tail(e) != vertices_[i] || o.head(e) != vertices_[i + 1]) return false;
    }
    return vertices_.front() >= 0 && vertices_.front() < g.vertex_count() &&
           vertices_.back() >= 0 && vertices_.back() < g.vertex_count();
}

IndegreeSequence::IndegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<int>());
}

std::string IndegreeSequence::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

int indegree(const Orientation& o, int v) { return o.indegree(v); }

IndegreeSequence indegree_sequence(const Orientation& o) {
    std::vector<int> values(static_cast<std::size_t>(o.graph().vertex_count()));
    for (int v = 0; v < o.graph().vertex_count(); ++v)
        values[static_cast<std::size_t>(v)] = o.indegree(v);
    return IndegreeSequence(std::move(values));
}

int lex_compare(const IndegreeSequence& s, const IndegreeSequence& t) {
    if (s.size() != t.size())
        throw contract_error("lex_compare requires sequences of equal length");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.values()[i] < t.values()[i]) return -1;
        if (s.values()[i] > t.values()[i]) return 1;
    }
    return 0;
}

Orientation reverse_path(const Orientation& o, const DirectedPath& p) {
    if (!p.valid_under(o))
        throw contract_error("path is not a directed path under this orientation");
    std::vector<std::uint8_t> bits = o.bits();
    for (const int e : p.edges())
        bits[static_cast<std::size_t>(e)] ^= 1u;
    return Orientation(o.graph(), std::move(bits));
}

DirectedPath path_from_vertices(const Orientation& o, const std::vector<int>& vertices) {
    if (vertices.empty()) throw contract_error("a path needs at least one vertex");
    std::vector<int> edges;
    edges.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const int e = o.graph().edge_id(vertices[i], vertices[i + 1]);
        if (e == -1 || o.tail(e) != vertices[i])
            throw contract_error("no arc " + std::to_string(vertices[i]) + "->" +
                                 std::to_string(vertices[i + 1]) +
                                 " under this orientation");
        edges.push_back(e);
    }
    return DirectedPath(vertices, std::move(edges));
}

std::string orientation_to_text(const Orientation& o) {
    std::ostringstream out;
    for (int e = 0; e < o.graph().edge_count(); ++e)
        out << e << ' ' << o.tail(e) << ' ' << o.head(e) << '\n';
    out << "indegree_sequence=" << indegree_sequence(o).to_csv() << '\n';
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Orientation parse_orientation_text(const UndirectedGraph& g, std::string_view text) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);

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
        if (line.starts_with("indegree_sequence=")) continue;

        std::istringstream in{std::string(line)};
        int e = 0;
        int t = 0;
        int h = 0;
        if (!(in >> e >> t >> h))
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected '<edge> <tail> <head>'");
        if (e < 0 || e >= g.edge_count())
            throw range_error("line " + std::to_string(line_no) + ": edge id " +
                              std::to_string(e) + " outside [0, " +
                              std::to_string(g.edge_count()) + ")");
        if (seen[static_cast<std::size_t>(e)])
            throw validation_error("line " + std::to_string(line_no) + ": edge " +
                                   std::to_string(e) + " directed twice");
        const Edge& ed = g.edge(e);
        if (t == ed.a && h == ed.b)
            bits[static_cast<std::size_t>(e)] = 0;
        else if (t == ed.b && h == ed.a)
            bits[static_cast<std::size_t>(e)] = 1;
        else
            throw validation_error("line " + std::to_string(line_no) + ": arc " +
                                   std::to_string(t) + "->" + std::to_string(h) +
                                   " does not match edge " + std::to_string(e));
        seen[static_cast<std::size_t>(e)] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen[static_cast<std::size_t>(e)])
            throw validation_error("edge " + std::to_string(e) + " has no direction");
    return Orientation(g, std::move(bits));
}

} // namespace scorient
