#include "scorient/reversal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "scorient/errors.hpp"

namespace scorient {

namespace {

void require_feasible(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return;
    const std::vector<int> comp = connected_components(g);
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] != 0)
            throw infeasible_error("graph is disconnected: vertices 0 and " +
                                   std::to_string(v) + " lie in different components");
    }
    const std::vector<int> bridges = find_bridges(g);
    if (!bridges.empty()) {
        const Edge& e = g.edge(bridges.front());
        throw infeasible_error("graph has a bridge: edge " + std::to_string(bridges.front()) +
                               " {" + std::to_string(e.a) + ", " + std::to_string(e.b) + "}");
    }
}

Orientation dfs_strong_orientation(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m), 0);
    if (n == 0) return Orientation(g, std::move(bits));

    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<char> edge_used(static_cast<std::size_t>(m), 0);

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    visited[0] = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto incident = g.incident_edges(f.v);
        if (f.next >= incident.size()) {
            stack.pop_back();
            continue;
        }
        const int e = incident[f.next++];
        if (edge_used[static_cast<std::size_t>(e)]) continue;
        edge_used[static_cast<std::size_t>(e)] = 1;
        const int w = g.other_endpoint(e, f.v);
        // Orient f.v -> w. For tree edges that is root-to-leaf; for the
        // remaining edges w is an ancestor, so the arc climbs back up.
        bits[static_cast<std::size_t>(e)] = g.edge(e).a == f.v ? 0 : 1;
        if (!visited[static_cast<std::size_t>(w)]) {
            visited[static_cast<std::size_t>(w)] = 1;
            stack.push_back({w, 0});
        }
    }
    return Orientation(g, std::move(bits));
}

// Distance from every vertex to v along the arcs (reverse BFS). -1 when v is
// unreachable.
std::vector<int> distances_to(const Orientation& o, int v) {
    std::vector<int> dist(static_cast<std::size_t>(o.graph().vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(v)] = 0;
    q.push(v);
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (const int e : o.in_edges(x)) {
            const int y = o.tail(e);
            if (dist[static_cast<std::size_t>(y)] == -1) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

// Shortest u->v path whose vertex sequence is lexicographically smallest
// among all shortest ones. dist_to_v must come from distances_to(o, v) and u
// must be able to reach v.
DirectedPath lex_min_shortest_path(const Orientation& o, int u, int v,
                                   const std::vector<int>& dist_to_v) {
    std::vector<int> verts{u};
    std::vector<int> edges;
    int cur = u;
    while (cur != v) {
        int best_next = -1;
        int best_edge = -1;
        for (const int e : o.out_edges(cur)) {
            const int w = o.head(e);
            if (dist_to_v[static_cast<std::size_t>(w)] ==
                    dist_to_v[static_cast<std::size_t>(cur)] - 1 &&
                (best_next == -1 || w < best_next)) {
                best_next = w;
                best_edge = e;
            }
        }
        verts.push_back(best_next);
        edges.push_back(best_edge);
        cur = best_next;
    }
    return DirectedPath(std::move(verts), std::move(edges));
}

// Vertex ids ordered the way the selection rule scans targets.
std::vector<int> targets_by_indegree(const Orientation& o) {
    std::vector<int> order(static_cast<std::size_t>(o.graph().vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (o.indegree(x) != o.indegree(y)) return o.indegree(x) > o.indegree(y);
        return x < y;
    });
    return order;
}

std::vector<int> sources_by_indegree(const Orientation& o) {
    std::vector<int> order(static_cast<std::size_t>(o.graph().vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (o.indegree(x) != o.indegree(y)) return o.indegree(x) < o.indegree(y);
        return x < y;
    });
    return order;
}

int min_indegree(const Orientation& o) {
    int best = 0;
    for (int v = 0; v < o.graph().vertex_count(); ++v)
        best = v == 0 ? o.indegree(v) : std::min(best, o.indegree(v));
    return best;
}

} // namespace

Orientation initial_strong_orientation(const UndirectedGraph& g) {
    require_feasible(g);
    Orientation o = dfs_strong_orientation(g);
    if (!is_strongly_connected(o))
        throw contract_error("DFS orientation failed to be strongly connected");
    return o;
}

std::optional<DirectedPath> find_reversible_path(const Orientation& o) {
    const int n = o.graph().vertex_count();
    if (n == 0) return std::nullopt;
    const int floor = min_indegree(o);
    const std::vector<int> targets = targets_by_indegree(o);
    const std::vector<int> sources = sources_by_indegree(o);
    for (const int v : targets) {
        if (o.indegree(v) < floor + 2) break;
        const std::vector<int> dist = distances_to(o, v);
        for (const int u : sources) {
            if (o.indegree(u) >= o.indegree(v) - 1) break;
            if (dist[static_cast<std::size_t>(u)] <= 0) continue; // unreachable or u == v
            return lex_min_shortest_path(o, u, v, dist);
        }
    }
    return std::nullopt;
}

std::optional<DirectedPath> find_strongly_reversible_path(const Orientation& o) {
    if (!is_strongly_connected(o))
        throw contract_error("find_strongly_reversible_path requires a strongly "
                             "connected orientation");
    const int n = o.graph().vertex_count();
    if (n == 0) return std::nullopt;
    const int floor = min_indegree(o);
    const std::vector<int> targets = targets_by_indegree(o);
    const std::vector<int> sources = sources_by_indegree(o);
    for (const int v : targets) {
        if (o.indegree(v) < floor + 2) break;
        for (const int u : sources) {
            if (o.indegree(u) >= o.indegree(v) - 1) break;
            // Two arc-disjoint u->v paths need two distinct out-arcs at u.
            if (o.outdegree(u) < 2) continue;
            if (!two_reaches(o, u, v)) continue;
            const std::vector<int> dist = distances_to(o, v);
            return lex_min_shortest_path(o, u, v, dist);
        }
    }
    return std::nullopt;
}

namespace {

ReversalResult run_loop(Orientation o,
                        const std::function<std::optional<DirectedPath>(const Orientation&)>&
                            find_next) {
    ReversalTrace trace{o, o, {}};
    int k = 0;
    for (std::optional<DirectedPath> p = find_next(o); p; p = find_next(o)) {
        trace.steps.push_back(TraceStep{k, p->source(), p->target(), p->vertices(),
                                        o.indegree(p->source()), o.indegree(p->target())});
        o = reverse_path(o, *p);
        ++k;
    }
    trace.final = o;
    return ReversalResult{std::move(o), std::move(trace)};
}

} // namespace

ReversalResult path_reversal(const UndirectedGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.edge_count()));
    for (auto& bit : bits) bit = rand_bit(rng) ? 1 : 0;
    return run_loop(Orientation(g, std::move(bits)),
                    [](const Orientation& o) { return find_reversible_path(o); });
}

ReversalResult sc_path_reversal(const UndirectedGraph& g, std::uint64_t seed,
                                const ScOptions& options) {
    require_feasible(g);
    Orientation initial = dfs_strong_orientation(g);
    if (options.random_initial && g.edge_count() > 0) {
        Rng rng(seed);
        const int shift = std::min(g.edge_count(), 20);
        const std::uint64_t attempts = 10ull * (1ull << shift);
        for (std::uint64_t i = 0; i < attempts; ++i) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.edge_count()));
            for (auto& bit : bits) bit = rand_bit(rng) ? 1 : 0;
            Orientation candidate(g, std::move(bits));
            if (is_strongly_connected(candidate)) {
                initial = std::move(candidate);
                break;
            }
        }
    }
    if (!is_strongly_connected(initial))
        throw contract_error("initial orientation is not strongly connected");
    return run_loop(std::move(initial),
                    [](const Orientation& o) { return find_strongly_reversible_path(o); });
}

bool check_lemma1(const Orientation& o, const DirectedPath& p) {
    if (!is_strongly_connected(o))
        throw contract_error("check_lemma1 requires a strongly connected orientation");
    if (!p.valid_under(o))
        throw contract_error("check_lemma1 requires a path valid under the orientation");
    const bool still_strong = is_strongly_connected(reverse_path(o, p));
    const bool two_reach = two_reaches(o, p.source(), p.target()).has_value();
    return still_strong == two_reach;
}

DirectedPath sample_simple_path(const Orientation& o, Rng& rng) {
    const int n = o.graph().vertex_count();
    if (n == 0) throw contract_error("cannot sample a path in an empty graph");
    int cur = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> verts{cur};
    std::vector<int> edges;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(cur)] = 1;
    while (true) {
        std::vector<int> candidates;
        for (const int e : o.out_edges(cur))
            if (!used[static_cast<std::size_t>(o.head(e))]) candidates.push_back(e);
        if (candidates.empty()) break;
        if (!edges.empty() && rand_below(rng, 3) == 0) break;
        const int e = candidates[rand_below(rng, candidates.size())];
        cur = o.head(e);
        used[static_cast<std::size_t>(cur)] = 1;
        verts.push_back(cur);
        edges.push_back(e);
    }
    return DirectedPath(std::move(verts), std::move(edges));
}

std::string trace_to_text(const ReversalTrace& trace) {
    std::ostringstream out;
    out << orientation_to_text(trace.initial);
    for (const TraceStep& s : trace.steps) {
        out << "step=" << s.index << " u=" << s.u << " v=" << s.v << " path=";
        for (std::size_t i = 0; i < s.path_vertices.size(); ++i) {
            if (i) out << ',';
            out << s.path_vertices[i];
        }
        out << " din_u=" << s.din_u_before << " din_v=" << s.din_v_before << '\n';
    }
    out << orientation_to_text(trace.final);
    return out.str();
}

} // namespace scorient
