#include "scorient/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "scorient/errors.hpp"

namespace scorient {

namespace {

void check_vertex(const UndirectedGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw range_error("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(g.vertex_count()) + ")");
}

int count_reachable(int start, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        ++count;
        for (const int y : adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return count;
}

} // namespace

bool is_strongly_connected(const Orientation& o) {
    const int n = o.graph().vertex_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> bwd(static_cast<std::size_t>(n));
    for (int e = 0; e < o.graph().edge_count(); ++e) {
        fwd[static_cast<std::size_t>(o.tail(e))].push_back(o.head(e));
        bwd[static_cast<std::size_t>(o.head(e))].push_back(o.tail(e));
    }
    return count_reachable(0, fwd) == n && count_reachable(0, bwd) == n;
}

std::vector<int> connected_components(const UndirectedGraph& g) {
    std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 1);
    return connected_components(g, keep, nullptr);
}

std::vector<int> connected_components(const UndirectedGraph& g, const std::vector<char>& keep,
                                      int* component_count) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (!keep[static_cast<std::size_t>(start)] || comp[static_cast<std::size_t>(start)] != -1)
            continue;
        comp[static_cast<std::size_t>(start)] = next_id;
        stack.assign(1, start);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const int e : g.incident_edges(x)) {
                const int y = g.other_endpoint(e, x);
                if (keep[static_cast<std::size_t>(y)] &&
                    comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = next_id;
                    stack.push_back(y);
                }
            }
        }
        ++next_id;
    }
    if (component_count) *component_count = next_id;
    return comp;
}

std::vector<int> find_bridges(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> bridges;
    int timer = 0;

    // Iterative lowpoint DFS; frames hold the incident-list cursor so deep
    // graphs cannot blow the call stack.
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto incident = g.incident_edges(f.v);
            if (f.next < incident.size()) {
                const int e = incident[f.next++];
                if (e == f.parent_edge) continue;
                const int w = g.other_endpoint(e, f.v);
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)],
                                 disc[static_cast<std::size_t>(w)]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[static_cast<std::size_t>(up.v)] =
                        std::min(low[static_cast<std::size_t>(up.v)],
                                 low[static_cast<std::size_t>(done.v)]);
                    if (low[static_cast<std::size_t>(done.v)] >
                        disc[static_cast<std::size_t>(up.v)])
                        bridges.push_back(done.parent_edge);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

namespace {

// Unit-capacity augmenting-path engine over an explicit arc list. Arcs beyond
// the orientation's own (the virtual sink arcs of the pair query) are handled
// uniformly. Flow is one bit per arc.
struct UnitFlow {
    int n;
    std::vector<int> tails;
    std::vector<int> heads;
    std::vector<std::vector<int>> out; // arc ids by tail
    std::vector<std::vector<int>> in;  // arc ids by head
    std::vector<std::uint8_t> flow;

    UnitFlow(int vertex_count, std::vector<int> arc_tails, std::vector<int> arc_heads)
        : n(vertex_count), tails(std::move(arc_tails)), heads(std::move(arc_heads)),
          out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n)),
          flow(tails.size(), 0) {
        for (std::size_t a = 0; a < tails.size(); ++a) {
            out[static_cast<std::size_t>(tails[a])].push_back(static_cast<int>(a));
            in[static_cast<std::size_t>(heads[a])].push_back(static_cast<int>(a));
        }
    }

    // One BFS round over the residual graph; augments and returns true iff an
    // s->t residual path exists.
    bool augment(int s, int t) {
        std::vector<int> prev_arc(static_cast<std::size_t>(n), -1);
        std::vector<std::uint8_t> prev_forward(static_cast<std::size_t>(n), 0);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
            const int x = q.front();
            q.pop();
            for (const int a : out[static_cast<std::size_t>(x)]) {
                const int y = heads[static_cast<std::size_t>(a)];
                if (!flow[static_cast<std::size_t>(a)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    prev_arc[static_cast<std::size_t>(y)] = a;
                    prev_forward[static_cast<std::size_t>(y)] = 1;
                    q.push(y);
                }
            }
            for (const int a : in[static_cast<std::size_t>(x)]) {
                const int y = tails[static_cast<std::size_t>(a)];
                if (flow[static_cast<std::size_t>(a)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    prev_arc[static_cast<std::size_t>(y)] = a;
                    prev_forward[static_cast<std::size_t>(y)] = 0;
                    q.push(y);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(t)]) return false;
        int x = t;
        while (x != s) {
            const int a = prev_arc[static_cast<std::size_t>(x)];
            if (prev_forward[static_cast<std::size_t>(x)]) {
                flow[static_cast<std::size_t>(a)] = 1;
                x = tails[static_cast<std::size_t>(a)];
            } else {
                flow[static_cast<std::size_t>(a)] = 0;
                x = heads[static_cast<std::size_t>(a)];
            }
        }
        return true;
    }

    // Extracts one vertex-simple source->target path from the current flow,
    // consuming its arcs. Flow cycles met along the way are consumed and
    // dropped. Requires at least one unit of s->t flow.
    DirectedPath extract_path(int s, int t, const std::vector<int>& arc_to_edge) {
        std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        std::vector<int> verts{s};
        std::vector<int> path_arcs;
        pos[static_cast<std::size_t>(s)] = 0;
        int x = s;
        while (x != t) {
            auto& arcs = out[static_cast<std::size_t>(x)];
            std::size_t& c = cursor[static_cast<std::size_t>(x)];
            int arc = -1;
            while (c < arcs.size()) {
                if (flow[static_cast<std::size_t>(arcs[c])]) {
                    arc = arcs[c];
                    break;
                }
                ++c;
            }
            if (arc == -1)
                throw contract_error("flow decomposition stalled; flow is inconsistent");
            flow[static_cast<std::size_t>(arc)] = 0;
            const int y = heads[static_cast<std::size_t>(arc)];
            if (pos[static_cast<std::size_t>(y)] != -1) {
                // Walked into a flow cycle: discard it and resume from y.
                const std::size_t keep = static_cast<std::size_t>(pos[static_cast<std::size_t>(y)]);
                for (std::size_t i = keep + 1; i < verts.size(); ++i)
                    pos[static_cast<std::size_t>(verts[i])] = -1;
                verts.resize(keep + 1);
                path_arcs.resize(keep);
            } else {
                verts.push_back(y);
                path_arcs.push_back(arc);
                pos[static_cast<std::size_t>(y)] = static_cast<int>(verts.size()) - 1;
            }
            x = y;
        }
        std::vector<int> edge_ids;
        edge_ids.reserve(path_arcs.size());
        for (const int a : path_arcs) edge_ids.push_back(arc_to_edge[static_cast<std::size_t>(a)]);
        return DirectedPath(std::move(verts), std::move(edge_ids));
    }
};

UnitFlow flow_over(const Orientation& o) {
    const int m = o.graph().edge_count();
    std::vector<int> tails(static_cast<std::size_t>(m));
    std::vector<int> heads(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        tails[static_cast<std::size_t>(e)] = o.tail(e);
        heads[static_cast<std::size_t>(e)] = o.head(e);
    }
    return UnitFlow(o.graph().vertex_count(), std::move(tails), std::move(heads));
}

} // namespace

std::optional<TwoReachWitness> two_reaches(const Orientation& o, int u, int v) {
    check_vertex(o.graph(), u);
    check_vertex(o.graph(), v);
    if (u == v)
        return TwoReachWitness{DirectedPath::empty_at(u), DirectedPath::empty_at(v)};

    UnitFlow net = flow_over(o);
    if (!net.augment(u, v)) return std::nullopt;
    if (!net.augment(u, v)) return std::nullopt;

    std::vector<int> arc_to_edge(static_cast<std::size_t>(o.graph().edge_count()));
    for (int e = 0; e < o.graph().edge_count(); ++e)
        arc_to_edge[static_cast<std::size_t>(e)] = e;
    DirectedPath a = net.extract_path(u, v, arc_to_edge);
    DirectedPath b = net.extract_path(u, v, arc_to_edge);
    return TwoReachWitness{std::move(a), std::move(b)};
}

std::vector<int> two_reach_set(const Orientation& o, int v) {
    check_vertex(o.graph(), v);
    std::vector<int> result;
    for (int u = 0; u < o.graph().vertex_count(); ++u)
        if (two_reaches(o, u, v)) result.push_back(u);
    return result;
}

bool has_arc_disjoint_paths_to_pair(const Orientation& o, int u, int s, int t) {
    check_vertex(o.graph(), u);
    check_vertex(o.graph(), s);
    check_vertex(o.graph(), t);
    const int n = o.graph().vertex_count();
    const int m = o.graph().edge_count();
    const int sink = n;
    std::vector<int> tails(static_cast<std::size_t>(m) + 2);
    std::vector<int> heads(static_cast<std::size_t>(m) + 2);
    for (int e = 0; e < m; ++e) {
        tails[static_cast<std::size_t>(e)] = o.tail(e);
        heads[static_cast<std::size_t>(e)] = o.head(e);
    }
    tails[static_cast<std::size_t>(m)] = s;
    heads[static_cast<std::size_t>(m)] = sink;
    tails[static_cast<std::size_t>(m) + 1] = t;
    heads[static_cast<std::size_t>(m) + 1] = sink;
    UnitFlow net(n + 1, std::move(tails), std::move(heads));
    return net.augment(u, sink) && net.augment(u, sink);
}

std::optional<bool> check_lemma2_composition(const Orientation& o, int u, int s, int t, int v) {
    if (!two_reaches(o, s, v) || !two_reaches(o, t, v)) return std::nullopt;
    if (!has_arc_disjoint_paths_to_pair(o, u, s, t)) return std::nullopt;
    return two_reaches(o, u, v).has_value();
}

} // namespace scorient
