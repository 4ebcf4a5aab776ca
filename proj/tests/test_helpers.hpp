#ifndef SCORIENT_TEST_HELPERS_HPP
#define SCORIENT_TEST_HELPERS_HPP

// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's search machinery: reachability is plain
// recursion over arcs, two-reachability enumerates simple path pairs, and
// bridges are found by deleting one edge at a time.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "scorient/graph.hpp"
#include "scorient/orientation.hpp"
#include "scorient/rng.hpp"

namespace scorient::testing {

inline bool brute_reachable(const Orientation& o, int from, int to) {
    const int n = o.graph().vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> dfs = [&](int x) {
        if (x == to) return true;
        seen[static_cast<std::size_t>(x)] = 1;
        for (int e = 0; e < o.graph().edge_count(); ++e)
            if (o.tail(e) == x && !seen[static_cast<std::size_t>(o.head(e))] && dfs(o.head(e)))
                return true;
        return false;
    };
    return dfs(from);
}

inline bool brute_strongly_connected(const Orientation& o) {
    const int n = o.graph().vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !brute_reachable(o, u, v)) return false;
    return true;
}

// All vertex-simple directed u->v paths, as edge-id lists.
inline std::vector<std::vector<int>> all_simple_paths(const Orientation& o, int u, int v) {
    std::vector<std::vector<int>> found;
    std::vector<int> current;
    std::vector<char> used(static_cast<std::size_t>(o.graph().vertex_count()), 0);
    std::function<void(int)> dfs = [&](int x) {
        if (x == v) {
            found.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(x)] = 1;
        for (int e = 0; e < o.graph().edge_count(); ++e) {
            if (o.tail(e) != x || used[static_cast<std::size_t>(o.head(e))]) continue;
            current.push_back(e);
            dfs(o.head(e));
            current.pop_back();
        }
        used[static_cast<std::size_t>(x)] = 0;
    };
    dfs(u);
    return found;
}

inline bool brute_two_reaches(const Orientation& o, int u, int v) {
    if (u == v) return true;
    const auto paths = all_simple_paths(o, u, v);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            std::set<int> arcs(paths[i].begin(), paths[i].end());
            if (std::none_of(paths[j].begin(), paths[j].end(),
                             [&](int e) { return arcs.contains(e); }))
                return true;
        }
    }
    return false;
}

inline int brute_component_count(const UndirectedGraph& g, int skip_edge = -1) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    std::function<void(int)> dfs = [&](int x) {
        seen[static_cast<std::size_t>(x)] = 1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e == skip_edge) continue;
            const Edge& ed = g.edge(e);
            int y = -1;
            if (ed.a == x) y = ed.b;
            if (ed.b == x) y = ed.a;
            if (y != -1 && !seen[static_cast<std::size_t>(y)]) dfs(y);
        }
    };
    for (int v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            ++count;
            dfs(v);
        }
    }
    return count;
}

inline std::vector<int> brute_bridges(const UndirectedGraph& g) {
    std::vector<int> result;
    const int base = brute_component_count(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (brute_component_count(g, e) > base) result.push_back(e);
    return result;
}

inline bool is_connected(const UndirectedGraph& g) {
    return g.vertex_count() <= 1 || brute_component_count(g) == 1;
}

// All labeled simple graphs on n vertices, one per subset of vertex pairs.
inline void for_each_graph(int n, const std::function<void(const UndirectedGraph&)>& fn) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back(Edge{a, b});
    const std::uint64_t total = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) edges.push_back(pairs[i]);
        fn(UndirectedGraph(n, std::move(edges)));
    }
}

// Random vertex-simple directed path (possibly empty), built by a plain
// random walk over out-arcs.
inline DirectedPath random_simple_path(const Orientation& o, Rng& rng) {
    const int n = o.graph().vertex_count();
    int cur = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> verts{cur};
    std::vector<int> edges;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(cur)] = 1;
    for (;;) {
        std::vector<int> next;
        for (int e = 0; e < o.graph().edge_count(); ++e)
            if (o.tail(e) == cur && !used[static_cast<std::size_t>(o.head(e))])
                next.push_back(e);
        if (next.empty() || (!edges.empty() && rand_below(rng, 3) == 0)) break;
        const int e = next[rand_below(rng, next.size())];
        cur = o.head(e);
        used[static_cast<std::size_t>(cur)] = 1;
        verts.push_back(cur);
        edges.push_back(e);
    }
    return DirectedPath(std::move(verts), std::move(edges));
}

inline Orientation random_orientation(const UndirectedGraph& g, Rng& rng) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.edge_count()));
    for (auto& bit : bits) bit = rand_bit(rng) ? 1 : 0;
    return Orientation(g, std::move(bits));
}

// Rejection-samples a strongly connected orientation; the caller must pass a
// graph known to admit one.
inline Orientation random_strong_orientation(const UndirectedGraph& g, Rng& rng) {
    for (;;) {
        Orientation o = random_orientation(g, rng);
        if (brute_strongly_connected(o)) return o;
    }
}

} // namespace scorient::testing

#endif
