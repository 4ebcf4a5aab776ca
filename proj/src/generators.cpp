#include "scorient/generators.hpp"

#include <algorithm>
#include <numeric>

#include "scorient/errors.hpp"
#include "scorient/rng.hpp"

namespace scorient {

GraphFamily parse_family(const std::string& name) {
    if (name == "random_bridgeless") return GraphFamily::random_bridgeless;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "complete") return GraphFamily::complete;
    if (name == "wheel") return GraphFamily::wheel;
    if (name == "theta") return GraphFamily::theta;
    if (name == "two_cliques_bridged") return GraphFamily::two_cliques_bridged;
    throw param_error("unknown graph family '" + name + "'");
}

std::string family_name(GraphFamily family) {
    switch (family) {
    case GraphFamily::random_bridgeless: return "random_bridgeless";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::wheel: return "wheel";
    case GraphFamily::theta: return "theta";
    case GraphFamily::two_cliques_bridged: return "two_cliques_bridged";
    }
    throw param_error("unknown graph family");
}

namespace {

UndirectedGraph make_cycle(int n) {
    if (n < 3) throw param_error("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph make_complete(int n) {
    if (n < 1) throw param_error("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
    return UndirectedGraph(n, std::move(edges));
}

// Rim cycle on 0..n-2 plus hub n-1 joined to every rim vertex.
UndirectedGraph make_wheel(int n) {
    if (n < 4) throw param_error("wheel needs n >= 4");
    std::vector<Edge> edges;
    const int rim = n - 1;
    for (int i = 0; i < rim; ++i) edges.push_back(Edge{i, (i + 1) % rim});
    for (int i = 0; i < rim; ++i) edges.push_back(Edge{i, n - 1});
    return UndirectedGraph(n, std::move(edges));
}

// Terminals 0 and 1 joined by three internally disjoint paths; the n-2
// internal vertices are split as evenly as possible, so at most one path is
// a bare edge and no parallel edges arise.
UndirectedGraph make_theta(int n) {
    if (n < 4) throw param_error("theta needs n >= 4");
    std::vector<Edge> edges;
    int next = 2;
    const int internal = n - 2;
    for (int p = 0; p < 3; ++p) {
        const int len = internal / 3 + (p < internal % 3 ? 1 : 0);
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.push_back(Edge{prev, next});
            prev = next++;
        }
        edges.push_back(Edge{prev, 1});
    }
    return UndirectedGraph(n, std::move(edges));
}

// Cliques on [0, n/2) and [n/2, n) joined by the single edge {0, n/2}; that
// edge is the one bridge, making this the negative-control family.
UndirectedGraph make_two_cliques_bridged(int n) {
    if (n < 6) throw param_error("two_cliques_bridged needs n >= 6");
    const int k = n / 2;
    std::vector<Edge> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) edges.push_back(Edge{a, b});
    for (int a = k; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
    edges.push_back(Edge{0, k});
    return UndirectedGraph(n, std::move(edges));
}

struct EdgeSet {
    std::vector<std::vector<char>> adj;
    std::vector<Edge> edges;

    explicit EdgeSet(int n) : adj(static_cast<std::size_t>(n), std::vector<char>(n, 0)) {}

    bool has(int a, int b) const { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }

    void add(int a, int b) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
        edges.push_back(Edge{a, b});
    }
};

UndirectedGraph make_random_bridgeless(int n, int m, std::uint64_t seed) {
    if (n < 3) throw param_error("random_bridgeless needs n >= 3");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n || m > max_edges)
        throw param_error("random_bridgeless needs m in [n, n(n-1)/2] = [" +
                          std::to_string(n) + ", " + std::to_string(max_edges) + "], got " +
                          std::to_string(m));

    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[rand_below(rng, static_cast<std::uint64_t>(i) + 1)]);

    const int ear_count = m - n;
    const int cycle_len =
        ear_count == 0 ? n : 3 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n) - 2));

    EdgeSet es(n);
    std::vector<int> active(perm.begin(), perm.begin() + cycle_len);
    std::vector<int> pool(perm.begin() + cycle_len, perm.end());
    std::size_t pool_next = 0;
    for (int i = 0; i < cycle_len; ++i)
        es.add(active[static_cast<std::size_t>(i)],
               active[static_cast<std::size_t>((i + 1) % cycle_len)]);

    // Each ear contributes one to m-n regardless of how many fresh vertices
    // it threads through, so distribute the n-cycle_len leftover vertices
    // over the m-n ears at random.
    std::vector<int> ear_fresh(static_cast<std::size_t>(ear_count), 0);
    for (int i = 0; i < n - cycle_len; ++i)
        ++ear_fresh[rand_below(rng, static_cast<std::uint64_t>(ear_count))];

    std::vector<int> queue(ear_fresh.begin(), ear_fresh.end());
    std::size_t qhead = 0;
    while (qhead < queue.size()) {
        const int fresh = queue[qhead++];
        if (fresh == 0) {
            // Chord ear: needs a non-adjacent active pair. Try random draws,
            // then fall back to enumerating; if the active subgraph is
            // complete, requeue behind an ear that will grow it.
            int x = -1;
            int y = -1;
            for (int attempt = 0; attempt < 64 && x == -1; ++attempt) {
                const int i = static_cast<int>(rand_below(rng, active.size()));
                const int j = static_cast<int>(rand_below(rng, active.size()));
                if (i != j && !es.has(active[static_cast<std::size_t>(i)],
                                      active[static_cast<std::size_t>(j)])) {
                    x = active[static_cast<std::size_t>(i)];
                    y = active[static_cast<std::size_t>(j)];
                }
            }
            if (x == -1) {
                std::vector<Edge> free_pairs;
                for (std::size_t i = 0; i < active.size(); ++i)
                    for (std::size_t j = i + 1; j < active.size(); ++j)
                        if (!es.has(active[i], active[j]))
                            free_pairs.push_back(Edge{active[i], active[j]});
                if (free_pairs.empty()) {
                    queue.push_back(0);
                    continue;
                }
                const Edge& pick = free_pairs[rand_below(rng, free_pairs.size())];
                x = pick.a;
                y = pick.b;
            }
            es.add(x, y);
        } else {
            // Path ear through fresh internal vertices; its edges are always
            // new, so any two distinct active endpoints work.
            const int xi = static_cast<int>(rand_below(rng, active.size()));
            int yi = static_cast<int>(rand_below(rng, active.size() - 1));
            if (yi >= xi) ++yi;
            int prev = active[static_cast<std::size_t>(xi)];
            for (int i = 0; i < fresh; ++i) {
                const int mid = pool[pool_next++];
                es.add(prev, mid);
                active.push_back(mid);
                prev = mid;
            }
            es.add(prev, active[static_cast<std::size_t>(yi)]);
        }
    }
    return UndirectedGraph(n, std::move(es.edges));
}

} // namespace

UndirectedGraph generate(const GenSpec& spec) {
    switch (spec.family) {
    case GraphFamily::cycle: return make_cycle(spec.n);
    case GraphFamily::complete: return make_complete(spec.n);
    case GraphFamily::wheel: return make_wheel(spec.n);
    case GraphFamily::theta: return make_theta(spec.n);
    case GraphFamily::two_cliques_bridged: return make_two_cliques_bridged(spec.n);
    case GraphFamily::random_bridgeless:
        return make_random_bridgeless(spec.n, spec.m, spec.seed);
    }
    throw param_error("unknown graph family");
}

} // namespace scorient
