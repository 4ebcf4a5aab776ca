#include "scorient/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "scorient/connectivity.hpp"
#include "scorient/errors.hpp"

namespace scorient {

namespace {

void check_cap(const UndirectedGraph& g, int cap) {
    if (cap > 62) cap = 62; // mask arithmetic bound
    if (g.edge_count() > cap)
        throw cap_error("graph has " + std::to_string(g.edge_count()) +
                        " edges, over the enumeration cap of " + std::to_string(cap));
}

// Reusable per-mask machinery. Enumeration runs millions of masks, so the
// strong-connectivity test works on flat scratch arrays instead of building
// an Orientation per candidate.
struct MaskScan {
    const UndirectedGraph& g;
    int n;
    int m;
    std::vector<int> indeg;
    std::vector<int> outdeg;
    std::vector<int> fwd_off, fwd_arc; // CSR out-adjacency
    std::vector<int> bwd_off, bwd_arc; // CSR in-adjacency
    std::vector<int> fcur, bcur;
    std::vector<int> stack;
    std::vector<char> seen;

    explicit MaskScan(const UndirectedGraph& graph)
        : g(graph), n(graph.vertex_count()), m(graph.edge_count()),
          indeg(static_cast<std::size_t>(n)), outdeg(static_cast<std::size_t>(n)),
          fwd_off(static_cast<std::size_t>(n) + 1), fwd_arc(static_cast<std::size_t>(m)),
          bwd_off(static_cast<std::size_t>(n) + 1), bwd_arc(static_cast<std::size_t>(m)),
          fcur(static_cast<std::size_t>(n)), bcur(static_cast<std::size_t>(n)),
          seen(static_cast<std::size_t>(n)) {}

    void fill_degrees(std::uint64_t mask) {
        std::fill(indeg.begin(), indeg.end(), 0);
        std::fill(outdeg.begin(), outdeg.end(), 0);
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            const int head = ((mask >> e) & 1u) ? ed.a : ed.b;
            const int tail = ((mask >> e) & 1u) ? ed.b : ed.a;
            ++indeg[static_cast<std::size_t>(head)];
            ++outdeg[static_cast<std::size_t>(tail)];
        }
    }

    bool reaches_all(const std::vector<int>& off, const std::vector<int>& arc) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, 0);
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            ++count;
            for (int i = off[static_cast<std::size_t>(x)];
                 i < off[static_cast<std::size_t>(x) + 1]; ++i) {
                const int y = arc[static_cast<std::size_t>(i)];
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        return count == n;
    }

    // fill_degrees(mask) must have run already.
    bool strongly_connected(std::uint64_t mask) {
        if (n <= 1) return true;
        for (int v = 0; v < n; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0 ||
                outdeg[static_cast<std::size_t>(v)] == 0)
                return false;
        fwd_off[0] = bwd_off[0] = 0;
        for (int v = 0; v < n; ++v) {
            fwd_off[static_cast<std::size_t>(v) + 1] =
                fwd_off[static_cast<std::size_t>(v)] + outdeg[static_cast<std::size_t>(v)];
            bwd_off[static_cast<std::size_t>(v) + 1] =
                bwd_off[static_cast<std::size_t>(v)] + indeg[static_cast<std::size_t>(v)];
        }
        std::copy(fwd_off.begin(), fwd_off.end() - 1, fcur.begin());
        std::copy(bwd_off.begin(), bwd_off.end() - 1, bcur.begin());
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            const int head = ((mask >> e) & 1u) ? ed.a : ed.b;
            const int tail = ((mask >> e) & 1u) ? ed.b : ed.a;
            fwd_arc[static_cast<std::size_t>(fcur[static_cast<std::size_t>(tail)]++)] = head;
            bwd_arc[static_cast<std::size_t>(bcur[static_cast<std::size_t>(head)]++)] = tail;
        }
        return reaches_all(fwd_off, fwd_arc) && reaches_all(bwd_off, bwd_arc);
    }
};

} // namespace

void enumerate_orientations(const UndirectedGraph& g,
                            const std::function<void(const Orientation&)>& fn, int cap) {
    check_cap(g, cap);
    const std::uint64_t total = 1ull << g.edge_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(Orientation::from_mask(g, mask));
}

OracleResult oracle_min_lex(const UndirectedGraph& g, bool require_strong, int cap) {
    check_cap(g, cap);
    const int n = g.vertex_count();
    const std::uint64_t total = 1ull << g.edge_count();
    MaskScan scan(g);

    bool have_best = false;
    std::uint64_t best_mask = 0;
    std::vector<int> best_sorted;
    std::vector<int> sorted(static_cast<std::size_t>(n));
    std::uint64_t feasible = 0;

    for (std::uint64_t mask = 0; mask < total; ++mask) {
        scan.fill_degrees(mask);
        if (require_strong && !scan.strongly_connected(mask)) continue;
        ++feasible;
        std::copy(scan.indeg.begin(), scan.indeg.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (!have_best ||
            std::lexicographical_compare(sorted.begin(), sorted.end(), best_sorted.begin(),
                                         best_sorted.end())) {
            have_best = true;
            best_mask = mask;
            best_sorted = sorted;
        }
    }
    if (!have_best)
        throw infeasible_error("no strongly connected orientation exists "
                               "(graph is disconnected or has a bridge)");
    return OracleResult{IndegreeSequence(std::move(best_sorted)),
                        Orientation::from_mask(g, best_mask), total, feasible};
}

int oracle_min_max_indegree(const UndirectedGraph& g, bool require_strong, int cap) {
    check_cap(g, cap);
    const int n = g.vertex_count();
    const std::uint64_t total = 1ull << g.edge_count();
    MaskScan scan(g);

    int best = std::numeric_limits<int>::max();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        scan.fill_degrees(mask);
        const int max_in = n == 0 ? 0
                                  : *std::max_element(scan.indeg.begin(), scan.indeg.end());
        if (max_in >= best) continue; // cannot improve, feasibility irrelevant
        if (require_strong && !scan.strongly_connected(mask)) continue;
        best = max_in;
    }
    if (best == std::numeric_limits<int>::max()) {
        if (n == 0) return 0;
        throw infeasible_error("no strongly connected orientation exists "
                               "(graph is disconnected or has a bridge)");
    }
    return best;
}

namespace {

struct BoundaryView {
    std::vector<char> in_u;
    std::vector<int> comp;   // weak component ids on the complement of U
    int comp_count;
};

BoundaryView boundary_view(const Orientation& o, int v) {
    if (!is_strongly_connected(o))
        throw contract_error("lemma checks require a strongly connected orientation");
    const int n = o.graph().vertex_count();
    if (v < 0 || v >= n)
        throw range_error("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(n) + ")");
    BoundaryView view;
    view.in_u.assign(static_cast<std::size_t>(n), 0);
    for (const int u : two_reach_set(o, v)) view.in_u[static_cast<std::size_t>(u)] = 1;
    std::vector<char> keep(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) keep[static_cast<std::size_t>(x)] = !view.in_u[static_cast<std::size_t>(x)];
    view.comp = connected_components(o.graph(), keep, &view.comp_count);
    return view;
}

} // namespace

bool check_lemma3(const Orientation& o, int v) {
    const BoundaryView view = boundary_view(o, v);
    std::vector<int> arcs_into_u(static_cast<std::size_t>(view.comp_count), 0);
    for (int e = 0; e < o.graph().edge_count(); ++e) {
        const int t = o.tail(e);
        const int h = o.head(e);
        if (!view.in_u[static_cast<std::size_t>(t)] && view.in_u[static_cast<std::size_t>(h)])
            ++arcs_into_u[static_cast<std::size_t>(view.comp[static_cast<std::size_t>(t)])];
    }
    return std::all_of(arcs_into_u.begin(), arcs_into_u.end(),
                       [](int count) { return count == 1; });
}

bool check_boundary_identity(const Orientation& o, int v) {
    const BoundaryView view = boundary_view(o, v);
    long long indegree_sum = 0;
    for (int x = 0; x < o.graph().vertex_count(); ++x)
        if (view.in_u[static_cast<std::size_t>(x)]) indegree_sum += o.indegree(x);
    long long edges_within = 0;
    for (const Edge& e : o.graph().edges())
        if (view.in_u[static_cast<std::size_t>(e.a)] && view.in_u[static_cast<std::size_t>(e.b)])
            ++edges_within;
    return indegree_sum == edges_within + view.comp_count;
}

std::string oracle_result_to_text(const OracleResult& r) {
    std::ostringstream out;
    out << "best=" << r.best_sequence.to_csv() << " examined=" << r.candidates_examined
        << " feasible=" << r.feasible_count;
    return out.str();
}

} // namespace scorient
