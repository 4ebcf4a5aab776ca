#ifndef SCORIENT_REVERSAL_HPP
#define SCORIENT_REVERSAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scorient/connectivity.hpp"
#include "scorient/orientation.hpp"
#include "scorient/rng.hpp"

namespace scorient {

// One reversal performed by an algorithm run, with the endpoint indegrees as
// they were when the step was taken.
struct TraceStep {
    int index;
    int u;
    int v;
    std::vector<int> path_vertices;
    int din_u_before;
    int din_v_before;
};

// Full record of a run: replaying steps from initial via reverse_path
// reproduces final exactly.
struct ReversalTrace {
    Orientation initial;
    Orientation final;
    std::vector<TraceStep> steps;
};

struct ReversalResult {
    Orientation orientation;
    ReversalTrace trace;
};

struct ScOptions {
    // Start from a seeded random orientation resampled until strongly
    // connected instead of the deterministic DFS one. Falls back to DFS
    // after 10 * 2^min(m,20) rejected samples.
    bool random_initial = false;
};

// Strongly connected orientation built by DFS from vertex 0: tree edges away
// from the root, non-tree edges from descendant to ancestor. Requires g
// connected and bridgeless; throws infeasible_error otherwise.
Orientation initial_strong_orientation(const UndirectedGraph& g);

// Directed path from some u to some v with d-(u) < d-(v) - 1, or nullopt if
// none exists. Deterministic choice: targets scanned by (indegree desc, id
// asc), sources by (indegree asc, id asc) among those with a directed path to
// the target; the returned path is the BFS-shortest one with the
// lexicographically smallest vertex sequence.
std::optional<DirectedPath> find_reversible_path(const Orientation& o);

// Same selection rule with the extra requirement that the source two-reaches
// the target. o must be strongly connected.
std::optional<DirectedPath> find_strongly_reversible_path(const Orientation& o);

// Orient every edge by seeded coin flip, then reverse reversible paths until
// none remains. Works on any simple graph.
ReversalResult path_reversal(const UndirectedGraph& g, std::uint64_t seed);

// Start from a strongly connected orientation and reverse strongly reversible
// paths until none remains. Every intermediate orientation stays strongly
// connected; the final indegree sequence is lexicographically minimal among
// all strongly connected orientations of g. Requires g connected and
// bridgeless.
ReversalResult sc_path_reversal(const UndirectedGraph& g, std::uint64_t seed,
                                const ScOptions& options = {});

// Reversal probe: reversing p preserves strong connectivity iff p's source
// two-reaches its target. Returns whether the two sides agree. o must be
// strongly connected.
bool check_lemma1(const Orientation& o, const DirectedPath& p);

// Random vertex-simple directed path under o (possibly empty), for probes.
DirectedPath sample_simple_path(const Orientation& o, Rng& rng);

// Line-oriented trace document: initial orientation block, one
// "step=<k> u=<id> v=<id> path=<v0,v1,...> din_u=<n> din_v=<n>" line per
// step, final orientation block.
std::string trace_to_text(const ReversalTrace& trace);

} // namespace scorient

#endif
