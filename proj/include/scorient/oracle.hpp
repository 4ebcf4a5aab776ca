#ifndef SCORIENT_ORACLE_HPP
#define SCORIENT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "scorient/orientation.hpp"

namespace scorient {

inline constexpr int kDefaultEnumerationCap = 24;

// Ground truth from exhaustive enumeration of all 2^m orientations.
struct OracleResult {
    IndegreeSequence best_sequence;
    Orientation best_orientation; // first lex-minimal witness in enumeration order
    std::uint64_t candidates_examined;
    std::uint64_t feasible_count; // orientations passing the constraint filter
};

// Calls fn for each of the 2^m orientations exactly once, in edge-index-binary
// order (mask bit i directs edge i). Throws cap_error when m exceeds cap.
void enumerate_orientations(const UndirectedGraph& g,
                            const std::function<void(const Orientation&)>& fn,
                            int cap = kDefaultEnumerationCap);

// Lexicographically minimal indegree sequence over all orientations,
// restricted to strongly connected ones when require_strong is set.
// Throws cap_error over the cap and infeasible_error when require_strong
// finds no feasible orientation.
OracleResult oracle_min_lex(const UndirectedGraph& g, bool require_strong,
                            int cap = kDefaultEnumerationCap);

// Minimum over feasible orientations of the maximum indegree. Enumerates
// independently of oracle_min_lex (it never compares full sequences).
int oracle_min_max_indegree(const UndirectedGraph& g, bool require_strong,
                            int cap = kDefaultEnumerationCap);

// With U the two-reach set of v: every weak component of the subdigraph
// induced on the complement of U sends exactly one arc into U.
// o must be strongly connected.
bool check_lemma3(const Orientation& o, int v);

// With U as above: the indegrees inside U sum to the number of edges within
// U plus the number of weak components outside it. o must be strongly
// connected.
bool check_boundary_identity(const Orientation& o, int v);

// "best=<csv> examined=<count> feasible=<count>"
std::string oracle_result_to_text(const OracleResult& r);

} // namespace scorient

#endif
