#ifndef SCORIENT_GENERATORS_HPP
#define SCORIENT_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "scorient/graph.hpp"

namespace scorient {

enum class GraphFamily {
    random_bridgeless,
    cycle,
    complete,
    wheel,
    theta,
    two_cliques_bridged,
};

// Parameters for one generated instance. m is only consulted by
// random_bridgeless, where it must lie in [n, n(n-1)/2]; the fixed families
// derive their edge counts from n.
struct GenSpec {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    GraphFamily family = GraphFamily::cycle;
};

GraphFamily parse_family(const std::string& name); // throws param_error
std::string family_name(GraphFamily family);

// Deterministic function of the spec. random_bridgeless builds by ear
// decomposition (spanning cycle on a random subset, then random ears), so
// the result is connected and bridgeless by construction.
UndirectedGraph generate(const GenSpec& spec);

} // namespace scorient

#endif
