#ifndef SCORIENT_RNG_HPP
#define SCORIENT_RNG_HPP

#include <cstdint>
#include <random>

namespace scorient {

// All randomness in this project flows through std::mt19937_64, whose output
// stream is pinned by the C++ standard, so identical seeds give identical
// runs on every platform. The standard *distributions* are not pinned, which
// is why bounded draws below are hand-rolled rejection sampling instead of
// std::uniform_int_distribution.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return draw % bound;
}

inline bool rand_bit(Rng& rng) { return (rng() & 1u) != 0; }

} // namespace scorient

#endif
