#ifndef GROUPENT_PROCESS_GEN_HPP
#define GROUPENT_PROCESS_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace groupent {

/// n i.i.d. uniform(0,1) samples from a SplitMix64 stream; a fixed seed
/// pins the byte-exact sequence on every platform.
std::vector<double> white_noise(std::size_t n, std::uint64_t seed);

/// Orbit of x_{t+1} = r * x_t * (1 - x_t) after discarding `transient`
/// iterates. Requires r in (0, 4], x0 in (0, 1). Orbits that hit exactly 0
/// or 1 in floating point (e.g. x0 = 0.5 at r = 4) raise
/// DegenerateOrbitError instead of poisoning the statistics.
std::vector<double> logistic_map(std::size_t n, double r, double x0,
                                 std::size_t transient = 1000);

/// series + amplitude * uniform(-1, 1) i.i.d.; amplitude 0 returns the
/// series unchanged.
std::vector<double> add_observational_noise(std::span<const double> series,
                                            double amplitude,
                                            std::uint64_t seed);

}  // namespace groupent

#endif
