#pragma once

#include <cstdint>
#include <random>

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"

namespace stodis {

using Rng = std::mt19937_64;

/// Engine seeded through a splitmix64 scramble so that nearby seeds give
/// unrelated streams.
Rng make_rng(std::uint64_t seed);

/// Independent stream for element `index` of a batch: the same (seed,
/// index) pair always yields the same draws, regardless of how the batch
/// is scheduled.
Rng indexed_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform point on the probability simplex (flat Dirichlet), via
/// normalized exponentials.
std::vector<double> random_simplex_point(Rng& rng, std::size_t n);

/// State drawn uniformly from the (d_a·d_b - 1)-simplex.
JointDistribution random_state(Rng& rng, std::size_t d_a, std::size_t d_b);

/// Channel with each column drawn uniformly from the (d-1)-simplex.
StochasticChannel random_channel(Rng& rng, std::size_t d);

}  // namespace stodis
