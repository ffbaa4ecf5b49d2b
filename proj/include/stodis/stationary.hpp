#pragma once

#include <cstddef>
#include <vector>

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"
#include "stodis/matrix.hpp"

namespace stodis {

/// The extreme points of a channel's stationary polytope
/// {x >= 0, Σx = 1, M·x = x}: one probability vector per closed recurrent
/// class, each supported exactly on its class. The vectors are linearly
/// independent because their supports are disjoint.
struct StationaryFamily {
    std::size_t channel_dim = 0;
    std::vector<std::vector<double>> vectors;

    std::size_t count() const { return vectors.size(); }
};

/// Decomposes the transition graph of M into strongly connected
/// components, keeps the closed (recurrent) ones, and solves for the
/// unique stationary vector on each. R = count() is 1 whenever all entries
/// of M are strictly positive.
StationaryFamily stationary_family(const StochasticChannel& m);

/// Builds the state whose row j is Σ_k weights(j,k)·m_k. Any such state is
/// invariant under noise on B through the family's channel, hence has zero
/// discord. Weights must be nonnegative with total mass 1, with one column
/// per family vector.
JointDistribution make_zero_discord_state(const StationaryFamily& family,
                                          const Matrix& weights);

/// The matrix K = M ⊗ I acting on the column-major vec of a d_A × d
/// state so that K·vec(p) = vec(p·Mᵀ). States invariant under B-side
/// noise are exactly the fixed points of K that are valid distributions.
Matrix vectorized_noise_action(const StochasticChannel& m, std::size_t dim_a);

}  // namespace stodis
