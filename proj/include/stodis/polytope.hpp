#pragma once

#include <cstddef>
#include <vector>

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"
#include "stodis/matrix.hpp"

namespace stodis {

/// All channels leaving a fixed state invariant: p·Mᵀ = p is linear in the
/// column-major vec(M), giving the equality system
///     (p ⊗ I)·vec(M) = vec(pᵀ)
/// which, together with column sums = 1 and M >= 0, describes a convex
/// polytope of channels. The identity channel is always a member.
struct ChannelPolytope {
    std::size_t state_dim_a = 0;
    std::size_t dim = 0;            // channel dimension, = d_B of the state
    Matrix equality;                // fixed-point rows then column-sum rows
    std::vector<double> rhs;
    StochasticChannel sample;       // feasible point from the phase-1 solve
    StochasticChannel min_trace;    // feasible point minimizing trace(M)
    double min_trace_value = 0.0;   // equals dim iff identity is the only member
};

/// Builds the constraint system for the given state and solves it twice:
/// once for plain feasibility and once minimizing trace(M), which lands on
/// a member other than the identity whenever one exists.
ChannelPolytope zero_discord_channels(const JointDistribution& p);

/// Minimizes objectiveᵀ·vec(M) over the polytope and returns the argmin
/// channel. The objective has one entry per vec(M) component.
StochasticChannel feasible_channel(const ChannelPolytope& polytope,
                                   const std::vector<double>& objective);

/// Vertex enumeration, offered for channel dimension <= 3 only (the basis
/// count grows combinatorially). Throws DimensionTooLarge above that.
std::vector<StochasticChannel> polytope_vertices(const ChannelPolytope& polytope);

}  // namespace stodis
