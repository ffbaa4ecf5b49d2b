#pragma once

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"

namespace stodis {

/// Outcome of a discord computation. `discord` is always the stored
/// I minus the stored J; `is_zero` is the fixed-point verdict (p·Mᵀ = p in
/// max norm), which is the authoritative zero test.
struct DiscordReport {
    EntropyBits mutual_information_i;
    EntropyBits measured_j;
    EntropyBits discord;
    bool is_zero = false;
};

/// J = I(p·Mᵀ): mutual information surviving B's noisy readout.
EntropyBits measured_mutual_information(const JointDistribution& p,
                                        const StochasticChannel& m);

/// Discord of p with noise M on the B side: I(A;B) - J. Nonnegative by the
/// data processing inequality. The B→A direction is obtained by calling
/// this on p.transposed().
DiscordReport classical_discord(const JointDistribution& p, const StochasticChannel& m,
                                double zero_tol = kDefaultTol);

/// Fixed-point test: true iff max-entry distance between p·Mᵀ and p is at
/// most tol.
bool is_zero_discord(const JointDistribution& p, const StochasticChannel& m,
                     double tol = kDefaultTol);

}  // namespace stodis
