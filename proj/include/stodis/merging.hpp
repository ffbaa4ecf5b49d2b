#pragma once

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"

namespace stodis {

/// Two-point tripartite state: mass 1-q on the bits (a,b,c) and mass q on
/// their negations. Conditionally pure in all three directions: any one
/// share is determined by the other two.
struct PurifiedTriple {
    int a = 0, b = 0, c = 0;
    double mixing_q = 0.0;
    TripartiteDistribution distribution;
};

PurifiedTriple purify(int a, int b, int c, double q);

/// Entropy of a single bit with flip probability q, zero at the endpoints.
EntropyBits binary_entropy(double q);

/// Sums out the axis not named, returning the ordered pair marginal:
/// pair_marginal(t, C, A)(k, i) = Σ_j t(i, j, k).
JointDistribution pair_marginal(const TripartiteDistribution& t, Axis first, Axis second);

/// The three quantities that coincide for a purified triple read out
/// through noisy channels: discord A→C of the (A,C) marginal, H(A|C')
/// after noise on C, and H(A|B') after noise on B.
struct MergingReport {
    EntropyBits discord_a_to_c;
    EntropyBits h_a_given_c_noisy;
    EntropyBits h_a_given_b_noisy;
    double max_discrepancy = 0.0;
};

/// Same noise on B and C (the base bits are (0,0,0); every choice gives
/// the same entropies). max_discrepancy covers all three pairwise gaps.
MergingReport verify_merging_identity(double q, const StochasticChannel& m);

/// Distinct noise per side. Only discord A→C = H(A|C') is an identity in
/// this setting, so max_discrepancy covers just that pair.
MergingReport verify_merging_identity(double q, const StochasticChannel& noise_b,
                                      const StochasticChannel& noise_c);

}  // namespace stodis
