#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"

namespace stodis {
namespace batch {

// OpenMP-parallel scan kernels. Every kernel computes output element i
// from index i alone (per-index RNG streams, no cross-element reductions),
// so the `_serial` twin of each kernel produces bitwise-identical output;
// the test suite asserts exactly that and the bench tool times the pairs.

/// Discord of `count` random (state, channel) pairs at dimension d.
std::vector<double> pair_discords(std::size_t count, std::size_t dim, std::uint64_t seed);
std::vector<double> pair_discords_serial(std::size_t count, std::size_t dim,
                                         std::uint64_t seed);

/// Discord of `count` random d_a × m.dim() states under a fixed channel.
std::vector<double> state_discords(std::size_t count, std::size_t dim_a,
                                   const StochasticChannel& m, std::uint64_t seed);
std::vector<double> state_discords_serial(std::size_t count, std::size_t dim_a,
                                          const StochasticChannel& m, std::uint64_t seed);

struct MergeRow {
    double q = 0.0;
    double eps = 0.0;
    double discord_ac = 0.0;
    double h_a_given_c_noisy = 0.0;
    double h_a_given_b_noisy = 0.0;
    double discrepancy = 0.0;

    bool operator==(const MergeRow&) const = default;
};

/// Merging-identity sweep over a q grid × a symmetric-noise grid, one row
/// per (q, eps) pair in row-major order.
std::vector<MergeRow> merge_sweep(std::span<const double> q_values,
                                  std::span<const double> eps_values);
std::vector<MergeRow> merge_sweep_serial(std::span<const double> q_values,
                                         std::span<const double> eps_values);

/// Discord of p under symmetric one-bit noise, one value per eps.
std::vector<double> bsc_discords(const JointDistribution& p,
                                 std::span<const double> eps_values);
std::vector<double> bsc_discords_serial(const JointDistribution& p,
                                        std::span<const double> eps_values);

/// Discord of p over the two-parameter grid of 2×2 channels
/// [[a, b], [1-a, 1-b]], row-major in (a, b).
std::vector<double> entrywise_discords(const JointDistribution& p,
                                       std::span<const double> a_values,
                                       std::span<const double> b_values);
std::vector<double> entrywise_discords_serial(const JointDistribution& p,
                                              std::span<const double> a_values,
                                              std::span<const double> b_values);

/// Max-norm fixed-point residual ‖p·Mᵀ - p‖ over the same channel grid.
std::vector<double> fixed_point_residuals(const JointDistribution& p,
                                          std::span<const double> a_values,
                                          std::span<const double> b_values);
std::vector<double> fixed_point_residuals_serial(const JointDistribution& p,
                                                 std::span<const double> a_values,
                                                 std::span<const double> b_values);

}  // namespace batch
}  // namespace stodis
