#include "stodis/batch.hpp"

#include <cstdint>

#include "stodis/discord.hpp"
#include "stodis/merging.hpp"
#include "stodis/random.hpp"

namespace stodis {
namespace batch {

namespace {

double pair_discord_at(std::uint64_t index, std::size_t dim, std::uint64_t seed) {
    Rng rng = indexed_rng(seed, index);
    const JointDistribution p = random_state(rng, dim, dim);
    const StochasticChannel m = random_channel(rng, dim);
    return classical_discord(p, m).discord.bits;
}

double state_discord_at(std::uint64_t index, std::size_t dim_a, const StochasticChannel& m,
                        std::uint64_t seed) {
    Rng rng = indexed_rng(seed, index);
    const JointDistribution p = random_state(rng, dim_a, m.dim());
    return classical_discord(p, m).discord.bits;
}

MergeRow merge_row_at(double q, double eps) {
    const MergingReport r = verify_merging_identity(q, binary_symmetric(eps));
    return MergeRow{q,
                    eps,
                    r.discord_a_to_c.bits,
                    r.h_a_given_c_noisy.bits,
                    r.h_a_given_b_noisy.bits,
                    r.max_discrepancy};
}

double entrywise_discord_at(const JointDistribution& p, double a, double b) {
    const StochasticChannel m(Matrix{{a, b}, {1.0 - a, 1.0 - b}});
    return classical_discord(p, m).discord.bits;
}

double fixed_point_residual_at(const JointDistribution& p, double a, double b) {
    const StochasticChannel m(Matrix{{a, b}, {1.0 - a, 1.0 - b}});
    return max_abs_diff(apply_to_b(p, m).probs(), p.probs());
}

}  // namespace

std::vector<double> pair_discords(std::size_t count, std::size_t dim, std::uint64_t seed) {
    std::vector<double> out(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
        out[i] = pair_discord_at(static_cast<std::uint64_t>(i), dim, seed);
    return out;
}

std::vector<double> pair_discords_serial(std::size_t count, std::size_t dim,
                                         std::uint64_t seed) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = pair_discord_at(i, dim, seed);
    return out;
}

std::vector<double> state_discords(std::size_t count, std::size_t dim_a,
                                   const StochasticChannel& m, std::uint64_t seed) {
    std::vector<double> out(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
        out[i] = state_discord_at(static_cast<std::uint64_t>(i), dim_a, m, seed);
    return out;
}

std::vector<double> state_discords_serial(std::size_t count, std::size_t dim_a,
                                          const StochasticChannel& m, std::uint64_t seed) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = state_discord_at(i, dim_a, m, seed);
    return out;
}

std::vector<MergeRow> merge_sweep(std::span<const double> q_values,
                                  std::span<const double> eps_values) {
    const std::size_t n = q_values.size() * eps_values.size();
    std::vector<MergeRow> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
        const std::size_t qi = static_cast<std::size_t>(r) / eps_values.size();
        const std::size_t ei = static_cast<std::size_t>(r) % eps_values.size();
        out[r] = merge_row_at(q_values[qi], eps_values[ei]);
    }
    return out;
}

std::vector<MergeRow> merge_sweep_serial(std::span<const double> q_values,
                                         std::span<const double> eps_values) {
    std::vector<MergeRow> out;
    out.reserve(q_values.size() * eps_values.size());
    for (double q : q_values)
        for (double eps : eps_values) out.push_back(merge_row_at(q, eps));
    return out;
}

std::vector<double> bsc_discords(const JointDistribution& p,
                                 std::span<const double> eps_values) {
    std::vector<double> out(eps_values.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(eps_values.size()); ++i)
        out[i] = classical_discord(p, binary_symmetric(eps_values[i])).discord.bits;
    return out;
}

std::vector<double> bsc_discords_serial(const JointDistribution& p,
                                        std::span<const double> eps_values) {
    std::vector<double> out(eps_values.size());
    for (std::size_t i = 0; i < eps_values.size(); ++i)
        out[i] = classical_discord(p, binary_symmetric(eps_values[i])).discord.bits;
    return out;
}

std::vector<double> entrywise_discords(const JointDistribution& p,
                                       std::span<const double> a_values,
                                       std::span<const double> b_values) {
    const std::size_t n = a_values.size() * b_values.size();
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
        const std::size_t ai = static_cast<std::size_t>(r) / b_values.size();
        const std::size_t bi = static_cast<std::size_t>(r) % b_values.size();
        out[r] = entrywise_discord_at(p, a_values[ai], b_values[bi]);
    }
    return out;
}

std::vector<double> entrywise_discords_serial(const JointDistribution& p,
                                              std::span<const double> a_values,
                                              std::span<const double> b_values) {
    std::vector<double> out;
    out.reserve(a_values.size() * b_values.size());
    for (double a : a_values)
        for (double b : b_values) out.push_back(entrywise_discord_at(p, a, b));
    return out;
}

std::vector<double> fixed_point_residuals(const JointDistribution& p,
                                          std::span<const double> a_values,
                                          std::span<const double> b_values) {
    const std::size_t n = a_values.size() * b_values.size();
    std::vector<double> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
        const std::size_t ai = static_cast<std::size_t>(r) / b_values.size();
        const std::size_t bi = static_cast<std::size_t>(r) % b_values.size();
        out[r] = fixed_point_residual_at(p, a_values[ai], b_values[bi]);
    }
    return out;
}

std::vector<double> fixed_point_residuals_serial(const JointDistribution& p,
                                                 std::span<const double> a_values,
                                                 std::span<const double> b_values) {
    std::vector<double> out;
    out.reserve(a_values.size() * b_values.size());
    for (double a : a_values)
        for (double b : b_values) out.push_back(fixed_point_residual_at(p, a, b));
    return out;
}

}  // namespace batch
}  // namespace stodis
