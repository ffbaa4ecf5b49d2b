#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "stodis/channel.hpp"
#include "stodis/distribution.hpp"

namespace stodis {

/// A constrained set of channels to minimize discord over. Discord over
/// all stochastic matrices is identically zero (the identity channel is
/// noiseless), so the family is an explicit, user-visible argument; only
/// families excluding the identity give a nontrivial minimum.
class ChannelFamily {
public:
    /// All d × d column-stochastic M with every entry >= epsilon.
    /// Empty unless 0 <= epsilon <= 1/d.
    struct EntrywiseLowerBound {
        double epsilon = 0.0;
    };
    /// One-bit symmetric noise with flip probability in [eps_min, eps_max].
    struct ParametricBsc {
        double eps_min = 0.0;
        double eps_max = 0.0;
    };
    /// A finite, explicitly listed set.
    struct ExplicitSet {
        std::vector<StochasticChannel> channels;
    };
    using Kind = std::variant<EntrywiseLowerBound, ParametricBsc, ExplicitSet>;

    static ChannelFamily entrywise_lower_bound(std::size_t dim, double epsilon);
    static ChannelFamily parametric_bsc(double eps_min, double eps_max);
    static ChannelFamily explicit_set(std::vector<StochasticChannel> channels);

    std::size_t dim() const { return dim_; }
    const Kind& kind() const { return kind_; }

    /// Membership within an entrywise constraint tolerance.
    bool contains(const StochasticChannel& m, double tol = kDefaultTol) const;

private:
    ChannelFamily(std::size_t dim, Kind kind) : dim_(dim), kind_(std::move(kind)) {}

    std::size_t dim_;
    Kind kind_;
};

struct MinimizationResult {
    EntropyBits min_discord;
    StochasticChannel argmin_channel;
    long iterations = 0;
    bool certified = false;
};

/// Minimizes discord of p over the family by projected Nelder-Mead from
/// multiple starts (family extreme points plus seeded random interior
/// points; independent starts run in parallel). `budget` caps the total
/// number of discord evaluations; when it runs out the best point so far
/// is returned with certified = false. A result is certified only when
/// the grid oracle (where dimensionally feasible) confirms it within 1e-6.
MinimizationResult stochastic_discord(const JointDistribution& p, const ChannelFamily& family,
                                      long budget = 20000, std::uint64_t seed = 0);

/// Exhaustive evaluation over the family discretized at `step` per
/// parameter. The result is within L·step of the continuum minimum, where
/// L is the Lipschitz constant of the discord along the family parameters
/// (finite for every family here). Two-parameter grids are offered for
/// dimension 2 only.
MinimizationResult grid_oracle(const JointDistribution& p, const ChannelFamily& family,
                               double step);

}  // namespace stodis
