#include "stodis/discord.hpp"

namespace stodis {

EntropyBits measured_mutual_information(const JointDistribution& p,
                                        const StochasticChannel& m) {
    return mutual_information(apply_to_b(p, m));
}

DiscordReport classical_discord(const JointDistribution& p, const StochasticChannel& m,
                                double zero_tol) {
    const EntropyBits i = mutual_information(p);
    const EntropyBits j = measured_mutual_information(p, m);
    return DiscordReport{i, j, {i.bits - j.bits}, is_zero_discord(p, m, zero_tol)};
}

bool is_zero_discord(const JointDistribution& p, const StochasticChannel& m, double tol) {
    const JointDistribution noisy = apply_to_b(p, m);
    return max_abs_diff(noisy.probs(), p.probs()) <= tol;
}

}  // namespace stodis
