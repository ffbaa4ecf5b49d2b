#include "stodis/merging.hpp"

#include <algorithm>
#include <cmath>

#include "stodis/discord.hpp"
#include "stodis/errors.hpp"

namespace stodis {

PurifiedTriple purify(int a, int b, int c, double q) {
    for (int bit : {a, b, c}) {
        if (bit != 0 && bit != 1) throw OutOfRange("base values must be bits");
    }
    if (!(q >= 0.0 && q <= 1.0)) throw OutOfRange("mixing parameter must lie in [0, 1]");
    std::vector<double> probs(8, 0.0);
    const auto at = [](int i, int j, int k) { return (i * 2 + j) * 2 + k; };
    probs[at(a, b, c)] = 1.0 - q;
    probs[at(1 - a, 1 - b, 1 - c)] = q;
    return PurifiedTriple{a, b, c, q, TripartiteDistribution({2, 2, 2}, std::move(probs))};
}

EntropyBits binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw OutOfRange("flip probability must lie in [0, 1]");
    double h = 0.0;
    if (q > 0.0) h -= q * std::log2(q);
    if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
    return {h};
}

JointDistribution pair_marginal(const TripartiteDistribution& t, Axis first, Axis second) {
    if (first == second) throw OutOfRange("pair marginal needs two distinct axes");
    const auto dims = t.dims();
    const std::size_t d1 = dims[static_cast<std::size_t>(first)];
    const std::size_t d2 = dims[static_cast<std::size_t>(second)];
    Matrix out(d1, d2);
    for (std::size_t i = 0; i < dims[0]; ++i) {
        for (std::size_t j = 0; j < dims[1]; ++j) {
            for (std::size_t k = 0; k < dims[2]; ++k) {
                const std::size_t idx[3] = {i, j, k};
                out(idx[static_cast<std::size_t>(first)],
                    idx[static_cast<std::size_t>(second)]) += t(i, j, k);
            }
        }
    }
    return JointDistribution(std::move(out));
}

namespace {

MergingReport merging_quantities(double q, const StochasticChannel& noise_b,
                                 const StochasticChannel& noise_c) {
    const PurifiedTriple triple = purify(0, 0, 0, q);
    const JointDistribution p_ac = pair_marginal(triple.distribution, Axis::A, Axis::C);
    const JointDistribution p_ab = pair_marginal(triple.distribution, Axis::A, Axis::B);

    MergingReport report;
    report.discord_a_to_c = classical_discord(p_ac, noise_c).discord;
    report.h_a_given_c_noisy = conditional_entropy_a_given_b(apply_to_b(p_ac, noise_c));
    report.h_a_given_b_noisy = conditional_entropy_a_given_b(apply_to_b(p_ab, noise_b));
    return report;
}

}  // namespace

MergingReport verify_merging_identity(double q, const StochasticChannel& m) {
    MergingReport report = merging_quantities(q, m, m);
    const double dc = std::abs(report.discord_a_to_c.bits - report.h_a_given_c_noisy.bits);
    const double db = std::abs(report.discord_a_to_c.bits - report.h_a_given_b_noisy.bits);
    const double cb = std::abs(report.h_a_given_c_noisy.bits - report.h_a_given_b_noisy.bits);
    report.max_discrepancy = std::max({dc, db, cb});
    return report;
}

MergingReport verify_merging_identity(double q, const StochasticChannel& noise_b,
                                      const StochasticChannel& noise_c) {
    MergingReport report = merging_quantities(q, noise_b, noise_c);
    report.max_discrepancy =
        std::abs(report.discord_a_to_c.bits - report.h_a_given_c_noisy.bits);
    return report;
}

}  // namespace stodis
