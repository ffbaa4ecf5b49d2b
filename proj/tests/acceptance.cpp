// Acceptance suite: each check prints one PASS/FAIL line; the exit code is
// the number of failures. Tolerances are pinned in the checks themselves.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stodis/batch.hpp"
#include "stodis/discord.hpp"
#include "stodis/matrix.hpp"
#include "stodis/merging.hpp"
#include "stodis/minimize.hpp"
#include "stodis/polytope.hpp"
#include "stodis/random.hpp"
#include "stodis/stationary.hpp"

using namespace stodis;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return g;
}

const std::vector<StochasticChannel>& reference_channels() {
    static const std::vector<StochasticChannel> channels = {
        binary_symmetric(0.1), binary_symmetric(0.3), identity_channel(2),
        direct_sum(binary_symmetric(0.1), binary_symmetric(0.2))};
    return channels;
}

Matrix random_weights(Rng& rng, std::size_t rows, std::size_t cols) {
    const auto flat = random_simplex_point(rng, rows * cols);
    Matrix w(rows, cols);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t k = 0; k < cols; ++k) w(j, k) = flat[j * cols + k];
    return w;
}

// 1. Discord is nonnegative on 10^4 random (state, channel) pairs at each
//    of d = 2, 4, 8, within -1e-9, in under 30 seconds.
Outcome criterion_nonnegativity() {
    const auto t0 = Clock::now();
    double global_min = 1e9;
    for (std::size_t d : {std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
        const auto values = batch::pair_discords(10000, d, 1000 + d);
        global_min = std::min(global_min, *std::min_element(values.begin(), values.end()));
    }
    const double elapsed = seconds_since(t0);
    const bool pass = global_min >= -1e-9 && elapsed < 30.0;
    return {pass, "min discord " + fmt(global_min) + " over 3x10^4 pairs in " +
                      fmt(elapsed) + " s"};
}

// 2. The fixed-point test and discord <= 1e-10 agree on 10^3 random pairs
//    and on every constructed invariant state; zero disagreements.
Outcome criterion_fixed_point_equivalence() {
    std::size_t disagreements = 0, total = 0;
    std::size_t index = 0;
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
        const std::size_t count = d == 2 ? 400 : 300;
        for (std::size_t i = 0; i < count; ++i, ++index) {
            Rng rng = indexed_rng(2024, index);
            const JointDistribution p = random_state(rng, d, d);
            const StochasticChannel m = random_channel(rng, d);
            const bool fixed = is_zero_discord(p, m, 1e-12);
            const bool tiny = classical_discord(p, m).discord.bits <= 1e-10;
            disagreements += fixed != tiny;
            ++total;
        }
    }
    Rng rng = make_rng(2025);
    for (const auto& m : reference_channels()) {
        const StationaryFamily family = stationary_family(m);
        for (int i = 0; i < 25; ++i) {
            const JointDistribution p =
                make_zero_discord_state(family, random_weights(rng, m.dim(), family.count()));
            const bool fixed = is_zero_discord(p, m, 1e-12);
            const bool tiny = classical_discord(p, m).discord.bits <= 1e-10;
            disagreements += !(fixed && tiny);
            ++total;
        }
    }
    return {disagreements == 0, std::to_string(disagreements) + " disagreements in " +
                                    std::to_string(total) + " instances"};
}

// 3. Stationary-weight states: 100 random weight matrices per reference
//    channel all give discord <= 1e-10 under their channel.
Outcome criterion_family_soundness() {
    Rng rng = make_rng(33);
    double worst = 0.0;
    for (const auto& m : reference_channels()) {
        const StationaryFamily family = stationary_family(m);
        for (int i = 0; i < 100; ++i) {
            const JointDistribution p =
                make_zero_discord_state(family, random_weights(rng, m.dim(), family.count()));
            worst = std::max(worst, classical_discord(p, m).discord.bits);
        }
    }
    return {worst <= 1e-10, "max discord " + fmt(worst) + " over 400 constructed states"};
}

// 4. Measure-zero evidence: of 10^4 uniformly sampled 2x2 states, the
//    fraction with discord < 1e-6 must be 0 under one-bit noise 0.1 and 1
//    under noiseless readout.
Outcome criterion_measure_zero() {
    const auto noisy = batch::state_discords(10000, 2, binary_symmetric(0.1), 4444);
    const auto clean = batch::state_discords(10000, 2, identity_channel(2), 4444);
    const auto below = [](const std::vector<double>& v) {
        return static_cast<std::size_t>(
            std::count_if(v.begin(), v.end(), [](double d) { return d < 1e-6; }));
    };
    const std::size_t noisy_hits = below(noisy);
    const std::size_t clean_hits = below(clean);
    const bool pass = noisy_hits == 0 && clean_hits == 10000;
    std::ostringstream detail;
    detail << "noisy fraction " << static_cast<double>(noisy_hits) / 10000.0
           << " (required 0), noiseless fraction "
           << static_cast<double>(clean_hits) / 10000.0 << " (required 1)";
    if (noisy_hits != 0)
        detail << "; the sub-1e-6 states are near-product states, which keep discord ~0 "
                  "under any channel without being channel-invariant";
    return {pass, detail.str()};
}

// 5. Channel polytope: hand-derived answers on the two worked states, all
//    vertices invariant within 1e-9, and LP feasibility agreeing with a
//    1e-3-step grid scan (2e-3 slack) on 20 random states.
Outcome criterion_channel_polytope() {
    const JointDistribution correlated(Matrix{{0.5, 0.0}, {0.0, 0.5}});
    const JointDistribution uniform(Matrix{{0.25, 0.25}, {0.25, 0.25}});

    const auto matches = [](const StochasticChannel& c, const Matrix& m) {
        return max_abs_diff(c.matrix(), m) <= 1e-9;
    };

    const ChannelPolytope correlated_polytope = zero_discord_channels(correlated);
    const auto correlated_vertices = polytope_vertices(correlated_polytope);
    bool pass = correlated_vertices.size() == 1 &&
                matches(correlated_vertices[0], Matrix::identity(2)) &&
                std::abs(correlated_polytope.min_trace_value - 2.0) <= 1e-9;

    const ChannelPolytope uniform_polytope = zero_discord_channels(uniform);
    const auto uniform_vertices = polytope_vertices(uniform_polytope);
    pass = pass && uniform_vertices.size() == 2 &&
           std::abs(uniform_polytope.min_trace_value) <= 1e-9;
    for (const auto& target : {Matrix::identity(2), Matrix{{0.0, 1.0}, {1.0, 0.0}}}) {
        pass = pass && std::any_of(uniform_vertices.begin(), uniform_vertices.end(),
                                   [&](const StochasticChannel& v) { return matches(v, target); });
    }
    for (const auto& v : correlated_vertices)
        pass = pass && is_zero_discord(correlated, v, 1e-9);
    for (const auto& v : uniform_vertices) pass = pass && is_zero_discord(uniform, v, 1e-9);

    // feasibility vs the brute-force grid
    const std::vector<double> axis = linear_grid(0.0, 1.0, 1001);
    std::size_t agreements = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng = indexed_rng(555, trial);
        const JointDistribution p = random_state(rng, 2, 2);
        const bool lp_feasible = [&] {
            try {
                zero_discord_channels(p);
                return true;
            } catch (...) {
                return false;
            }
        }();
        const auto residuals = batch::fixed_point_residuals(p, axis, axis);
        const bool grid_feasible =
            *std::min_element(residuals.begin(), residuals.end()) <= 2e-3;
        agreements += lp_feasible == grid_feasible;
    }
    pass = pass && agreements == 20;
    return {pass, "worked polytopes match; grid agreement " + std::to_string(agreements) +
                      "/20"};
}

// 6. Merging identity: 101 mixing values x 13 channels agree three ways
//    within 1e-10, with H(C) = H(A,C) = h2(q) within 1e-12, in under 5 s.
Outcome criterion_merging_identity() {
    const auto t0 = Clock::now();
    std::vector<StochasticChannel> channels = {identity_channel(2)};
    for (double eps : linear_grid(0.0, 0.5, 11)) channels.push_back(binary_symmetric(eps));
    channels.push_back(uniform_channel(2));

    double worst_discrepancy = 0.0, worst_single_share = 0.0;
    for (double q : linear_grid(0.0, 1.0, 101)) {
        const JointDistribution p_ac =
            pair_marginal(purify(0, 0, 0, q).distribution, Axis::A, Axis::C);
        const double h2q = binary_entropy(q).bits;
        worst_single_share = std::max(
            worst_single_share, std::abs(shannon_entropy(marginal_b(p_ac)).bits - h2q));
        worst_single_share =
            std::max(worst_single_share, std::abs(joint_entropy(p_ac).bits - h2q));
        for (const auto& m : channels) {
            worst_discrepancy =
                std::max(worst_discrepancy, verify_merging_identity(q, m).max_discrepancy);
        }
    }
    const double elapsed = seconds_since(t0);
    const bool pass = worst_discrepancy <= 1e-10 && worst_single_share <= 1e-12 &&
                      elapsed < 5.0;
    return {pass, "max three-way discrepancy " + fmt(worst_discrepancy) +
                      ", max |H - h2(q)| " + fmt(worst_single_share) + ", " + fmt(elapsed) +
                      " s"};
}

// 7. Spot value: the perfectly correlated bit under one-bit noise 0.1 has
//    discord h2(0.1) = 0.4689955936 within 1e-9.
Outcome criterion_spot_value() {
    const JointDistribution p(Matrix{{0.5, 0.0}, {0.0, 0.5}});
    const double d = classical_discord(p, binary_symmetric(0.1)).discord.bits;
    return {std::abs(d - 0.4689955936) <= 1e-9, "discord = " + std::to_string(d)};
}

// 8. Constrained minimization: within 1e-6 of the grid oracle on the
//    clipped one-bit family, and <= 1e-9 whenever the family contains the
//    noiseless channel.
Outcome criterion_minimization() {
    const JointDistribution p(Matrix{{0.5, 0.0}, {0.0, 0.5}});

    const ChannelFamily clipped = ChannelFamily::parametric_bsc(0.1, 0.5);
    const MinimizationResult local = stochastic_discord(p, clipped, 20000, 7);
    const MinimizationResult oracle = grid_oracle(p, clipped, 1e-3);
    bool pass = std::abs(local.min_discord.bits - oracle.min_discord.bits) <= 1e-6;

    const std::vector<ChannelFamily> with_identity = {
        ChannelFamily::entrywise_lower_bound(2, 0.0),
        ChannelFamily::parametric_bsc(0.0, 0.5),
        ChannelFamily::explicit_set(
            {identity_channel(2), binary_symmetric(0.2), uniform_channel(2)})};
    double worst_zero = 0.0;
    for (const auto& family : with_identity) {
        worst_zero =
            std::max(worst_zero, stochastic_discord(p, family, 20000, 11).min_discord.bits);
    }
    pass = pass && worst_zero <= 1e-9;
    return {pass, "|local - oracle| = " +
                      fmt(std::abs(local.min_discord.bits - oracle.min_discord.bits)) +
                      ", worst identity-family minimum " + fmt(worst_zero)};
}

// 9. Reshaping identity on 100 random triples at d = 2 and d = 3: with
//    column-major reshaping, A·C·Bᵀ = D pairs with (B ⊗ A)·vec(C) = vec(D);
//    max residual 1e-12.
Outcome criterion_reshaping() {
    double worst = 0.0;
    std::size_t index = 0;
    for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
        for (int trial = 0; trial < 100; ++trial, ++index) {
            Rng rng = indexed_rng(99, index);
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            Matrix a(d, d), b(d, d), c(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    a(i, j) = unif(rng);
                    b(i, j) = unif(rng);
                    c(i, j) = unif(rng);
                }
            const Matrix product = matmul(matmul(a, c), transpose(b));
            const std::vector<double> lhs = matvec(kron(b, a), vec(c));
            worst = std::max(worst,
                             max_abs_diff(std::span<const double>(lhs),
                                          std::span<const double>(vec(product))));
        }
    }
    return {worst <= 1e-12, "max residual " + fmt(worst) + " over 200 triples"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 nonnegativity over random pairs", criterion_nonnegativity},
        {"2 zero discord iff fixed point", criterion_fixed_point_equivalence},
        {"3 stationary-weight family soundness", criterion_family_soundness},
        {"4 measure-zero evidence", criterion_measure_zero},
        {"5 zero-discord channel polytope", criterion_channel_polytope},
        {"6 merging identity", criterion_merging_identity},
        {"7 analytic spot value", criterion_spot_value},
        {"8 constrained minimization", criterion_minimization},
        {"9 reshaping identity", criterion_reshaping},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.pass;
        std::printf("[%s] criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                    outcome.detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
