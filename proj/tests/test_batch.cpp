#include <doctest.h>

#include "stodis/batch.hpp"
#include "stodis/discord.hpp"
#include "test_helpers.hpp"

using namespace stodis;
using namespace stodis::testing;

// The parallel kernels must agree with their serial references bit for
// bit: each element is computed from its own index and RNG stream, and
// reductions happen after the loop.

TEST_CASE("pair_discords: parallel == serial, and reproducible") {
    const auto parallel = batch::pair_discords(2000, 3, 17);
    const auto serial = batch::pair_discords_serial(2000, 3, 17);
    CHECK(parallel == serial);
    CHECK(batch::pair_discords(2000, 3, 17) == parallel);
    CHECK(batch::pair_discords(100, 3, 18) != batch::pair_discords(100, 3, 19));
    for (double v : parallel) CHECK(v >= -1e-9);
}

TEST_CASE("state_discords: parallel == serial, identity gives zero") {
    const StochasticChannel noisy = binary_symmetric(0.1);
    CHECK(batch::state_discords(3000, 2, noisy, 5) ==
          batch::state_discords_serial(3000, 2, noisy, 5));

    const auto noiseless = batch::state_discords(500, 2, identity_channel(2), 5);
    for (double v : noiseless) CHECK(near(v, 0.0, 1e-12));
}

TEST_CASE("merge_sweep: parallel == serial, rows labeled correctly") {
    const std::vector<double> qs{0.0, 0.25, 0.5, 0.75, 1.0};
    const std::vector<double> epss{0.0, 0.1, 0.5};
    const auto parallel = batch::merge_sweep(qs, epss);
    CHECK(parallel == batch::merge_sweep_serial(qs, epss));
    REQUIRE(parallel.size() == 15);
    CHECK(parallel[0].q == 0.0);
    CHECK(parallel[4].q == 0.25);
    CHECK(parallel[4].eps == 0.1);
    for (const auto& row : parallel) CHECK(row.discrepancy <= 1e-10);
}

TEST_CASE("bsc_discords: parallel == serial and matches the direct path") {
    const JointDistribution p = correlated_bit();
    const std::vector<double> eps{0.0, 0.05, 0.1, 0.25, 0.5};
    const auto parallel = batch::bsc_discords(p, eps);
    CHECK(parallel == batch::bsc_discords_serial(p, eps));
    for (std::size_t i = 0; i < eps.size(); ++i)
        CHECK(parallel[i] == classical_discord(p, binary_symmetric(eps[i])).discord.bits);
}

TEST_CASE("entrywise_discords and fixed_point_residuals: parallel == serial") {
    const JointDistribution p(Matrix{{0.35, 0.15}, {0.15, 0.35}});
    const std::vector<double> a{0.1, 0.5, 0.9};
    const std::vector<double> b{0.2, 0.8};
    CHECK(batch::entrywise_discords(p, a, b) == batch::entrywise_discords_serial(p, a, b));
    CHECK(batch::fixed_point_residuals(p, a, b) ==
          batch::fixed_point_residuals_serial(p, a, b));

    const auto residuals = batch::fixed_point_residuals(p, a, b);
    const StochasticChannel m01(Matrix{{0.1, 0.2}, {0.9, 0.8}});
    CHECK(residuals[0] == max_abs_diff(apply_to_b(p, m01).probs(), p.probs()));
}
