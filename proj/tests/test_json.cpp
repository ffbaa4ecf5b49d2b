#include <doctest.h>

#include "stodis/errors.hpp"
#include "stodis/json_io.hpp"
#include "stodis/random.hpp"
#include "test_helpers.hpp"

using namespace stodis;
using namespace stodis::testing;
using nlohmann::json;

TEST_CASE("state round trip") {
    Rng rng = make_rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        const JointDistribution p = random_state(rng, 2 + trial % 3, 2 + trial % 2);
        const json j = to_json(p);
        CHECK(joint_from_json(json::parse(j.dump())) == p);
    }
}

TEST_CASE("tripartite round trip") {
    const TripartiteDistribution t = purify(0, 1, 1, 0.3).distribution;
    CHECK(tripartite_from_json(json::parse(to_json(t).dump())) == t);
}

TEST_CASE("channel round trip") {
    Rng rng = make_rng(92);
    for (int trial = 0; trial < 20; ++trial) {
        const StochasticChannel m = random_channel(rng, 2 + trial % 4);
        CHECK(channel_from_json(json::parse(to_json(m).dump())) == m);
    }
}

TEST_CASE("discord report round trip") {
    const DiscordReport r = classical_discord(correlated_bit(), binary_symmetric(0.1));
    const DiscordReport back = discord_report_from_json(json::parse(to_json(r).dump()));
    CHECK(back.mutual_information_i.bits == r.mutual_information_i.bits);
    CHECK(back.measured_j.bits == r.measured_j.bits);
    CHECK(back.discord.bits == r.discord.bits);
    CHECK(back.is_zero == r.is_zero);
}

TEST_CASE("stationary family round trip") {
    const StationaryFamily f = stationary_family(identity_channel(3));
    const StationaryFamily back = stationary_family_from_json(json::parse(to_json(f).dump()));
    CHECK(back.channel_dim == f.channel_dim);
    CHECK(back.vectors == f.vectors);
}

TEST_CASE("family kinds round trip") {
    for (const ChannelFamily& family :
         {ChannelFamily::entrywise_lower_bound(3, 0.05), ChannelFamily::parametric_bsc(0.1, 0.4),
          ChannelFamily::explicit_set({identity_channel(2), binary_symmetric(0.2)})}) {
        const ChannelFamily back = family_from_json(json::parse(to_json(family).dump()));
        CHECK(back.dim() == family.dim());
        CHECK(to_json(back) == to_json(family));
    }
}

TEST_CASE("polytope and minimization reports carry their fields") {
    const ChannelPolytope polytope = zero_discord_channels(uniform_product());
    const json pj = to_json(polytope);
    CHECK(pj.at("dim") == 2);
    CHECK(pj.at("equality").at("matrix").size() == polytope.equality.rows());
    CHECK(pj.at("min_trace").get<double>() == polytope.min_trace_value);
    CHECK(channel_from_json(pj.at("sample_channel")) == polytope.sample);

    const MinimizationResult r = grid_oracle(
        correlated_bit(), ChannelFamily::explicit_set({identity_channel(2)}), 1e-2);
    const json rj = to_json(r);
    CHECK(rj.at("certified") == true);
    CHECK(rj.at("min_discord").get<double>() == r.min_discord.bits);
    CHECK(channel_from_json(rj.at("argmin_channel")) == r.argmin_channel);
}

TEST_CASE("merge rows and reports serialize with sweep column names") {
    const json row = to_json(batch::MergeRow{0.3, 0.1, 1.0, 1.0, 1.0, 0.0});
    CHECK(row.at("q") == 0.3);
    CHECK(row.contains("discord_AC"));
    CHECK(row.contains("H_A_given_Cprime"));
    CHECK(row.contains("H_A_given_Bprime"));

    const json report = to_json(verify_merging_identity(0.3, binary_symmetric(0.1)));
    CHECK(report.at("max_discrepancy").get<double>() <= 1e-10);
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(joint_from_json(json::parse(R"({"probs": [[0.5],[0.5]]})")),
                    MalformedInput);
    CHECK_THROWS_AS(
        joint_from_json(json::parse(R"({"dims": [2,2], "probs": [[0.5],[0.5]]})")),
        MalformedInput);
    CHECK_THROWS_AS(joint_from_json(json::parse(R"({"dims": [2,1], "probs": [[0.5],["x"]]})")),
                    MalformedInput);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1,2],[3]])")), MalformedInput);
    CHECK_THROWS_AS(channel_from_json(json::parse(R"({"dim": 3, "matrix": [[1,0],[0,1]]})")),
                    MalformedInput);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"kind": "mystery"})")), MalformedInput);

    // parse errors distinct from validation errors
    CHECK_THROWS_AS(
        joint_from_json(json::parse(R"({"dims": [2,2], "probs": [[0.9,0],[0,0.2]]})")),
        NotNormalized);
}
