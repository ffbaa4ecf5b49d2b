#include "stodis/json_io.hpp"

#include <string>

#include "stodis/errors.hpp"

namespace stodis {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing key \"") + key + '"');
    return *it;
}

std::vector<double> number_row(const json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array of numbers");
    std::vector<double> row;
    row.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw MalformedInput("expected a number");
        row.push_back(v.get<double>());
    }
    return row;
}

}  // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw MalformedInput("matrix must be a nonempty array");
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) rows.push_back(number_row(row));
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw MalformedInput("ragged matrix rows");
    }
    return Matrix(rows);
}

json to_json(const JointDistribution& p) {
    return json{{"dims", {p.dim_a(), p.dim_b()}}, {"probs", to_json(p.probs())}};
}

JointDistribution joint_from_json(const json& j) {
    const Matrix probs = matrix_from_json(require(j, "probs"));
    const auto dims = number_row(require(j, "dims"));
    if (dims.size() != 2 || static_cast<std::size_t>(dims[0]) != probs.rows() ||
        static_cast<std::size_t>(dims[1]) != probs.cols())
        throw MalformedInput("dims do not match the probs shape");
    return JointDistribution(probs);
}

json to_json(const TripartiteDistribution& t) {
    const auto [da, db, dc] = t.dims();
    json outer = json::array();
    for (std::size_t i = 0; i < da; ++i) {
        json mid = json::array();
        for (std::size_t j = 0; j < db; ++j) {
            json inner = json::array();
            for (std::size_t k = 0; k < dc; ++k) inner.push_back(t(i, j, k));
            mid.push_back(std::move(inner));
        }
        outer.push_back(std::move(mid));
    }
    return json{{"dims", {da, db, dc}}, {"probs", std::move(outer)}};
}

TripartiteDistribution tripartite_from_json(const json& j) {
    const auto dims = number_row(require(j, "dims"));
    if (dims.size() != 3) throw MalformedInput("tripartite dims must have three entries");
    const auto da = static_cast<std::size_t>(dims[0]);
    const auto db = static_cast<std::size_t>(dims[1]);
    const auto dc = static_cast<std::size_t>(dims[2]);
    const json& probs = require(j, "probs");
    if (!probs.is_array() || probs.size() != da)
        throw MalformedInput("tripartite probs do not match dims");
    std::vector<double> flat;
    flat.reserve(da * db * dc);
    for (const auto& mid : probs) {
        if (!mid.is_array() || mid.size() != db)
            throw MalformedInput("tripartite probs do not match dims");
        for (const auto& inner : mid) {
            const auto row = number_row(inner);
            if (row.size() != dc) throw MalformedInput("tripartite probs do not match dims");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return TripartiteDistribution({da, db, dc}, std::move(flat));
}

json to_json(const StochasticChannel& m) {
    return json{{"dim", m.dim()}, {"matrix", to_json(m.matrix())}};
}

StochasticChannel channel_from_json(const json& j) {
    const Matrix m = matrix_from_json(require(j, "matrix"));
    const json& dim = require(j, "dim");
    if (!dim.is_number() || dim.get<std::size_t>() != m.rows())
        throw MalformedInput("dim does not match the matrix shape");
    return StochasticChannel(m);
}

json to_json(const DiscordReport& r) {
    return json{{"mutual_information_I", r.mutual_information_i.bits},
                {"measured_J", r.measured_j.bits},
                {"discord", r.discord.bits},
                {"is_zero", r.is_zero}};
}

DiscordReport discord_report_from_json(const json& j) {
    return DiscordReport{{require(j, "mutual_information_I").get<double>()},
                         {require(j, "measured_J").get<double>()},
                         {require(j, "discord").get<double>()},
                         require(j, "is_zero").get<bool>()};
}

json to_json(const StationaryFamily& f) {
    return json{{"channel_dim", f.channel_dim}, {"vectors", f.vectors}};
}

StationaryFamily stationary_family_from_json(const json& j) {
    StationaryFamily f;
    f.channel_dim = require(j, "channel_dim").get<std::size_t>();
    for (const auto& v : require(j, "vectors")) f.vectors.push_back(number_row(v));
    for (const auto& v : f.vectors) {
        if (v.size() != f.channel_dim)
            throw MalformedInput("stationary vector length does not match channel_dim");
    }
    return f;
}

json to_json(const ChannelPolytope& polytope) {
    return json{{"state_dim_a", polytope.state_dim_a},
                {"dim", polytope.dim},
                {"equality", {{"matrix", to_json(polytope.equality)}, {"rhs", polytope.rhs}}},
                {"sample_channel", to_json(polytope.sample)},
                {"min_trace_channel", to_json(polytope.min_trace)},
                {"min_trace", polytope.min_trace_value}};
}

json to_json(const ChannelFamily& family) {
    if (const auto* lb = std::get_if<ChannelFamily::EntrywiseLowerBound>(&family.kind())) {
        return json{{"kind", "entrywise_lower_bound"},
                    {"dim", family.dim()},
                    {"epsilon", lb->epsilon}};
    }
    if (const auto* bsc = std::get_if<ChannelFamily::ParametricBsc>(&family.kind())) {
        return json{{"kind", "parametric_bsc"},
                    {"eps_min", bsc->eps_min},
                    {"eps_max", bsc->eps_max}};
    }
    const auto& set = std::get<ChannelFamily::ExplicitSet>(family.kind());
    json channels = json::array();
    for (const auto& m : set.channels) channels.push_back(to_json(m));
    return json{{"kind", "explicit_set"}, {"channels", std::move(channels)}};
}

ChannelFamily family_from_json(const json& j) {
    const std::string kind = require(j, "kind").get<std::string>();
    if (kind == "entrywise_lower_bound") {
        return ChannelFamily::entrywise_lower_bound(require(j, "dim").get<std::size_t>(),
                                                    require(j, "epsilon").get<double>());
    }
    if (kind == "parametric_bsc") {
        return ChannelFamily::parametric_bsc(require(j, "eps_min").get<double>(),
                                             require(j, "eps_max").get<double>());
    }
    if (kind == "explicit_set") {
        std::vector<StochasticChannel> channels;
        for (const auto& c : require(j, "channels")) channels.push_back(channel_from_json(c));
        return ChannelFamily::explicit_set(std::move(channels));
    }
    throw MalformedInput("unknown family kind \"" + kind + '"');
}

json to_json(const MinimizationResult& r) {
    return json{{"min_discord", r.min_discord.bits},
                {"argmin_channel", to_json(r.argmin_channel)},
                {"iterations", r.iterations},
                {"certified", r.certified}};
}

json to_json(const MergingReport& r) {
    return json{{"discord_AC", r.discord_a_to_c.bits},
                {"H_A_given_Cprime", r.h_a_given_c_noisy.bits},
                {"H_A_given_Bprime", r.h_a_given_b_noisy.bits},
                {"max_discrepancy", r.max_discrepancy}};
}

json to_json(const batch::MergeRow& row) {
    return json{{"q", row.q},
                {"eps", row.eps},
                {"discord_AC", row.discord_ac},
                {"H_A_given_Cprime", row.h_a_given_c_noisy},
                {"H_A_given_Bprime", row.h_a_given_b_noisy},
                {"discrepancy", row.discrepancy}};
}

}  // namespace stodis
