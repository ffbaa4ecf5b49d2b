// Command-line front end: batch discord computation, zero-discord state
// and channel characterization, constrained minimization, merging-identity
// sweeps and purity checks, with JSON/CSV emission.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "stodis/batch.hpp"
#include "stodis/discord.hpp"
#include "stodis/errors.hpp"
#include "stodis/json_io.hpp"
#include "stodis/merging.hpp"
#include "stodis/minimize.hpp"
#include "stodis/polytope.hpp"
#include "stodis/random.hpp"
#include "stodis/stationary.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;  // empty = stdout
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    std::string format = "json";
};

json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw stodis::MalformedInput("cannot open input file " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw stodis::MalformedInput(std::string("input is not valid JSON: ") + e.what());
    }
}

// 17 significant digits: enough to reproduce any double exactly.
std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out) throw stodis::MalformedInput("cannot open output file " + cfg.output_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    if (points == 0) throw stodis::OutOfRange("grid needs at least one point");
    std::vector<double> v(points);
    if (points == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < points; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return v;
}

std::string csv_single_row(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::ostringstream head, row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            head << ',';
            row << ',';
        }
        head << fields[i].first;
        row << fields[i].second;
    }
    return head.str() + '\n' + row.str();
}

std::string run_discord(const RunConfig& cfg, const json& in) {
    const auto state = stodis::joint_from_json(in.at("state"));
    const auto channel = stodis::channel_from_json(in.at("channel"));
    const stodis::DiscordReport report =
        stodis::classical_discord(state, channel, cfg.tolerance);
    if (cfg.format == "csv") {
        return csv_single_row({{"mutual_information_I", format_double(report.mutual_information_i.bits)},
                               {"measured_J", format_double(report.measured_j.bits)},
                               {"discord", format_double(report.discord.bits)},
                               {"is_zero", report.is_zero ? "true" : "false"}});
    }
    return stodis::to_json(report).dump(2);
}

std::string run_zero_states(const RunConfig& cfg, const json& in) {
    const auto channel = stodis::channel_from_json(in.at("channel"));
    const stodis::StationaryFamily family = stodis::stationary_family(channel);

    stodis::Matrix weights;
    if (in.contains("weights")) {
        weights = stodis::matrix_from_json(in.at("weights"));
    } else {
        // a generic member: seeded flat-random weights, one row per B value
        stodis::Rng rng = stodis::make_rng(cfg.seed);
        const auto flat =
            stodis::random_simplex_point(rng, channel.dim() * family.count());
        weights = stodis::Matrix(channel.dim(), family.count());
        for (std::size_t j = 0; j < channel.dim(); ++j)
            for (std::size_t k = 0; k < family.count(); ++k)
                weights(j, k) = flat[j * family.count() + k];
    }
    const stodis::JointDistribution state = stodis::make_zero_discord_state(family, weights);

    if (cfg.format == "csv") {
        std::ostringstream out;
        for (std::size_t i = 0; i < family.channel_dim; ++i)
            out << (i ? "," : "") << 'v' << i;
        out << '\n';
        for (const auto& vec : family.vectors) {
            for (std::size_t i = 0; i < vec.size(); ++i)
                out << (i ? "," : "") << format_double(vec[i]);
            out << '\n';
        }
        return out.str();
    }
    json out;
    out["family"] = stodis::to_json(family);
    out["sample_state"] = {{"weights", stodis::to_json(weights)},
                           {"state", stodis::to_json(state)}};
    return out.dump(2);
}

std::string run_zero_channels(const RunConfig& cfg, const json& in) {
    const auto state = stodis::joint_from_json(in.at("state"));
    const stodis::ChannelPolytope polytope = stodis::zero_discord_channels(state);
    if (cfg.format == "csv") {
        std::ostringstream out;
        for (std::size_t j = 0; j < polytope.dim; ++j) out << (j ? "," : "") << 'm' << j;
        out << '\n';
        for (std::size_t i = 0; i < polytope.dim; ++i) {
            for (std::size_t j = 0; j < polytope.dim; ++j)
                out << (j ? "," : "") << format_double(polytope.min_trace(i, j));
            out << '\n';
        }
        return out.str();
    }
    json out = stodis::to_json(polytope);
    if (polytope.dim <= 3) {
        json vertices = json::array();
        for (const auto& v : stodis::polytope_vertices(polytope))
            vertices.push_back(stodis::to_json(v));
        out["vertices"] = std::move(vertices);
    }
    return out.dump(2);
}

std::string run_min_discord(const RunConfig& cfg, const json& in) {
    const auto state = stodis::joint_from_json(in.at("state"));
    const auto family = stodis::family_from_json(in.at("family"));
    const long budget = in.value("budget", 20000L);
    const stodis::MinimizationResult result =
        stodis::stochastic_discord(state, family, budget, cfg.seed);
    if (cfg.format == "csv") {
        return csv_single_row({{"min_discord", format_double(result.min_discord.bits)},
                               {"iterations", std::to_string(result.iterations)},
                               {"certified", result.certified ? "true" : "false"}});
    }
    return stodis::to_json(result).dump(2);
}

std::string run_merge_demo(const RunConfig& cfg, const json& in) {
    const auto q_points = in.value("q_points", std::size_t{101});
    const auto eps_points = in.value("eps_points", std::size_t{11});
    const std::vector<double> qs = linspace(0.0, 1.0, q_points);
    const std::vector<double> epss = linspace(0.0, 0.5, eps_points);
    const std::vector<stodis::batch::MergeRow> rows = stodis::batch::merge_sweep(qs, epss);
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "q,eps,discord_AC,H_A_given_Cprime,H_A_given_Bprime,discrepancy\n";
        for (const auto& r : rows) {
            out << format_double(r.q) << ',' << format_double(r.eps) << ','
                << format_double(r.discord_ac) << ',' << format_double(r.h_a_given_c_noisy)
                << ',' << format_double(r.h_a_given_b_noisy) << ','
                << format_double(r.discrepancy) << '\n';
        }
        return out.str();
    }
    json out;
    out["rows"] = json::array();
    for (const auto& r : rows) out["rows"].push_back(stodis::to_json(r));
    return out.dump(2);
}

std::string run_purity_check(const RunConfig& cfg, const json& in) {
    const auto state = stodis::joint_from_json(in.at("state"));
    const auto support = stodis::conditionally_pure_support(state, cfg.tolerance);
    const double h_ab = stodis::conditional_entropy_a_given_b(state).bits;
    const double h_ba = stodis::conditional_entropy_b_given_a(state).bits;
    if (cfg.format == "csv") {
        return csv_single_row({{"conditionally_pure", support ? "true" : "false"},
                               {"h_a_given_b", format_double(h_ab)},
                               {"h_b_given_a", format_double(h_ba)}});
    }
    json out;
    out["conditionally_pure"] = support.has_value();
    out["bijection"] = support ? json(*support) : json(nullptr);
    out["h_a_given_b"] = h_ab;
    out["h_b_given_a"] = h_ba;
    return out.dump(2);
}

int run(const RunConfig& cfg) {
    try {
        const json in = load_input(cfg.input_path);
        std::string text;
        if (cfg.command == "discord") text = run_discord(cfg, in);
        else if (cfg.command == "zero-states") text = run_zero_states(cfg, in);
        else if (cfg.command == "zero-channels") text = run_zero_channels(cfg, in);
        else if (cfg.command == "min-discord") text = run_min_discord(cfg, in);
        else if (cfg.command == "merge-demo") text = run_merge_demo(cfg, in);
        else if (cfg.command == "purity-check") text = run_purity_check(cfg, in);
        emit(cfg, text);
        return 0;
    } catch (const stodis::NumericalFailure& e) {
        std::cerr << json{{"error", {{"type", e.kind()}, {"message", e.what()}}}}.dump() << '\n';
        return 2;
    } catch (const stodis::Error& e) {
        std::cerr << json{{"error", {{"type", e.kind()}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", {{"type", "MalformedInput"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"type", "InternalError"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical discord of bipartite states under noisy readout channels"};
    app.require_subcommand(1);

    RunConfig cfg;
    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "input JSON file")->required();
        sub->add_option("--output", cfg.output_path, "output file (default: stdout)");
        sub->add_option("--tol", cfg.tolerance, "comparison tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for any sampled quantities");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    add_common(app.add_subcommand("discord", "discord of a state under a channel"));
    add_common(app.add_subcommand("zero-states",
                                  "stationary family and a sample invariant state"));
    add_common(app.add_subcommand("zero-channels",
                                  "polytope of channels leaving a state invariant"));
    add_common(app.add_subcommand("min-discord", "minimize discord over a channel family"));
    add_common(app.add_subcommand("merge-demo",
                                  "merging-identity sweep over mixing and noise grids"));
    add_common(app.add_subcommand("purity-check", "conditional purity verdict and bijection"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error",
                                     {{"type", "ArgumentError"}, {"message", e.what()}}}}
                         .dump()
                  << '\n';
        return 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg);
}
