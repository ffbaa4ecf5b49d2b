#include "stodis/polytope.hpp"

#include <string>

#include "stodis/errors.hpp"
#include "stodis/simplex.hpp"

namespace stodis {

namespace {

// Equality system over x = vec(M) (column-major, so column j of M is the
// block x[j·d .. j·d+d)): first the d_A·d fixed-point rows
// Σ_b p(i,b)·M(c,b) = p(i,c), then the d column-sum rows.
void build_system(const JointDistribution& p, Matrix& eq, std::vector<double>& rhs) {
    const std::size_t da = p.dim_a(), d = p.dim_b();
    const std::size_t vars = d * d;
    eq = Matrix(da * d + d, vars);
    rhs.assign(da * d + d, 0.0);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t row = i * d + c;
            for (std::size_t b = 0; b < d; ++b) eq(row, b * d + c) = p(i, b);
            rhs[row] = p(i, c);
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = da * d + j;
        for (std::size_t i = 0; i < d; ++i) eq(row, j * d + i) = 1.0;
        rhs[row] = 1.0;
    }
}

StochasticChannel channel_from_vec(std::span<const double> x, std::size_t d) {
    return StochasticChannel(unvec(x, d, d));
}

}  // namespace

ChannelPolytope zero_discord_channels(const JointDistribution& p) {
    const std::size_t d = p.dim_b();
    Matrix eq;
    std::vector<double> rhs;
    build_system(p, eq, rhs);

    const std::vector<double> zero_objective(d * d, 0.0);
    std::vector<double> trace_objective(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) trace_objective[i * d + i] = 1.0;

    const LpResult any = solve_lp(eq, rhs, zero_objective);
    if (any.status != LpStatus::Optimal)
        throw NumericalFailure("channel polytope reported empty, but the identity is a member");
    const LpResult least_trace = solve_lp(eq, rhs, trace_objective);
    if (least_trace.status != LpStatus::Optimal)
        throw NumericalFailure("trace minimization over the channel polytope failed");

    return ChannelPolytope{
        p.dim_a(),
        d,
        std::move(eq),
        std::move(rhs),
        channel_from_vec(any.x, d),
        channel_from_vec(least_trace.x, d),
        least_trace.objective,
    };
}

StochasticChannel feasible_channel(const ChannelPolytope& polytope,
                                   const std::vector<double>& objective) {
    if (objective.size() != polytope.dim * polytope.dim)
        throw SizeMismatch("objective needs one entry per channel matrix entry");
    const LpResult r = solve_lp(polytope.equality, polytope.rhs, objective);
    if (r.status != LpStatus::Optimal)
        throw NumericalFailure("feasible-point query did not reach an optimum");
    return channel_from_vec(r.x, polytope.dim);
}

std::vector<StochasticChannel> polytope_vertices(const ChannelPolytope& polytope) {
    if (polytope.dim > 3)
        throw DimensionTooLarge("vertex enumeration is offered for dimension <= 3, got " +
                                std::to_string(polytope.dim));
    std::vector<StochasticChannel> out;
    for (const auto& x : enumerate_basic_feasible(polytope.equality, polytope.rhs))
        out.push_back(channel_from_vec(x, polytope.dim));
    return out;
}

}  // namespace stodis
