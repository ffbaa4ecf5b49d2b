#include "stodis/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "stodis/batch.hpp"
#include "stodis/discord.hpp"
#include "stodis/errors.hpp"
#include "stodis/random.hpp"

namespace stodis {

ChannelFamily ChannelFamily::entrywise_lower_bound(std::size_t dim, double epsilon) {
    if (dim == 0) throw OutOfRange("family dimension must be positive");
    if (!(epsilon >= 0.0)) throw OutOfRange("entrywise lower bound must be nonnegative");
    if (epsilon > 1.0 / static_cast<double>(dim))
        throw EmptyFamily("no column-stochastic matrix has every entry >= " +
                          std::to_string(epsilon));
    return ChannelFamily(dim, EntrywiseLowerBound{epsilon});
}

ChannelFamily ChannelFamily::parametric_bsc(double eps_min, double eps_max) {
    if (!(eps_min >= 0.0 && eps_min <= eps_max && eps_max <= 0.5))
        throw OutOfRange("flip-probability range must satisfy 0 <= min <= max <= 1/2");
    return ChannelFamily(2, ParametricBsc{eps_min, eps_max});
}

ChannelFamily ChannelFamily::explicit_set(std::vector<StochasticChannel> channels) {
    if (channels.empty()) throw EmptyFamily("explicit channel set is empty");
    const std::size_t dim = channels.front().dim();
    for (const auto& m : channels) {
        if (m.dim() != dim)
            throw DimensionMismatch("explicit channel set mixes dimensions");
    }
    return ChannelFamily(dim, ExplicitSet{std::move(channels)});
}

bool ChannelFamily::contains(const StochasticChannel& m, double tol) const {
    if (m.dim() != dim_) return false;
    if (const auto* lb = std::get_if<EntrywiseLowerBound>(&kind_)) {
        for (double v : m.matrix().flat())
            if (v < lb->epsilon - tol) return false;
        return true;
    }
    if (const auto* bsc = std::get_if<ParametricBsc>(&kind_)) {
        const double eps = 0.5 * (m(0, 1) + m(1, 0));
        return std::abs(m(0, 1) - m(1, 0)) <= tol &&
               std::abs(m(0, 0) - (1.0 - eps)) <= tol &&
               std::abs(m(1, 1) - (1.0 - eps)) <= tol &&
               eps >= bsc->eps_min - tol && eps <= bsc->eps_max + tol;
    }
    const auto& set = std::get<ExplicitSet>(kind_);
    for (const auto& member : set.channels)
        if (max_abs_diff(member.matrix(), m.matrix()) <= tol) return true;
    return false;
}

namespace {

constexpr double kIdentityGapTol = 1e-10;
constexpr double kCertifyTol = 1e-6;
constexpr double kOracleStep = 1e-3;

// |(I - J) - (H(A|B') - H(A|B))|: the two algebraic routes to the same
// quantity, used as an internal consistency gate at the returned point.
double form_gap(const JointDistribution& p, const StochasticChannel& m) {
    const DiscordReport r = classical_discord(p, m);
    const double via_conditional = conditional_entropy_a_given_b(apply_to_b(p, m)).bits -
                                   conditional_entropy_a_given_b(p).bits;
    return std::abs(r.discord.bits - via_conditional);
}

// Euclidean projection of v onto {x >= 0, Σx = mass}.
void project_scaled_simplex(std::vector<double>& v, double mass) {
    if (mass <= 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        return;
    }
    std::vector<double> u(v);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0, tau = 0.0;
    std::size_t support = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        cumulative += u[k];
        const double candidate = (cumulative - mass) / static_cast<double>(k + 1);
        if (u[k] - candidate > 0.0) {
            tau = candidate;
            support = k + 1;
        }
    }
    if (support == 0) tau = (cumulative - mass) / static_cast<double>(u.size());
    for (double& x : v) x = std::max(0.0, x - tau);
}

struct ParamSpace {
    std::size_t n = 0;
    double init_step = 0.1;
    std::vector<std::vector<double>> starts;
    std::function<void(std::vector<double>&)> project;
    std::function<StochasticChannel(const std::vector<double>&)> make;
};

ParamSpace bsc_space(const ChannelFamily::ParametricBsc& bsc, std::uint64_t seed) {
    ParamSpace space;
    space.n = 1;
    space.init_step = std::max(1e-3, 0.25 * (bsc.eps_max - bsc.eps_min));
    space.project = [bsc](std::vector<double>& x) {
        x[0] = std::clamp(x[0], bsc.eps_min, bsc.eps_max);
    };
    space.make = [](const std::vector<double>& x) { return binary_symmetric(x[0]); };
    space.starts = {{bsc.eps_min}, {bsc.eps_max}};
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(bsc.eps_min, bsc.eps_max);
    while (space.starts.size() < 8) space.starts.push_back({unif(rng)});
    return space;
}

ParamSpace entrywise_space(const ChannelFamily::EntrywiseLowerBound& lb, std::size_t d,
                           std::uint64_t seed) {
    const double eps = lb.epsilon;
    const double free_mass = 1.0 - eps * static_cast<double>(d);
    ParamSpace space;
    space.n = d * d;
    space.init_step = std::max(1e-3, 0.25 * free_mass);
    space.project = [d, eps, free_mass](std::vector<double>& x) {
        std::vector<double> column(d);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i) column[i] = x[i * d + j] - eps;
            project_scaled_simplex(column, free_mass);
            for (std::size_t i = 0; i < d; ++i) x[i * d + j] = column[i] + eps;
        }
    };
    space.make = [d](const std::vector<double>& x) {
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = x[i * d + j];
        return StochasticChannel(std::move(m));
    };

    // Extreme starts: the clamped permutation channels (identity and the
    // cyclic shifts), the uniform channel, then random interior points.
    const auto permutation_start = [&](std::size_t shift) {
        std::vector<double> x(d * d, eps);
        for (std::size_t j = 0; j < d; ++j)
            x[((j + shift) % d) * d + j] = 1.0 - eps * static_cast<double>(d - 1);
        return x;
    };
    for (std::size_t shift = 0; shift < d; ++shift)
        space.starts.push_back(permutation_start(shift));
    space.starts.emplace_back(d * d, 1.0 / static_cast<double>(d));
    Rng rng = make_rng(seed);
    while (space.starts.size() < 8) {
        std::vector<double> x(d * d);
        for (std::size_t j = 0; j < d; ++j) {
            const std::vector<double> col = random_simplex_point(rng, d);
            for (std::size_t i = 0; i < d; ++i) x[i * d + j] = eps + free_mass * col[i];
        }
        space.starts.push_back(std::move(x));
    }
    return space;
}

struct SearchOutcome {
    double value = 0.0;
    std::vector<double> params;
    long evaluations = 0;
    bool converged = false;
};

// Projected Nelder-Mead; every trial point is pulled back into the
// constraint set before evaluation.
SearchOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const ParamSpace& space, std::vector<double> x0,
                          long max_evaluations) {
    const std::size_t n = space.n;
    SearchOutcome out;

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    space.project(x0);
    xs.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = x0;
        x[i] += space.init_step;
        space.project(x);
        if (max_abs_diff(std::span<const double>(x), std::span<const double>(x0)) < 1e-12) {
            x = x0;
            x[i] -= space.init_step;
            space.project(x);
        }
        xs.push_back(std::move(x));
    }
    for (const auto& x : xs) {
        fs.push_back(f(x));
        ++out.evaluations;
    }

    std::vector<std::size_t> order(n + 1);
    const auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    };

    while (out.evaluations < max_evaluations) {
        sort_simplex();
        const std::size_t best = order.front(), worst = order.back();
        if (fs[worst] - fs[best] < 1e-13) {
            double spread = 0.0;
            for (std::size_t i = 0; i <= n; ++i)
                spread = std::max(spread, max_abs_diff(std::span<const double>(xs[i]),
                                                       std::span<const double>(xs[best])));
            if (spread < 1e-10) {
                out.converged = true;
                break;
            }
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += xs[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto blend = [&](double t) {
            std::vector<double> x(n);
            for (std::size_t k = 0; k < n; ++k)
                x[k] = centroid[k] + t * (centroid[k] - xs[worst][k]);
            space.project(x);
            return x;
        };

        std::vector<double> reflected = blend(1.0);
        const double f_reflected = f(reflected);
        ++out.evaluations;
        if (f_reflected < fs[order[0]]) {
            std::vector<double> expanded = blend(2.0);
            const double f_expanded = f(expanded);
            ++out.evaluations;
            if (f_expanded < f_reflected) {
                xs[worst] = std::move(expanded);
                fs[worst] = f_expanded;
            } else {
                xs[worst] = std::move(reflected);
                fs[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fs[order[n - 1]]) {
            xs[worst] = std::move(reflected);
            fs[worst] = f_reflected;
            continue;
        }
        std::vector<double> contracted =
            f_reflected < fs[worst] ? blend(0.5) : blend(-0.5);
        const double f_contracted = f(contracted);
        ++out.evaluations;
        if (f_contracted < std::min(f_reflected, fs[worst])) {
            xs[worst] = std::move(contracted);
            fs[worst] = f_contracted;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k)
                xs[i][k] = xs[best][k] + 0.5 * (xs[i][k] - xs[best][k]);
            space.project(xs[i]);
            fs[i] = f(xs[i]);
            ++out.evaluations;
            if (out.evaluations >= max_evaluations) break;
        }
    }

    sort_simplex();
    out.value = fs[order.front()];
    out.params = xs[order.front()];
    return out;
}

MinimizationResult explicit_set_minimum(const JointDistribution& p,
                                        const ChannelFamily::ExplicitSet& set) {
    std::size_t argmin = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < set.channels.size(); ++i) {
        const double value = classical_discord(p, set.channels[i]).discord.bits;
        if (i == 0 || value < best) {
            best = value;
            argmin = i;
        }
    }
    return MinimizationResult{{best},
                              set.channels[argmin],
                              static_cast<long>(set.channels.size()),
                              true};
}

std::vector<double> grid_points(double lo, double hi, double step) {
    std::vector<double> points;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    points.reserve(count + 1);
    for (std::size_t i = 0; i < count; ++i) points.push_back(lo + static_cast<double>(i) * step);
    if (hi - points.back() > 1e-12) points.push_back(hi);
    return points;
}

}  // namespace

MinimizationResult grid_oracle(const JointDistribution& p, const ChannelFamily& family,
                               double step) {
    if (!(step > 0.0)) throw OutOfRange("grid step must be positive");
    if (family.dim() != p.dim_b())
        throw DimensionMismatch("family dimension does not match the B alphabet");

    if (const auto* set = std::get_if<ChannelFamily::ExplicitSet>(&family.kind()))
        return explicit_set_minimum(p, *set);

    if (const auto* bsc = std::get_if<ChannelFamily::ParametricBsc>(&family.kind())) {
        const std::vector<double> eps = grid_points(bsc->eps_min, bsc->eps_max, step);
        const std::vector<double> values = batch::bsc_discords(p, eps);
        const std::size_t argmin = static_cast<std::size_t>(
            std::min_element(values.begin(), values.end()) - values.begin());
        return MinimizationResult{{values[argmin]},
                                  binary_symmetric(eps[argmin]),
                                  static_cast<long>(values.size()),
                                  true};
    }

    const auto& lb = std::get<ChannelFamily::EntrywiseLowerBound>(family.kind());
    if (family.dim() != 2)
        throw DimensionTooLarge("entrywise grids are offered for dimension 2 only");
    const std::vector<double> axis = grid_points(lb.epsilon, 1.0 - lb.epsilon, step);
    const std::vector<double> values = batch::entrywise_discords(p, axis, axis);
    const std::size_t argmin = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    const double a = axis[argmin / axis.size()];
    const double b = axis[argmin % axis.size()];
    return MinimizationResult{{values[argmin]},
                              StochasticChannel(Matrix{{a, b}, {1.0 - a, 1.0 - b}}),
                              static_cast<long>(values.size()),
                              true};
}

MinimizationResult stochastic_discord(const JointDistribution& p, const ChannelFamily& family,
                                      long budget, std::uint64_t seed) {
    if (family.dim() != p.dim_b())
        throw DimensionMismatch("family dimension does not match the B alphabet");
    if (budget < 1) throw OutOfRange("evaluation budget must be at least 1");

    if (const auto* set = std::get_if<ChannelFamily::ExplicitSet>(&family.kind())) {
        MinimizationResult result = explicit_set_minimum(p, *set);
        if (form_gap(p, result.argmin_channel) > kIdentityGapTol)
            throw NumericalFailure("mutual-information and conditional-entropy forms disagree");
        return result;
    }

    ParamSpace space;
    if (const auto* bsc = std::get_if<ChannelFamily::ParametricBsc>(&family.kind()))
        space = bsc_space(*bsc, seed);
    else
        space = entrywise_space(std::get<ChannelFamily::EntrywiseLowerBound>(family.kind()),
                                family.dim(), seed);

    const auto objective = [&](const std::vector<double>& x) {
        return classical_discord(p, space.make(x)).discord.bits;
    };

    const long starts = static_cast<long>(space.starts.size());
    const long per_start =
        std::max<long>(budget / starts, static_cast<long>(space.n) + 2);
    std::vector<SearchOutcome> outcomes(space.starts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(space.starts.size()); ++s)
        outcomes[s] = nelder_mead(objective, space, space.starts[s], per_start);

    std::size_t best = 0;
    long total_evaluations = 0;
    bool all_converged = true;
    for (std::size_t s = 0; s < outcomes.size(); ++s) {
        total_evaluations += outcomes[s].evaluations;
        all_converged = all_converged && outcomes[s].converged;
        if (outcomes[s].value < outcomes[best].value) best = s;
    }

    MinimizationResult result{{outcomes[best].value},
                              space.make(outcomes[best].params),
                              total_evaluations,
                              false};
    if (form_gap(p, result.argmin_channel) > kIdentityGapTol)
        throw NumericalFailure("mutual-information and conditional-entropy forms disagree");

    const bool oracle_feasible =
        std::holds_alternative<ChannelFamily::ParametricBsc>(family.kind()) ||
        family.dim() == 2;
    if (all_converged && oracle_feasible) {
        const MinimizationResult oracle = grid_oracle(p, family, kOracleStep);
        result.certified =
            std::abs(result.min_discord.bits - oracle.min_discord.bits) <= kCertifyTol;
    }
    return result;
}

}  // namespace stodis
