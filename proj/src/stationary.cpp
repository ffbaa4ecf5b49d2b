#include "stodis/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stodis/errors.hpp"

namespace stodis {

namespace {

constexpr double kEdgeTol = 0.0;          // any positive mass is an edge
constexpr double kResidualLimit = 1e-8;

// Iterative Tarjan SCC over the transition graph j -> i iff M(i,j) > 0.
// Returns the component id of each node; ids are in reverse topological
// order, which we do not rely on.
std::vector<int> strongly_connected_components(const Matrix& m, int& component_count) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    component_count = 0;

    struct Frame {
        int node;
        int next_succ;
    };

    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> call_stack{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const int v = frame.node;
            bool descended = false;
            while (frame.next_succ < n) {
                const int w = frame.next_succ++;
                if (m(static_cast<std::size_t>(w), static_cast<std::size_t>(v)) <= kEdgeTol)
                    continue;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = component_count;
                } while (w != v);
                ++component_count;
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const int parent = call_stack.back().node;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return component;
}

// Unique stationary vector of an irreducible column-stochastic block,
// solved as (I - M_C + 11ᵀ)·x = 1, which is nonsingular on an irreducible
// class and enforces Σx = 1.
std::vector<double> stationary_on_class(const Matrix& m, const std::vector<int>& nodes) {
    const std::size_t c = nodes.size();
    Matrix system(c, c, 1.0);
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = 0; b < c; ++b) {
            system(a, b) -= m(static_cast<std::size_t>(nodes[a]),
                              static_cast<std::size_t>(nodes[b]));
        }
        system(a, a) += 1.0;
    }
    std::vector<double> x = solve_linear(std::move(system), std::vector<double>(c, 1.0));
    double sum = 0.0;
    for (double& v : x) {
        if (v < 0.0) v = 0.0;  // fp noise only; entries are positive in theory
        sum += v;
    }
    for (double& v : x) v /= sum;
    return x;
}

}  // namespace

StationaryFamily stationary_family(const StochasticChannel& m) {
    const std::size_t d = m.dim();
    int component_count = 0;
    const std::vector<int> component = strongly_connected_components(m.matrix(), component_count);

    std::vector<std::vector<int>> members(component_count);
    for (std::size_t v = 0; v < d; ++v) members[component[v]].push_back(static_cast<int>(v));

    // A class is recurrent iff no edge leaves it.
    std::vector<bool> closed(component_count, true);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            if (m(i, j) > kEdgeTol && component[i] != component[j]) {
                closed[component[j]] = false;
            }
        }
    }

    StationaryFamily family;
    family.channel_dim = d;
    for (int c = 0; c < component_count; ++c) {
        if (!closed[c]) continue;
        const std::vector<double> pi = stationary_on_class(m.matrix(), members[c]);
        std::vector<double> full(d, 0.0);
        for (std::size_t a = 0; a < members[c].size(); ++a)
            full[static_cast<std::size_t>(members[c][a])] = pi[a];

        double residual = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            double mi = 0.0;
            for (std::size_t j = 0; j < d; ++j) mi += m(i, j) * full[j];
            residual = std::max(residual, std::abs(mi - full[i]));
        }
        if (residual > kResidualLimit)
            throw NumericalFailure("stationary vector residual " + std::to_string(residual));
        family.vectors.push_back(std::move(full));
    }
    return family;
}

JointDistribution make_zero_discord_state(const StationaryFamily& family,
                                          const Matrix& weights) {
    if (weights.cols() != family.count())
        throw InvalidWeights("weights need one column per stationary vector");
    if (weights.rows() == 0) throw InvalidWeights("weights need at least one row");
    double total = 0.0;
    for (double w : weights.flat()) {
        if (!(w >= 0.0)) throw InvalidWeights("weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > kNormalizationTol)
        throw InvalidWeights("weights sum to " + std::to_string(total));

    Matrix probs(weights.rows(), family.channel_dim);
    for (std::size_t j = 0; j < weights.rows(); ++j)
        for (std::size_t k = 0; k < family.count(); ++k)
            for (std::size_t b = 0; b < family.channel_dim; ++b)
                probs(j, b) += weights(j, k) * family.vectors[k][b];
    return JointDistribution(std::move(probs));
}

Matrix vectorized_noise_action(const StochasticChannel& m, std::size_t dim_a) {
    return kron(m.matrix(), Matrix::identity(dim_a));
}

}  // namespace stodis
