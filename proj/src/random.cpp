#include "stodis/random.hpp"

namespace stodis {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    return Rng(splitmix64(s));
}

Rng indexed_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    s = index;
    const std::uint64_t b = splitmix64(s);
    return Rng(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

std::vector<double> random_simplex_point(Rng& rng, std::size_t n) {
    std::exponential_distribution<double> exp_dist(1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = exp_dist(rng);
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

JointDistribution random_state(Rng& rng, std::size_t d_a, std::size_t d_b) {
    const std::vector<double> flat = random_simplex_point(rng, d_a * d_b);
    Matrix probs(d_a, d_b);
    for (std::size_t i = 0; i < d_a; ++i)
        for (std::size_t j = 0; j < d_b; ++j) probs(i, j) = flat[i * d_b + j];
    return JointDistribution(std::move(probs));
}

StochasticChannel random_channel(Rng& rng, std::size_t d) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<double> col = random_simplex_point(rng, d);
        for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
    }
    return StochasticChannel(std::move(m));
}

}  // namespace stodis
