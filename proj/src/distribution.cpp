#include "stodis/distribution.hpp"

#include <cmath>
#include <string>

#include "stodis/errors.hpp"

namespace stodis {

namespace {

// Validates sign and mass of a raw probability buffer, clamping tiny
// negative noise. Returns the total mass.
double validate_mass(std::span<double> values) {
    double sum = 0.0;
    for (double& v : values) {
        if (!std::isfinite(v)) throw InvalidDistribution("non-finite probability entry");
        if (v < -kNegativeTol)
            throw NegativeEntry("probability entry " + std::to_string(v) + " is negative");
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    return sum;
}

double entropy_unchecked(std::span<const double> v) {
    double h = 0.0;
    for (double x : v) {
        if (x > 0.0) h -= x * std::log2(x);
    }
    return h;
}

}  // namespace

JointDistribution::JointDistribution(Matrix probs) : probs_(std::move(probs)) {
    if (probs_.rows() == 0 || probs_.cols() == 0)
        throw InvalidDistribution("distribution must have at least one row and column");
    const double sum = validate_mass(probs_.flat());
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw NotNormalized("probabilities sum to " + std::to_string(sum));
    if (std::abs(sum - 1.0) > kRescaleTol) {
        for (double& v : probs_.flat()) v /= sum;
    }
}

JointDistribution JointDistribution::transposed() const {
    return JointDistribution(transpose(probs_));
}

TripartiteDistribution::TripartiteDistribution(std::array<std::size_t, 3> dims,
                                               std::vector<double> probs)
    : dims_(dims), probs_(std::move(probs)) {
    if (dims_[0] == 0 || dims_[1] == 0 || dims_[2] == 0)
        throw InvalidDistribution("tripartite dimensions must be positive");
    if (probs_.size() != dims_[0] * dims_[1] * dims_[2])
        throw SizeMismatch("tripartite tensor size does not match dims");
    const double sum = validate_mass(probs_);
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw NotNormalized("tripartite probabilities sum to " + std::to_string(sum));
    if (std::abs(sum - 1.0) > kRescaleTol) {
        for (double& v : probs_) v /= sum;
    }
}

std::vector<double> marginal_a(const JointDistribution& p) {
    std::vector<double> out(p.dim_a(), 0.0);
    for (std::size_t i = 0; i < p.dim_a(); ++i)
        for (std::size_t j = 0; j < p.dim_b(); ++j) out[i] += p(i, j);
    return out;
}

std::vector<double> marginal_b(const JointDistribution& p) {
    std::vector<double> out(p.dim_b(), 0.0);
    for (std::size_t i = 0; i < p.dim_a(); ++i)
        for (std::size_t j = 0; j < p.dim_b(); ++j) out[j] += p(i, j);
    return out;
}

EntropyBits shannon_entropy(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) {
        if (!std::isfinite(x) || x < -kNegativeTol)
            throw InvalidDistribution("entropy input is not a distribution");
        if (x > 0.0) sum += x;
    }
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw InvalidDistribution("entropy input sums to " + std::to_string(sum));
    return {entropy_unchecked(v)};
}

EntropyBits joint_entropy(const JointDistribution& p) {
    return {entropy_unchecked(p.probs().flat())};
}

EntropyBits conditional_entropy_a_given_b(const JointDistribution& p) {
    const auto mb = marginal_b(p);
    return {entropy_unchecked(p.probs().flat()) - entropy_unchecked(mb)};
}

EntropyBits conditional_entropy_b_given_a(const JointDistribution& p) {
    const auto ma = marginal_a(p);
    return {entropy_unchecked(p.probs().flat()) - entropy_unchecked(ma)};
}

EntropyBits mutual_information(const JointDistribution& p) {
    const auto ma = marginal_a(p);
    const auto mb = marginal_b(p);
    return {entropy_unchecked(ma) + entropy_unchecked(mb) -
            entropy_unchecked(p.probs().flat())};
}

std::optional<std::vector<int>> conditionally_pure_support(const JointDistribution& p,
                                                           double tol) {
    std::vector<int> row_to_col(p.dim_a(), -1);
    std::vector<bool> col_used(p.dim_b(), false);
    for (std::size_t i = 0; i < p.dim_a(); ++i) {
        for (std::size_t j = 0; j < p.dim_b(); ++j) {
            if (p(i, j) <= tol) continue;
            if (row_to_col[i] != -1) return std::nullopt;  // two entries in a row
            if (col_used[j]) return std::nullopt;          // two entries in a column
            row_to_col[i] = static_cast<int>(j);
            col_used[j] = true;
        }
    }
    return row_to_col;
}

bool is_conditionally_pure(const JointDistribution& p, double tol) {
    return conditionally_pure_support(p, tol).has_value();
}

}  // namespace stodis
