#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stodis/matrix.hpp"

namespace stodis {

/// Input normalization tolerance: a distribution whose mass differs from 1
/// by more than this is rejected rather than silently rescaled.
inline constexpr double kNormalizationTol = 1e-9;

/// Entries below -kNegativeTol are rejected; tiny negative noise above it
/// is clamped to zero.
inline constexpr double kNegativeTol = 1e-12;

/// Mass already within this of 1 is accepted as-is instead of rescaled, so
/// serialized distributions re-parse to bit-identical values.
inline constexpr double kRescaleTol = 1e-13;

/// Published default comparison tolerance for boolean verdicts.
inline constexpr double kDefaultTol = 1e-9;

/// An entropy value in bits (all logarithms in this library are base 2).
struct EntropyBits {
    double bits = 0.0;
};

/// Joint probability matrix p(i,j) over two finite alphabets: rows index
/// the A side, columns the B side. Immutable once constructed; entries are
/// nonnegative and sum to 1.
class JointDistribution {
public:
    /// Validates and stores the matrix. Entries in [-1e-12, 0) are clamped
    /// to zero; total mass within 1e-9 of 1 is rescaled to exactly 1.
    explicit JointDistribution(Matrix probs);

    std::size_t dim_a() const { return probs_.rows(); }
    std::size_t dim_b() const { return probs_.cols(); }

    double operator()(std::size_t i, std::size_t j) const { return probs_(i, j); }
    const Matrix& probs() const { return probs_; }

    /// The mirrored state with the roles of A and B exchanged.
    JointDistribution transposed() const;

    bool operator==(const JointDistribution&) const = default;

private:
    Matrix probs_;
};

/// Rank-3 joint distribution p(i,j,k) over three finite alphabets.
class TripartiteDistribution {
public:
    TripartiteDistribution(std::array<std::size_t, 3> dims, std::vector<double> probs);

    const std::array<std::size_t, 3>& dims() const { return dims_; }

    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return probs_[(i * dims_[1] + j) * dims_[2] + k];
    }
    std::span<const double> flat() const { return probs_; }

    bool operator==(const TripartiteDistribution&) const = default;

private:
    std::array<std::size_t, 3> dims_{};
    std::vector<double> probs_;
};

std::vector<double> marginal_a(const JointDistribution& p);
std::vector<double> marginal_b(const JointDistribution& p);

/// -Σ v_i log2 v_i with 0·log 0 = 0. Validates that v is a distribution.
EntropyBits shannon_entropy(std::span<const double> v);

/// Entropy of the flattened joint matrix.
EntropyBits joint_entropy(const JointDistribution& p);

/// H(A|B) = H(A,B) - H(B); always >= 0 classically.
EntropyBits conditional_entropy_a_given_b(const JointDistribution& p);
EntropyBits conditional_entropy_b_given_a(const JointDistribution& p);

/// I(A;B) = H(A) + H(B) - H(A,B).
EntropyBits mutual_information(const JointDistribution& p);

/// A state is conditionally pure iff its support touches each row and each
/// column at most once, i.e. the support is the graph of a bijection
/// between the populated A and B values. Returns that support map when it
/// exists (entry -1 for rows carrying no mass), std::nullopt otherwise.
/// Entries with mass <= tol are treated as zero.
std::optional<std::vector<int>> conditionally_pure_support(const JointDistribution& p,
                                                           double tol = kDefaultTol);

bool is_conditionally_pure(const JointDistribution& p, double tol = kDefaultTol);

}  // namespace stodis
