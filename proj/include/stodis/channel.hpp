#pragma once

#include <cstddef>

#include "stodis/distribution.hpp"
#include "stodis/matrix.hpp"

namespace stodis {

/// Noisy readout apparatus: a column-stochastic d × d matrix M, with
/// M(i,j) the probability of reading i when the true value is j. Columns
/// sum to 1 (row index = readout).
class StochasticChannel {
public:
    /// Validates squareness, nonnegativity and column normalization
    /// (within 1e-9; columns are then rescaled to sum exactly to 1).
    explicit StochasticChannel(Matrix m);

    std::size_t dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }

    double operator()(std::size_t readout, std::size_t input) const {
        return matrix_(readout, input);
    }

    bool operator==(const StochasticChannel&) const = default;

private:
    Matrix matrix_;
};

/// Noiseless readout: the identity matrix.
StochasticChannel identity_channel(std::size_t d);

/// Maximally noisy readout: every entry 1/d.
StochasticChannel uniform_channel(std::size_t d);

/// One-bit symmetric noise: flips the bit with probability eps.
StochasticChannel binary_symmetric(double eps);

/// Kronecker product of two channels: independent noise on the two
/// sub-alphabets. Column-stochasticity is closed under this product.
StochasticChannel tensor_channel(const StochasticChannel& m1, const StochasticChannel& m2);

/// Block-diagonal direct sum: the two alphabets never mix.
StochasticChannel direct_sum(const StochasticChannel& m1, const StochasticChannel& m2);

/// Composition second·first, i.e. `first` acts first.
StochasticChannel compose(const StochasticChannel& second, const StochasticChannel& first);

/// Pushes the state through noise on the B side: p' = p·Mᵀ, i.e.
/// p'(i,c) = Σ_b p(i,b)·M(c,b). The A marginal is untouched.
JointDistribution apply_to_b(const JointDistribution& p, const StochasticChannel& m);

enum class Axis { A, B, C };

/// Applies the channel to one index of a tripartite state, leaving the
/// other two untouched.
TripartiteDistribution apply_to_axis(const TripartiteDistribution& t,
                                     const StochasticChannel& m, Axis axis);

}  // namespace stodis
