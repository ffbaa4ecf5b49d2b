#include "stodis/channel.hpp"

#include <cmath>
#include <string>

#include "stodis/errors.hpp"

namespace stodis {

StochasticChannel::StochasticChannel(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
        throw NotSquare("channel matrix must be square and nonempty");
    const std::size_t d = matrix_.rows();
    for (std::size_t j = 0; j < d; ++j) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            double& v = matrix_(i, j);
            if (!std::isfinite(v)) throw NotSquare("non-finite channel entry");
            if (v < -kNegativeTol)
                throw NegativeEntry("channel entry " + std::to_string(v) + " is negative");
            if (v < 0.0) v = 0.0;
            colsum += v;
        }
        if (std::abs(colsum - 1.0) > kNormalizationTol)
            throw ColumnNotNormalized("column " + std::to_string(j) + " sums to " +
                                      std::to_string(colsum));
        if (std::abs(colsum - 1.0) > kRescaleTol) {
            for (std::size_t i = 0; i < d; ++i) matrix_(i, j) /= colsum;
        }
    }
}

StochasticChannel identity_channel(std::size_t d) {
    if (d == 0) throw OutOfRange("channel dimension must be positive");
    return StochasticChannel(Matrix::identity(d));
}

StochasticChannel uniform_channel(std::size_t d) {
    if (d == 0) throw OutOfRange("channel dimension must be positive");
    return StochasticChannel(Matrix(d, d, 1.0 / static_cast<double>(d)));
}

StochasticChannel binary_symmetric(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw OutOfRange("flip probability must lie in [0, 1]");
    return StochasticChannel(Matrix{{1.0 - eps, eps}, {eps, 1.0 - eps}});
}

StochasticChannel tensor_channel(const StochasticChannel& m1, const StochasticChannel& m2) {
    return StochasticChannel(kron(m1.matrix(), m2.matrix()));
}

StochasticChannel direct_sum(const StochasticChannel& m1, const StochasticChannel& m2) {
    const std::size_t d1 = m1.dim(), d2 = m2.dim();
    Matrix out(d1 + d2, d1 + d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) out(i, j) = m1(i, j);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j) out(d1 + i, d1 + j) = m2(i, j);
    return StochasticChannel(std::move(out));
}

StochasticChannel compose(const StochasticChannel& second, const StochasticChannel& first) {
    if (second.dim() != first.dim())
        throw DimensionMismatch("compose: channel dimensions differ");
    return StochasticChannel(matmul(second.matrix(), first.matrix()));
}

JointDistribution apply_to_b(const JointDistribution& p, const StochasticChannel& m) {
    if (m.dim() != p.dim_b())
        throw DimensionMismatch("channel dimension " + std::to_string(m.dim()) +
                                " does not match B alphabet " + std::to_string(p.dim_b()));
    return JointDistribution(matmul(p.probs(), transpose(m.matrix())));
}

TripartiteDistribution apply_to_axis(const TripartiteDistribution& t,
                                     const StochasticChannel& m, Axis axis) {
    const auto dims = t.dims();
    const std::size_t ax = static_cast<std::size_t>(axis);
    if (m.dim() != dims[ax])
        throw DimensionMismatch("channel dimension does not match axis alphabet");
    std::vector<double> out(t.flat().size(), 0.0);
    const auto [da, db, dc] = dims;
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < dc; ++k) {
                const double v = t(i, j, k);
                if (v == 0.0) continue;
                switch (axis) {
                    case Axis::A:
                        for (std::size_t r = 0; r < da; ++r)
                            out[(r * db + j) * dc + k] += m(r, i) * v;
                        break;
                    case Axis::B:
                        for (std::size_t r = 0; r < db; ++r)
                            out[(i * db + r) * dc + k] += m(r, j) * v;
                        break;
                    case Axis::C:
                        for (std::size_t r = 0; r < dc; ++r)
                            out[(i * db + j) * dc + r] += m(r, k) * v;
                        break;
                }
            }
        }
    }
    return TripartiteDistribution(dims, std::move(out));
}

}  // namespace stodis
