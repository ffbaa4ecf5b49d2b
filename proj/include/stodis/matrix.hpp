#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace stodis {

/// Dense row-major matrix of doubles. Everything in this library is small
/// (alphabet-sized), so there is no blocking, no views, no expression
/// templates -- just a flat buffer.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);
    explicit Matrix(const std::vector<std::vector<double>>& rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> flat() const { return data_; }
    std::span<double> flat() { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Kronecker product: (a ⊗ b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Column-major reshaping: columns stacked top to bottom, so
/// vec([[1,2],[3,4]]) = (1,3,2,4).
std::vector<double> vec(const Matrix& m);

/// Inverse of vec: fills a rows × cols matrix column by column.
Matrix unvec(std::span<const double> v, std::size_t rows, std::size_t cols);

std::vector<double> matvec(const Matrix& a, std::span<const double> x);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// Solves a·x = b by Gaussian elimination with partial pivoting.
/// Throws NumericalFailure on a singular pivot.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

/// Numerical rank via row elimination with the given pivot tolerance.
std::size_t matrix_rank(Matrix m, double tol = 1e-10);

}  // namespace stodis
