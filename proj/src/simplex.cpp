#include "stodis/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stodis/errors.hpp"

namespace stodis {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr double kFeasibilityTol = 1e-8;

struct Tableau {
    // rows 0..m-1: constraints; row m: reduced costs. Column n_total: rhs.
    Matrix t;
    std::vector<int> basis;      // basis[i] = variable basic in row i
    std::vector<bool> banned;    // columns excluded from entering
    std::size_t m, n_total;
    long iterations = 0;

    double& at(std::size_t r, std::size_t c) { return t(r, c); }
    double rhs(std::size_t r) const { return t(r, n_total); }

    void pivot(std::size_t row, std::size_t col) {
        const double inv = 1.0 / t(row, col);
        for (std::size_t j = 0; j <= n_total; ++j) t(row, j) *= inv;
        t(row, col) = 1.0;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == row) continue;
            const double f = t(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_total; ++j) t(r, j) -= f * t(row, j);
            t(r, col) = 0.0;
        }
        basis[row] = static_cast<int>(col);
        ++iterations;
    }

    // Bland: entering = lowest-index improving column, leaving = min ratio
    // with lowest basic variable index on ties.
    bool iterate(long max_iterations) {
        for (;;) {
            if (iterations > max_iterations)
                throw NumericalFailure("simplex cycling guard exceeded");
            std::size_t entering = n_total;
            for (std::size_t j = 0; j < n_total; ++j) {
                if (!banned[j] && t(m, j) < -kCostTol) {
                    entering = j;
                    break;
                }
            }
            if (entering == n_total) return true;  // optimal

            std::size_t leaving = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m; ++r) {
                if (t(r, entering) <= kPivotTol) continue;
                const double ratio = rhs(r) / t(r, entering);
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     (leaving == m || basis[r] < basis[leaving]))) {
                    best_ratio = ratio;
                    leaving = r;
                }
            }
            if (leaving == m) return false;  // unbounded direction
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LpResult solve_lp(const Matrix& a, const std::vector<double>& b,
                  const std::vector<double>& c, long max_iterations) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n)
        throw DimensionMismatch("solve_lp: inconsistent system sizes");

    Tableau tab;
    tab.m = m;
    tab.n_total = n + m;  // structural + artificial
    tab.t = Matrix(m + 1, tab.n_total + 1);
    tab.basis.resize(m);
    tab.banned.assign(tab.n_total, false);

    for (std::size_t i = 0; i < m; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign * a(i, j);
        tab.at(i, n + i) = 1.0;
        tab.at(i, tab.n_total) = sign * b[i];
        tab.basis[i] = static_cast<int>(n + i);
    }
    // Phase-1 reduced costs: minimize the artificial mass.
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += tab.at(i, j);
        tab.at(m, j) = -s;
    }
    {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += tab.rhs(i);
        tab.at(m, tab.n_total) = -s;
    }

    tab.iterate(max_iterations);  // phase-1 objective is bounded below by 0
    const double infeasibility = -tab.at(m, tab.n_total);
    LpResult result;
    result.iterations = tab.iterations;
    if (infeasibility > kFeasibilityTol) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    // Drive leftover artificials out of the basis; rows with no structural
    // entry are redundant and stay parked at zero.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < static_cast<int>(n)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tab.at(r, j)) > kFeasibilityTol) {
                tab.pivot(r, j);
                break;
            }
        }
    }
    for (std::size_t j = n; j < tab.n_total; ++j) tab.banned[j] = true;

    // Phase 2: install the real objective, reduced against the basis.
    for (std::size_t j = 0; j < tab.n_total; ++j) tab.at(m, j) = j < n ? c[j] : 0.0;
    tab.at(m, tab.n_total) = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        const int bv = tab.basis[r];
        if (bv >= static_cast<int>(n) || c[bv] == 0.0) continue;
        const double f = c[bv];
        for (std::size_t j = 0; j <= tab.n_total; ++j) tab.at(m, j) -= f * tab.at(r, j);
    }

    const bool optimal = tab.iterate(max_iterations);
    result.iterations = tab.iterations;
    if (!optimal) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < static_cast<int>(n))
            result.x[tab.basis[r]] = std::max(0.0, tab.rhs(r));
    }
    result.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
    return result;
}

namespace {

// Reduces [a|b] to a maximal set of independent rows; throws nothing, the
// caller interprets an inconsistent row as infeasibility.
struct ReducedSystem {
    Matrix a;
    std::vector<double> b;
    bool inconsistent = false;
};

ReducedSystem independent_rows(const Matrix& a, const std::vector<double>& b) {
    const std::size_t n = a.cols();
    std::vector<std::vector<double>> rows;          // reduced rows, [0..n-1] + rhs
    std::vector<std::size_t> pivot_col;
    ReducedSystem out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<double> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        row[n] = b[i];
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const double f = row[pivot_col[k]];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n; ++j) row[j] -= f * rows[k][j];
        }
        std::size_t pc = n;
        double best = 1e-10;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(row[j]) > best) {
                best = std::abs(row[j]);
                pc = j;
            }
        }
        if (pc == n) {
            if (std::abs(row[n]) > 1e-8) out.inconsistent = true;
            continue;
        }
        const double inv = 1.0 / row[pc];
        for (std::size_t j = 0; j <= n; ++j) row[j] *= inv;
        rows.push_back(std::move(row));
        pivot_col.push_back(pc);
    }
    out.a = Matrix(rows.size(), n);
    out.b.resize(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) out.a(k, j) = rows[k][j];
        out.b[k] = rows[k][n];
    }
    return out;
}

}  // namespace

std::vector<std::vector<double>> enumerate_basic_feasible(const Matrix& a,
                                                          const std::vector<double>& b) {
    const ReducedSystem sys = independent_rows(a, b);
    if (sys.inconsistent) return {};
    const std::size_t r = sys.a.rows(), n = sys.a.cols();
    std::vector<std::vector<double>> vertices;
    if (r == 0) return vertices;

    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        Matrix sub(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) sub(i, k) = sys.a(i, pick[k]);
        try {
            std::vector<double> xb = solve_linear(std::move(sub), sys.b);
            bool feasible = true;
            for (double v : xb) {
                if (v < -1e-9) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                std::vector<double> x(n, 0.0);
                for (std::size_t k = 0; k < r; ++k) x[pick[k]] = std::max(0.0, xb[k]);
                double residual = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    double s = -sys.b[i];
                    for (std::size_t j = 0; j < n; ++j) s += sys.a(i, j) * x[j];
                    residual = std::max(residual, std::abs(s));
                }
                bool duplicate = false;
                for (const auto& seen : vertices) {
                    if (max_abs_diff(std::span<const double>(seen),
                                     std::span<const double>(x)) <= 1e-9) {
                        duplicate = true;
                        break;
                    }
                }
                if (residual <= 1e-8 && !duplicate) vertices.push_back(std::move(x));
            }
        } catch (const NumericalFailure&) {
            // singular basis candidate, skip
        }
        // next combination of r columns out of n
        std::size_t i = r;
        while (i-- > 0) {
            if (pick[i] + (r - i) < n) {
                ++pick[i];
                for (std::size_t k = i + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
                break;
            }
            if (i == 0) return vertices;
        }
    }
}

}  // namespace stodis
