#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vho {

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix column(const std::vector<double>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<double>& entries() const { return entries_; }

    DenseMatrix transposed() const;

    /// Throws std::invalid_argument on an empty matrix or non-finite entries.
    void require_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Thin SVD of an m x n matrix: u is m x r, v is n x r with orthonormal
/// columns, sigma holds r = min(m, n) singular values sorted nonincreasing.
struct SvdFactors {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
};

using ParameterVector = std::vector<double>;

class SvdConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One-sided Jacobi SVD. Throws SvdConvergenceError if the off-diagonal
/// sweep count exceeds 100 * max(rows, cols).
SvdFactors svd(const DenseMatrix& a);

/// Default singular-value truncation tolerance: max(m, n) * sigma_max * eps.
double default_svd_tolerance(const DenseMatrix& a, const SvdFactors& factors);

/// Minimum-norm least-squares solution via the pseudo-inverse: for each
/// column b_j of b, x_j = sum over sigma_i > tol of (u_i . b_j / sigma_i) v_i.
/// Pass tol < 0 to use the default truncation rule.
DenseMatrix pinv_solve(const DenseMatrix& a, const DenseMatrix& b, double tol = -1.0);

/// Convenience overload for a single right-hand side.
ParameterVector pinv_solve(const DenseMatrix& a, const std::vector<double>& b,
                           double tol = -1.0);

struct StationarityResult {
    ParameterVector x;
    bool converged = false;
    std::size_t iterations = 0;
    double grad_inf_norm = 0.0;
};

/// Newton-type iteration on the stationarity system grad f = 0: each step
/// linearizes the finite-difference gradient with a finite-difference
/// Hessian and solves the linear system through pinv_solve. Stops when the
/// gradient infinity norm drops to tol or max_iter is reached; never throws
/// on non-convergence (check the flag).
StationarityResult solve_stationarity(
    const std::function<double(const ParameterVector&)>& loglik, const ParameterVector& x0,
    double tol, std::size_t max_iter);

} // namespace vho
