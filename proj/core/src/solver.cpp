#include "vho/solver.hpp"

#include "vho/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace vho {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix: entry count does not match rows*cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::column(const std::vector<double>& values) {
    return DenseMatrix(values.size(), 1, values);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

void DenseMatrix::require_finite() const {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("matrix: empty");
    for (double v : entries_)
        if (!std::isfinite(v))
            throw std::invalid_argument("matrix: entries must be finite");
}

namespace {

// One-sided Jacobi on the columns of `work` (m x n, m >= n). V accumulates
// the right rotations. Returns the sweep count used.
std::size_t jacobi_orthogonalize(DenseMatrix& work, DenseMatrix& v, std::size_t max_sweeps) {
    const std::size_t m = work.rows();
    const std::size_t n = work.cols();
    const double tol = 1e-14;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ap = work(i, p);
                    const double aq = work(i, q);
                    alpha += ap * ap;
                    beta += aq * aq;
                    gamma += ap * aq;
                }
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta) || gamma == 0.0)
                    continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ap = work(i, p);
                    const double aq = work(i, q);
                    work(i, p) = c * ap - s * aq;
                    work(i, q) = s * ap + c * aq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    const double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated)
            return sweep + 1;
    }
    throw SvdConvergenceError("svd: Jacobi sweeps exceeded the iteration cap");
}

// Columns whose singular value is exactly zero carry no direction; fill them
// with unit vectors orthogonal to everything already present (pick the
// coordinate axis with the largest residual after projection).
void complete_null_columns(DenseMatrix& u, const std::vector<double>& sigma) {
    const std::size_t m = u.rows();
    const std::size_t n = u.cols();
    for (std::size_t j = 0; j < n; ++j) {
        if (sigma[j] > 0.0)
            continue;
        std::vector<double> best;
        double best_norm = 0.0;
        for (std::size_t axis = 0; axis < m; ++axis) {
            std::vector<double> cand(m, 0.0);
            cand[axis] = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j)
                    continue;
                double dot = 0.0;
                for (std::size_t i = 0; i < m; ++i)
                    dot += cand[i] * u(i, k);
                for (std::size_t i = 0; i < m; ++i)
                    cand[i] -= dot * u(i, k);
            }
            double norm = 0.0;
            for (double x : cand)
                norm += x * x;
            norm = std::sqrt(norm);
            if (norm > best_norm) {
                best_norm = norm;
                best = std::move(cand);
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            u(i, j) = best[i] / best_norm;
    }
}

SvdFactors svd_tall(const DenseMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    DenseMatrix work = a;
    DenseMatrix v = DenseMatrix::identity(n);
    jacobi_orthogonalize(work, v, 100 * std::max(m, n));

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            s += work(i, j) * work(i, j);
        sigma[j] = std::sqrt(s);
    }

    // sort columns by descending singular value
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdFactors f;
    f.u = DenseMatrix(m, n);
    f.v = DenseMatrix(n, n);
    f.sigma.resize(n);
    for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t src = order[jj];
        f.sigma[jj] = sigma[src];
        if (sigma[src] > 0.0)
            for (std::size_t i = 0; i < m; ++i)
                f.u(i, jj) = work(i, src) / sigma[src];
        for (std::size_t i = 0; i < n; ++i)
            f.v(i, jj) = v(i, src);
    }
    complete_null_columns(f.u, f.sigma);
    return f;
}

} // namespace

SvdFactors svd(const DenseMatrix& a) {
    a.require_finite();
    if (a.rows() >= a.cols())
        return svd_tall(a);
    // wide: factor the transpose and swap the roles of U and V
    SvdFactors t = svd_tall(a.transposed());
    return SvdFactors{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

double default_svd_tolerance(const DenseMatrix& a, const SvdFactors& factors) {
    const double sigma_max = factors.sigma.empty() ? 0.0 : factors.sigma.front();
    return static_cast<double>(std::max(a.rows(), a.cols())) * sigma_max *
           std::numeric_limits<double>::epsilon();
}

DenseMatrix pinv_solve(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    a.require_finite();
    b.require_finite();
    if (a.rows() != b.rows())
        throw std::invalid_argument("pinv_solve: A and b row counts differ");
    const SvdFactors f = svd(a);
    const double cut = tol < 0.0 ? default_svd_tolerance(a, f) : tol;
    const std::size_t r = f.sigma.size();
    DenseMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            if (!(f.sigma[i] > cut))
                continue;
            double coeff = 0.0;
            for (std::size_t row = 0; row < a.rows(); ++row)
                coeff += f.u(row, i) * b(row, j);
            coeff /= f.sigma[i];
            for (std::size_t row = 0; row < a.cols(); ++row)
                x(row, j) += coeff * f.v(row, i);
        }
    }
    return x;
}

ParameterVector pinv_solve(const DenseMatrix& a, const std::vector<double>& b, double tol) {
    const DenseMatrix x = pinv_solve(a, DenseMatrix::column(b), tol);
    return x.entries();
}

StationarityResult solve_stationarity(
    const std::function<double(const ParameterVector&)>& loglik, const ParameterVector& x0,
    double tol, std::size_t max_iter) {
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_stationarity: tol must be > 0");
    if (max_iter == 0)
        throw std::invalid_argument("solve_stationarity: max_iter must be >= 1");

    StationarityResult res;
    res.x = x0;
    const std::size_t n = x0.size();
    const auto inf_norm = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v)
            m = std::max(m, std::abs(x));
        return m;
    };

    for (std::size_t it = 0; it < max_iter; ++it) {
        std::vector<double> g = fd_gradient(loglik, res.x);
        res.grad_inf_norm = inf_norm(g);
        res.iterations = it;
        if (res.grad_inf_norm <= tol) {
            res.converged = true;
            return res;
        }
        DenseMatrix jac(n, n, fd_hessian(loglik, res.x));
        for (double& gi : g)
            gi = -gi;
        const ParameterVector step = pinv_solve(jac, g);
        for (std::size_t i = 0; i < n; ++i)
            res.x[i] += step[i];
        res.iterations = it + 1;
    }
    std::vector<double> g = fd_gradient(loglik, res.x);
    res.grad_inf_norm = inf_norm(g);
    res.converged = res.grad_inf_norm <= tol;
    return res;
}

} // namespace vho
