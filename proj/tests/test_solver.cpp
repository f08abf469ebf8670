#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "vho/estimator.hpp"
#include "vho/fading.hpp"
#include "vho/solver.hpp"

#include <cmath>
#include <random>

using namespace vho;

namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DenseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    return m;
}

double reconstruction_error(const DenseMatrix& a, const SvdFactors& f) {
    double err = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            double v = 0.0;
            for (std::size_t i = 0; i < f.sigma.size(); ++i)
                v += f.u(r, i) * f.sigma[i] * f.v(c, i);
            err += (v - a(r, c)) * (v - a(r, c));
        }
    }
    return std::sqrt(err);
}

double orthonormality_error(const DenseMatrix& m) {
    double err = 0.0;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            double dot = 0.0;
            for (std::size_t r = 0; r < m.rows(); ++r)
                dot += m(r, i) * m(r, j);
            err = std::max(err, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return err;
}

std::vector<double> residual(const DenseMatrix& a, const std::vector<double>& x,
                             const std::vector<double>& b) {
    std::vector<double> r(b.size());
    for (std::size_t row = 0; row < a.rows(); ++row) {
        double v = 0.0;
        for (std::size_t col = 0; col < a.cols(); ++col)
            v += a(row, col) * x[col];
        r[row] = v - b[row];
    }
    return r;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

} // namespace

TEST_CASE("identity and diagonal singular values") {
    const SvdFactors id = svd(DenseMatrix::identity(3));
    REQUIRE(id.sigma.size() == 3);
    for (double s : id.sigma)
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

    DenseMatrix d(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 2.0;
    const SvdFactors fd = svd(d);
    CHECK(fd.sigma[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fd.sigma[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("random 5x4 matrices reconstruct and stay orthonormal") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DenseMatrix a = random_matrix(5, 4, 1000 + seed);
        const SvdFactors f = svd(a);
        CHECK(reconstruction_error(a, f) <= 1e-9);
        CHECK(orthonormality_error(f.u) <= 1e-10);
        CHECK(orthonormality_error(f.v) <= 1e-10);
        for (std::size_t i = 0; i + 1 < f.sigma.size(); ++i)
            CHECK(f.sigma[i] >= f.sigma[i + 1]);
    }
}

TEST_CASE("wide matrices factor through the transpose") {
    const DenseMatrix a = random_matrix(3, 6, 42);
    const SvdFactors f = svd(a);
    CHECK(f.sigma.size() == 3);
    CHECK(f.u.rows() == 3);
    CHECK(f.v.rows() == 6);
    CHECK(reconstruction_error(a, f) <= 1e-9);
    CHECK(orthonormality_error(f.u) <= 1e-10);
    CHECK(orthonormality_error(f.v) <= 1e-10);
}

TEST_CASE("singular values match the Jacobi eigenvalue oracle on 4x4 matrices") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DenseMatrix a = random_matrix(4, 4, 9000 + seed);
        // eigenvalues of A^T A, independently computed
        std::vector<double> ata(16, 0.0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t r = 0; r < 4; ++r)
                    ata[i * 4 + j] += a(r, i) * a(r, j);
        const std::vector<double> eig = oracle::jacobi_eigenvalues(ata, 4);
        const SvdFactors f = svd(a);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(f.sigma[i] == doctest::Approx(std::sqrt(std::max(0.0, eig[i]))).epsilon(1e-8));
    }
}

TEST_CASE("svd rejects empty and non-finite input") {
    CHECK_THROWS_AS(svd(DenseMatrix()), std::invalid_argument);
    DenseMatrix bad(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(svd(bad), std::invalid_argument);
}

TEST_CASE("rank-deficient U columns are completed orthonormally") {
    DenseMatrix a(2, 2, {1.0, 1.0, 1.0, 1.0});
    const SvdFactors f = svd(a);
    CHECK(f.sigma[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.sigma[1] == doctest::Approx(0.0));
    CHECK(orthonormality_error(f.u) <= 1e-10);
    CHECK(orthonormality_error(f.v) <= 1e-10);
}

TEST_CASE("pinv_solve with the identity returns b") {
    const std::vector<double> b{4.0, -2.5, 0.75};
    const ParameterVector x = pinv_solve(DenseMatrix::identity(3), b);
    for (std::size_t i = 0; i < b.size(); ++i)
        CHECK(x[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("pinv_solve picks the minimum-norm solution of the singular system") {
    DenseMatrix a(2, 2, {1.0, 1.0, 1.0, 1.0});
    const ParameterVector x = pinv_solve(a, std::vector<double>{2.0, 2.0});
    CHECK(std::abs(x[0] - 1.0) <= 1e-10);
    CHECK(std::abs(x[1] - 1.0) <= 1e-10);

    // any null-space shift x + t(1,-1) has the same residual but a larger norm
    for (double t : {-0.5, 0.25, 1.0}) {
        const std::vector<double> shifted{x[0] + t, x[1] - t};
        CHECK(norm2(shifted) > norm2(x));
        CHECK(norm2(residual(a, shifted, {2.0, 2.0})) ==
              doctest::Approx(norm2(residual(a, x, {2.0, 2.0}))).epsilon(1e-9));
    }
}

TEST_CASE("overdetermined regression agrees with the normal-equations oracle") {
    const DenseMatrix a = random_matrix(6, 2, 31415);
    const std::vector<double> b{1.0, -2.0, 0.5, 3.0, -1.0, 0.25};
    const ParameterVector x = pinv_solve(a, b);
    const std::vector<double> want =
        oracle::normal_equations_solve(a.entries(), 6, 2, b);
    CHECK(x[0] == doctest::Approx(want[0]).epsilon(1e-8));
    CHECK(x[1] == doctest::Approx(want[1]).epsilon(1e-8));
}

TEST_CASE("pinv_solve residual beats random perturbations") {
    std::mt19937_64 rng(2718);
    const DenseMatrix a = random_matrix(6, 3, 161803);
    const std::vector<double> b{2.0, -1.0, 0.0, 1.5, 3.0, -2.5};
    const ParameterVector x = pinv_solve(a, b);
    const double base = norm2(residual(a, x, b));
    for (int i = 0; i < 100; ++i) {
        std::vector<double> y = x;
        for (double& v : y)
            v += 0.02 * (2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0);
        CHECK(norm2(residual(a, y, b)) >= base - 1e-12);
    }
}

TEST_CASE("pinv_solve checks dimensions") {
    CHECK_THROWS_AS(pinv_solve(DenseMatrix::identity(3), std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("stationarity solver nails a quadratic in two iterations") {
    const ParameterVector target{1.5, -2.0, 0.5};
    const auto quadratic = [&](const ParameterVector& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s -= (x[i] - target[i]) * (x[i] - target[i]);
        return s;
    };
    const StationarityResult res =
        solve_stationarity(quadratic, ParameterVector{10.0, 10.0, 10.0}, 1e-8, 10);
    CHECK(res.converged);
    CHECK(res.iterations <= 2);
    for (std::size_t i = 0; i < target.size(); ++i)
        CHECK(res.x[i] == doctest::Approx(target[i]).epsilon(1e-6));
}

TEST_CASE("stationarity solver reproduces the closed-form Rayleigh MLE") {
    RayleighChannel channel(1.0, 31773);
    const SampleSet s{channel.sample(2000)};
    const double closed_form = mle_lambda(s);
    const StationarityResult res = solve_stationarity(
        [&](const ParameterVector& x) { return log_likelihood(s, x[0]); },
        ParameterVector{0.4}, 1e-3, 50);
    CHECK(res.converged);
    CHECK(res.x[0] == doctest::Approx(closed_form).epsilon(1e-6));
    CHECK(res.grad_inf_norm <= 1e-3);
}

TEST_CASE("separable 2-D likelihood converges coordinate-wise (oracle)") {
    RayleighChannel c1(0.8, 11), c2(2.5, 22);
    const SampleSet s1{c1.sample(1500)};
    const SampleSet s2{c2.sample(1500)};
    const StationarityResult res = solve_stationarity(
        [&](const ParameterVector& x) {
            return log_likelihood(s1, x[0]) + log_likelihood(s2, x[1]);
        },
        ParameterVector{0.3, 1.0}, 1e-3, 50);
    CHECK(res.converged);
    CHECK(res.x[0] == doctest::Approx(mle_lambda(s1)).epsilon(1e-6));
    CHECK(res.x[1] == doctest::Approx(mle_lambda(s2)).epsilon(1e-6));
}

TEST_CASE("non-convergence is reported, not thrown") {
    // gradient of |x| never reaches zero away from the kink
    const StationarityResult res = solve_stationarity(
        [](const ParameterVector& x) { return std::abs(x[0] - 0.37) + 2.0; },
        ParameterVector{50.0}, 1e-12, 3);
    CHECK_FALSE(res.converged);
    CHECK(res.grad_inf_norm > 1e-12);
}
