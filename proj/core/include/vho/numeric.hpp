#pragma once

#include <functional>
#include <vector>

namespace vho {

/// Central first derivative, step h = cbrt(eps) * max(1, |x|).
double fd_derivative(const std::function<double(double)>& f, double x);

/// Central second derivative, step h = eps^(1/4) * max(1, |x|).
double fd_second_derivative(const std::function<double(double)>& f, double x);

/// Gradient of a scalar field by central differences, one coordinate at a time.
std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& x);

/// Symmetric finite-difference Hessian (central differences in each pair of
/// coordinates, step eps^(1/4) per axis).
std::vector<double> fd_hessian(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& x);

} // namespace vho
