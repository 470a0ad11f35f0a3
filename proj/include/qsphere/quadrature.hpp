#pragma once

#include <complex>
#include <functional>

namespace qsphere {

// Gauss-Legendre quadrature on [a, b] with n nodes
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);
std::complex<double> gauss_legendre_c(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int n);

// doubles n until two successive refinements agree within tol; throws
// QuadratureNotConverged
std::complex<double> integrate_converged(const std::function<std::complex<double>(double)>& f,
                                         double a, double b, double tol);

// 2D tensor-product Gauss-Legendre over [ax,bx] x [ay,by]
double gauss_legendre_2d(const std::function<double(double, double)>& f, double ax, double bx,
                         double ay, double by, int n);

}  // namespace qsphere
