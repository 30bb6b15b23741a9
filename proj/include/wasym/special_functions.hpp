#pragma once

// Self-contained special-function kernel: Gamma on the right half plane,
// complementary error function, and the parabolic cylinder function D_{-nu}(x)
// evaluated through its defining integral
//   int_0^inf t^{s-1} e^{-t^2/2 - beta t} dt = e^{beta^2/4} Gamma(s) D_{-s}(beta).

#include <complex>

namespace wasym {

using cplx = std::complex<double>;

struct SpecialFnAccuracy {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
};

// Gamma(z) for Re(z) > 0 (Lanczos).  Throws std::domain_error otherwise.
cplx gamma(cplx z);
double gamma(double x);

// Complementary error function, monotone decreasing, range (0, 2).
double erfc(double x);

// D_{-nu}(x) for nu >= 0, |x| <= 40.  nu = 0 uses the closed form e^{-x^2/4};
// nu > 0 integrates t^{nu-1} e^{-(t+x)^2/2} by a doubling tanh-sinh rule.
// Throws std::domain_error on bad arguments, wasym::quad::non_convergence if
// the quadrature cannot reach the requested accuracy.
double parabolic_cylinder_D(double nu, double x, const SpecialFnAccuracy& acc = {});

} // namespace wasym
