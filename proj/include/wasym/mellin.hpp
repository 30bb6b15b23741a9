#pragma once

// Generalized (regularized) Mellin transform values
//   M[h; z] = lim_{eps->0+} int_0^inf t^{z-1} h(t) e^{-eps t^p} dt:
// closed forms for the three wavelet kernels plus a numeric eps->0 evaluator
// used as the independent validation route.

#include <complex>
#include <functional>
#include <span>

#include "wasym/quadrature.hpp"

namespace wasym {

using cplx = std::complex<double>;

struct MellinValue {
    cplx z;
    cplx value;
    enum class Method { closed_form, regularized_quadrature } method =
        Method::closed_form;
    double err_estimate = 0.0;
};

// Kernel handed to the regularized evaluator, with the hints the quadrature
// needs: origin power (h(t) = O(t^origin_power)) and the dominant oscillation
// frequency (0 for kernels with decaying envelope).
struct MellinKernel {
    std::function<cplx(double)> f;
    double origin_power = 0.0;
    double osc_freq = 0.0;
    double cutoff = 40.0;   // envelope cutoff when osc_freq == 0
};

// Evaluates the eps-damped integral for each entry of eps_sequence (decreasing,
// last <= 1e-6) and Richardson-extrapolates the last three values to eps = 0.
MellinValue mellin_regularized(const MellinKernel& h, cplx z, double p,
                               std::span<const double> eps_sequence,
                               const quad::Settings& settings = {});

inline constexpr double kDefaultEps[5] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

// Morlet kernel sqrt(2pi) e^{-(w -+ w0)^2/2}:
//   M[h; z]      = sqrt(2pi) e^{-w0^2/4} Gamma(z) D_{-z}(-w0)
//   M[h(-.); z]  = sqrt(2pi) e^{-w0^2/4} Gamma(z) D_{-z}(+w0)
MellinValue morlet_mellin(double z, double omega0);
MellinValue morlet_mellin_reflected(double z, double omega0);

// Mexican-hat kernel sqrt(2pi) w^2 e^{-w^2/2} (even, so both directions equal):
//   M[h; z] = sqrt(pi) 2^{(z+1)/2} Gamma((z+2)/2)
MellinValue mexican_mellin(double z);

// Oscillatory component M[e^{ict}; z] = |c|^{-z} e^{i sign(c) pi z / 2} Gamma(z).
// The raw component is only conditionally convergent for 0 < z < 1; outside
// that strip the caller must assert the combined-cancellation context of the
// full Haar kernel (combination vanishing to O(w^2) at the origin).
MellinValue haar_mellin_component(double z, double c,
                                  bool combined_context = false);

// Combined Haar kernel values for z > 1 (series indices s >= 1):
//   M[h; z]      = -(2^z - 1) Gamma(z-1) e^{+i pi z/2}
//   M[h(-.); z]  = -(2^z - 1) Gamma(z-1) e^{-i pi z/2}
MellinValue haar_mellin(double z);
MellinValue haar_mellin_reflected(double z);

// e^{i pi mu} on the principal branch, exact at integer and half-integer mu.
cplx unit_phase(double mu);

} // namespace wasym
