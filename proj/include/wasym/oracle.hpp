#pragma once

// Brute-force reference evaluation of
//   (W_psi f)(b,a) = (sqrt(a)/2pi) int fhat(w) e^{ibw} conj(psi_hat)(aw) dw
// by direct numerical integration (substituted to u = a w so the kernel sees
// O(1) arguments), plus the auxiliary Haar F(b) integral and a time-domain
// second oracle for the Haar wavelet.

#include <complex>
#include <vector>

#include "wasym/profiles.hpp"
#include "wasym/quadrature.hpp"
#include "wasym/wavelets.hpp"

namespace wasym {

struct QuadratureSettings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 200000;

    quad::Settings::Cutoff cutoff_strategy = quad::Settings::Cutoff::decay_based;
    double omega_max = 0.0;         // used by Cutoff::fixed
    double envelope_tol = 1e-16;    // used by Cutoff::decay_based
    quad::Settings::Oscillation oscillation =
        quad::Settings::Oscillation::subdivide_per_period;
    quad::Exec exec = quad::Exec::openmp;

    void validate() const;
    quad::Settings to_quad() const;
};

struct OracleDetail {
    cplx value;       // (sqrt(a)/2pi)(I1 + I2)
    cplx i1, i2;      // the two half-line integrals (before the prefactor)
    double err = 0.0;
    long evals = 0;
};

OracleDetail cwt_oracle_detail(const FreqProfile& profile,
                               const WaveletSpec& wavelet, double b, double a,
                               const QuadratureSettings& q = {},
                               quad::Rule rule = quad::Rule::gauss_kronrod);

cplx cwt_oracle(const FreqProfile& profile, const WaveletSpec& wavelet, double b,
                double a, const QuadratureSettings& q = {});

struct FHalves {
    cplx pos;   // int_0^inf e^{ibw} fhat(w)/w dw
    cplx neg;   // int_{-inf}^0 e^{ibw} fhat(w)/w dw
    cplx full() const { return pos + neg; }
};

// Full-line combination used by the Haar leading term.  Throws a divergence
// error when fhat(w)/w is not integrable at the origin.
FHalves haar_F_halves(const FreqProfile& profile, double b,
                      const QuadratureSettings& q = {});
cplx haar_F_integral(const FreqProfile& profile, double b,
                     const QuadratureSettings& q = {});

struct SampledFunction {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<double> values;
    double t_end() const { return t0 + dt * (values.size() - 1); }
};

// (1/sqrt(a)) int f(t) conj(psi)((t-b)/a) dt for the Haar wavelet: composite
// quadrature of a cubic interpolant over the two plateaus.  The sample grid
// must cover [b, b+a].
cplx cwt_time_domain_oracle(const SampledFunction& f, const WaveletSpec& wavelet,
                            double b, double a);

} // namespace wasym
