#pragma once

// Remainder machinery: oracle-difference remainders, the explicit Haar
// delta_n quadrature, and the convergence-order study harness that fits
// log-log error slopes against the first nonvanishing omitted term.

#include <string>
#include <vector>

#include "wasym/expansion.hpp"
#include "wasym/oracle.hpp"

namespace wasym {

// oracle - (leading_extra + last partial sum); equals the truncation remainder
// delta_n(a) scaled by the sqrt(a)/2pi master prefactor.
cplx remainder_by_difference(const ExpansionRequest& req, cplx oracle_value,
                             const ExpansionResult& result);

// Explicit I1-half remainder for the Haar wavelet,
//   (i/a)^{m+1} (sqrt(a)/2pi) int_0^inf G^{(m)}(w) (e^{iaw} - 2^{m+1} e^{iaw/2}) dw,
// with G(w) = (e^{ibw} fhat(w) - sum_{s<n} d_s w^{s+lambda-1}) / w.
// Valid for m <= 2 with n + lambda in (m+1, m+3); approximates the I1 share of
// remainder_by_difference.
cplx haar_delta_explicit(const FreqProfile& profile, double b, double a, int n,
                         int m, const QuadratureSettings& q = {});

struct ConvergenceReport {
    std::vector<double> a_grid;
    std::vector<double> errors;          // |oracle - expansion value|
    std::vector<cplx> oracle_values;
    std::vector<cplx> expansion_values;  // leading_extra + partial sum
    double fitted_slope = 0.0;
    double predicted_slope = 0.0;        // -(s* + lambda) + 1/2
    int first_omitted_s = -1;            // s*
    int n_terms = 0;
    std::string wavelet;
    std::string profile;
    double b = 0.0;
    bool pass = false;
    bool degenerate = false;
    std::vector<std::string> warnings;
};

// Requires >= 4 grid points spanning >= 1.5 decades and an oracle tolerance at
// most 1e-3 times the smallest expected error on the grid.
ConvergenceReport convergence_study(const FreqProfile& profile,
                                    const WaveletSpec& wavelet, double b,
                                    int n_terms,
                                    const std::vector<double>& a_grid,
                                    const QuadratureSettings& q = {});

std::vector<double> log_spaced_grid(double a_start, double a_stop, int points);

} // namespace wasym
