#pragma once

// Built-in test spectra fhat(omega) with analytically known origin expansions
//   fhat(w) ~ sum_s c_s w^{s+lambda-1},  0 < lambda <= 1,  w -> 0+,
// known decay class, and hypothesis metadata.  Profiles are defined through
// |w| powers so the same evaluator serves both half lines.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wasym {

using cplx = std::complex<double>;

struct FreqProfile {
    std::string name;
    double lambda = 1.0;                 // (0, 1]
    std::vector<cplx> coeffs;            // c_0 .. c_{N-1}
    std::vector<cplx> coeffs_neg;        // origin coefficients of w -> fhat(-w)
    std::function<cplx(double)> eval;    // fhat(w), w in R

    enum class Decay { gaussian, polynomial, exponential } decay_class =
        Decay::gaussian;
    double poly_order = 0.0;             // |fhat| = O(w^{-poly_order}) when polynomial
    std::optional<double> sigma_bound;   // fhat = O(e^{sigma w^2}) bound
    int smoothness_m = 1000;             // largest usable m away from the origin

    // Index of the first nonzero origin coefficient, or -1 for the zero profile.
    int first_nonzero_coeff() const;
};

struct ShiftedCoeffs {
    double b = 0.0;
    std::vector<cplx> d;                 // d_0 .. d_{n-1}
};

struct HypothesisItem {
    std::string id;          // "i".."iv"
    std::string description;
    bool passed = false;
    double witness = 0.0;
    std::string note;
};

struct HypothesisReport {
    std::vector<HypothesisItem> items;
    bool all_passed() const;
};

// Built-in profiles: gauss (lambda=1), rational (lambda=1),
// haar-admissible (lambda=0.5), zero, haar-self.
std::vector<FreqProfile> builtin_profiles();

// Lookup by "name" or "name:lambda", e.g. "gauss:0.5".
FreqProfile make_profile(const std::string& spec);

// d_s = sum_{r<=s} (ib)^r / r! c_{s-r}.
ShiftedCoeffs shift_coeffs(const FreqProfile& profile, double b, int n);

// Origin coefficients of the reflected integrand e^{-ibw} fhat(-w), i.e. the
// same convolution with -b over coeffs_neg.
ShiftedCoeffs shift_coeffs_reflected(const FreqProfile& profile, double b, int n);

class WaveletSpec;
HypothesisReport check_hypotheses(const FreqProfile& profile,
                                  const WaveletSpec& wavelet, int m);

} // namespace wasym
