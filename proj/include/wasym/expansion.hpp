#pragma once

// Large-a asymptotic series for (W_psi f)(b, a): the general two-sided engine
// and the Morlet / Mexican-hat / Haar specializations.  All four share the
// master form
//   (W_psi f)(b,a) ~ (sqrt(a)/2pi) sum_s [d_s M[h; s+L] + e_s M[h(-.); s+L]] a^{-s-L}
// where d_s shifts the origin coefficients by +b and e_s shifts the reflected
// coefficients by -b.  Constants are re-derived from this prefactor; the
// result records this policy so downstream readers can map the terms.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wasym/mellin.hpp"
#include "wasym/profiles.hpp"
#include "wasym/wavelets.hpp"

namespace wasym {

struct ExpansionRequest {
    FreqProfile profile;
    WaveletSpec wavelet = WaveletSpec::haar();
    double b = 0.0;
    double a = 1.0;      // scale, > 0
    int n_terms = 1;

    void validate() const;   // a > 0, n_terms >= 1 and <= coefficients, rho+lambda > 0
};

enum class FormulaId { general, morlet, mexican_hat, haar };

struct ExpansionResult {
    std::vector<cplx> terms;          // s-th summand, all prefactors included
    std::vector<cplx> partial_sums;   // partial_sums[k] = sum_{j<=k} terms[j]
    std::vector<double> scale_power;  // exponent of a per term: 1/2 - s - lambda
    FormulaId formula_id = FormulaId::general;
    std::optional<cplx> leading_extra;  // Haar: (i/2pi) a^{-1/2} * full-line F(b)

    std::vector<cplx> i1_terms, i2_terms;  // per-half split of each term
    double a = 0.0, b = 0.0, lambda = 0.0;
    std::string constant_note;
    std::string n_m_note;

    // leading_extra (if any) plus the last partial sum.
    cplx value() const;
};

// General engine; Mellin values must be supplied for z = s + lambda,
// s = 0..n-1, for the kernel on +w (I1) and on -w (I2).  Terms whose shifted
// coefficients vanish on both sides never touch the supplied values.
ExpansionResult general_expansion(const ExpansionRequest& req,
                                  std::span<const MellinValue> mellin_pos,
                                  std::span<const MellinValue> mellin_neg);

ExpansionResult morlet_expansion(const ExpansionRequest& req);
ExpansionResult mexican_expansion(const ExpansionRequest& req);

// F_b is the full-line principal integral int e^{ibw} fhat(w)/w dw supplied by
// the oracle module; the series starts at s = 1 and requires d_0 = 0.
ExpansionResult haar_expansion(const ExpansionRequest& req, cplx F_b);

// First s >= from with a nonvanishing term coefficient (scanning at most
// max_scan indices); -1 when everything in range vanishes.
int first_nonvanishing_term(const ExpansionRequest& req, int from, int max_scan = 8);

} // namespace wasym
