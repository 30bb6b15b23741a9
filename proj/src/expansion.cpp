#include "wasym/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wasym/special_functions.hpp"

namespace wasym {

namespace {

constexpr double pi = std::numbers::pi;

const char* kConstantNote =
    "constants re-derived from the sqrt(a)/(2pi) master prefactor applied to "
    "I1+I2; reflected side uses the -b shift of the reflected origin "
    "coefficients";

struct TermInputs {
    ShiftedCoeffs d;    // I1 side, shift by +b
    ShiftedCoeffs e;    // I2 side, shift of coeffs_neg by -b
};

TermInputs make_inputs(const ExpansionRequest& req, int n) {
    return {shift_coeffs(req.profile, req.b, n),
            shift_coeffs_reflected(req.profile, req.b, n)};
}

ExpansionResult assemble(const ExpansionRequest& req, FormulaId id,
                         const std::vector<cplx>& i1,
                         const std::vector<cplx>& i2) {
    ExpansionResult out;
    out.formula_id = id;
    out.a = req.a;
    out.b = req.b;
    out.lambda = req.profile.lambda;
    out.constant_note = kConstantNote;
    out.i1_terms = i1;
    out.i2_terms = i2;
    const int n = static_cast<int>(i1.size());
    out.terms.resize(n);
    out.partial_sums.resize(n);
    out.scale_power.resize(n);
    cplx run{};
    for (int s = 0; s < n; ++s) {
        out.terms[s] = i1[s] + i2[s];
        run += out.terms[s];
        out.partial_sums[s] = run;
        out.scale_power[s] = 0.5 - s - req.profile.lambda;
    }
    return out;
}

void require_kind(const ExpansionRequest& req, WaveletSpec::Kind kind,
                  const char* op) {
    if (req.wavelet.kind() != kind)
        throw std::invalid_argument(std::string(op) +
                                    ": request carries a different wavelet (" +
                                    req.wavelet.id() + ")");
}

void require_haar_d0(const ShiftedCoeffs& d) {
    if (!d.d.empty() && std::abs(d.d[0]) != 0.0)
        throw std::invalid_argument(
            "haar expansion requires d_0 = 0 (profile must have c_0 = 0); got "
            "|d_0| = " +
            std::to_string(std::abs(d.d[0])));
}

// Smallest n with lambda + n > m, recorded as metadata only.
std::string n_m_note(const ExpansionRequest& req, int m) {
    const int n_min = static_cast<int>(std::floor(m - req.profile.lambda)) + 1;
    return "theorem pairing: for m = " + std::to_string(m) +
           " the smallest admissible n is " + std::to_string(std::max(1, n_min));
}

} // namespace

void ExpansionRequest::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("expansion: a > 0 required");
    if (n_terms < 1)
        throw std::invalid_argument("expansion: n_terms >= 1 required");
    if (n_terms > static_cast<int>(profile.coeffs.size()))
        throw std::invalid_argument(
            "expansion: n_terms exceeds available profile coefficients");
    if (!(wavelet.rho() + profile.lambda > 0.0))
        throw std::invalid_argument("expansion: rho + lambda > 0 violated");
}

cplx ExpansionResult::value() const {
    cplx v = leading_extra.value_or(cplx{});
    if (!partial_sums.empty()) v += partial_sums.back();
    return v;
}

ExpansionResult general_expansion(const ExpansionRequest& req,
                                  std::span<const MellinValue> mellin_pos,
                                  std::span<const MellinValue> mellin_neg) {
    req.validate();
    const int n = req.n_terms;
    if (static_cast<int>(mellin_pos.size()) < n ||
        static_cast<int>(mellin_neg.size()) < n)
        throw std::invalid_argument(
            "general_expansion: missing Mellin values (need one per term and "
            "side)");
    TermInputs in = make_inputs(req, n);
    if (req.wavelet.kind() == WaveletSpec::Kind::haar) require_haar_d0(in.d);

    const double pref = std::sqrt(req.a) / (2.0 * pi);
    std::vector<cplx> i1(n), i2(n);
    for (int s = 0; s < n; ++s) {
        const double apow = std::pow(req.a, -(s + req.profile.lambda));
        if (std::abs(in.d.d[s]) != 0.0)
            i1[s] = pref * in.d.d[s] * mellin_pos[s].value * apow;
        if (std::abs(in.e.d[s]) != 0.0)
            i2[s] = pref * in.e.d[s] * mellin_neg[s].value * apow;
    }
    return assemble(req, FormulaId::general, i1, i2);
}

ExpansionResult morlet_expansion(const ExpansionRequest& req) {
    require_kind(req, WaveletSpec::Kind::morlet, "morlet_expansion");
    req.validate();
    const int n = req.n_terms;
    TermInputs in = make_inputs(req, n);
    const double w0 = req.wavelet.omega0();

    // K = e^{-w0^2/4}/sqrt(2pi); term_s = K Gamma(s+L)
    //   [d_s D_{-(s+L)}(-w0) + e_s D_{-(s+L)}(+w0)] a^{1/2-s-L}
    const double K = std::exp(-0.25 * w0 * w0) / std::sqrt(2.0 * pi);
    std::vector<cplx> i1(n), i2(n);
    for (int s = 0; s < n; ++s) {
        const double z = s + req.profile.lambda;
        const double apow = std::pow(req.a, 0.5 - z);
        const double g = gamma(z);
        if (std::abs(in.d.d[s]) != 0.0)
            i1[s] = K * g * in.d.d[s] * parabolic_cylinder_D(z, -w0) * apow;
        if (std::abs(in.e.d[s]) != 0.0)
            i2[s] = K * g * in.e.d[s] * parabolic_cylinder_D(z, w0) * apow;
    }
    ExpansionResult out = assemble(req, FormulaId::morlet, i1, i2);
    out.n_m_note = n_m_note(req, 0);
    return out;
}

ExpansionResult mexican_expansion(const ExpansionRequest& req) {
    require_kind(req, WaveletSpec::Kind::mexican_hat, "mexican_expansion");
    req.validate();
    if (!req.profile.sigma_bound.has_value())
        throw std::invalid_argument(
            "mexican_expansion: profile lacks the O(e^{sigma w^2}) growth bound");
    const int n = req.n_terms;
    TermInputs in = make_inputs(req, n);

    // Even kernel, equal Mellin values on both sides:
    //   term_s = [2^{(L+1)/2}/(2 sqrt(pi))] 2^{s/2} Gamma((s+L+2)/2)
    //            (d_s + e_s) a^{1/2-s-L}
    std::vector<cplx> i1(n), i2(n);
    for (int s = 0; s < n; ++s) {
        const double z = s + req.profile.lambda;
        const double M = std::sqrt(pi) * std::pow(2.0, 0.5 * (z + 1.0)) *
                         gamma(0.5 * (z + 2.0));
        const double c = M / (2.0 * pi) * std::pow(req.a, 0.5 - z);
        i1[s] = c * in.d.d[s];
        i2[s] = c * in.e.d[s];
    }
    ExpansionResult out = assemble(req, FormulaId::mexican_hat, i1, i2);
    out.n_m_note = n_m_note(req, 0);
    return out;
}

ExpansionResult haar_expansion(const ExpansionRequest& req, cplx F_b) {
    require_kind(req, WaveletSpec::Kind::haar, "haar_expansion");
    req.validate();
    const int n = req.n_terms;
    TermInputs in = make_inputs(req, n);
    require_haar_d0(in.d);

    // term_s (s >= 1) = -(1/2pi)(2^{s+L}-1) Gamma(s+L-1)
    //   [d_s e^{+i pi (s+L)/2} + e_s e^{-i pi (s+L)/2}] a^{1/2-s-L};
    // the s = 0 slot stays zero (d_0 = 0 is required above).
    std::vector<cplx> i1(n), i2(n);
    for (int s = 1; s < n; ++s) {
        const double z = s + req.profile.lambda;
        const double c =
            -(std::pow(2.0, z) - 1.0) * gamma(z - 1.0) / (2.0 * pi) *
            std::pow(req.a, 0.5 - z);
        if (std::abs(in.d.d[s]) != 0.0)
            i1[s] = c * in.d.d[s] * unit_phase(0.5 * z);
        if (std::abs(in.e.d[s]) != 0.0)
            i2[s] = c * in.e.d[s] * unit_phase(-0.5 * z);
    }
    ExpansionResult out = assemble(req, FormulaId::haar, i1, i2);
    out.leading_extra =
        cplx{0.0, 1.0} / (2.0 * pi) * std::pow(req.a, -0.5) * F_b;
    out.n_m_note = n_m_note(req, 0);
    return out;
}

int first_nonvanishing_term(const ExpansionRequest& req, int from, int max_scan) {
    const int hi = std::min<int>(from + max_scan,
                                 static_cast<int>(req.profile.coeffs.size()));
    if (from >= hi) return -1;
    ExpansionRequest probe = req;
    probe.a = 1.0;
    probe.n_terms = hi;
    ExpansionResult r;
    switch (req.wavelet.kind()) {
        case WaveletSpec::Kind::morlet: r = morlet_expansion(probe); break;
        case WaveletSpec::Kind::mexican_hat: r = mexican_expansion(probe); break;
        case WaveletSpec::Kind::haar: r = haar_expansion(probe, cplx{}); break;
    }
    double scale = 0.0;
    for (const cplx& t : r.terms) scale = std::max(scale, std::abs(t));
    for (int s = std::max(from, 0); s < hi; ++s)
        if (std::abs(r.terms[s]) > 1e-13 * scale && std::abs(r.terms[s]) > 0.0)
            return s;
    return -1;
}

} // namespace wasym
