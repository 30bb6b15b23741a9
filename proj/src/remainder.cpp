#include "wasym/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wasym {

namespace {

constexpr double pi = std::numbers::pi;

ExpansionResult evaluate_expansion(const ExpansionRequest& req,
                                   const QuadratureSettings& q) {
    switch (req.wavelet.kind()) {
        case WaveletSpec::Kind::morlet: return morlet_expansion(req);
        case WaveletSpec::Kind::mexican_hat: return mexican_expansion(req);
        case WaveletSpec::Kind::haar:
            return haar_expansion(req, haar_F_integral(req.profile, req.b, q));
    }
    throw std::logic_error("unreachable");
}

} // namespace

cplx remainder_by_difference(const ExpansionRequest& req, cplx oracle_value,
                             const ExpansionResult& result) {
    (void)req;
    return oracle_value - result.value();
}

cplx haar_delta_explicit(const FreqProfile& profile, double b, double a, int n,
                         int m, const QuadratureSettings& q) {
    if (m < 0 || m > 2)
        throw std::invalid_argument("haar_delta_explicit: m in {0,1,2}");
    if (n < 1) throw std::invalid_argument("haar_delta_explicit: n >= 1");
    const double lam = profile.lambda;
    if (!(n + lam > m + 1.0))
        throw std::invalid_argument(
            "haar_delta_explicit: need n + lambda > m + 1 for an integrable "
            "G^(m) at the origin");
    if (!(n + lam < m + 3.0))
        throw std::invalid_argument(
            "haar_delta_explicit: subtracted series grows too fast for direct "
            "quadrature (need n + lambda < m + 3)");
    ShiftedCoeffs d = shift_coeffs(profile, b, n);
    if (!d.d.empty() && std::abs(d.d[0]) != 0.0)
        throw std::invalid_argument("haar_delta_explicit: d_0 must vanish");

    auto G = [&](double w) -> cplx {
        cplx val = std::exp(cplx{0.0, b * w}) * profile.eval(w);
        for (int s = 1; s < n; ++s) val -= d.d[s] * std::pow(w, s + lam - 1.0);
        return val / w;
    };
    auto Gm = [&](double w) -> cplx {
        if (m == 0) return G(w);
        const double h = std::max(1e-4, 1e-4 * std::abs(w));
        if (m == 1) return (G(w + h) - G(w - h)) / (2.0 * h);
        return (G(w + h) - 2.0 * G(w) + G(w - h)) / (h * h);
    };

    const double two_m1 = std::pow(2.0, m + 1);
    auto f = [&](double w) -> cplx {
        return Gm(w) * (std::exp(cplx{0.0, a * w}) -
                        two_m1 * std::exp(cplx{0.0, 0.5 * a * w}));
    };

    quad::Settings qs = q.to_quad();
    qs.abs_tol = 0.25 * q.abs_tol * std::pow(a, m + 0.5) * 2.0 * pi;
    const bool poly = profile.decay_class == FreqProfile::Decay::polynomial;
    const double qper = 0.5 * pi / a;
    std::vector<double> knots{0.0};
    const double w_hi =
        poly ? std::ceil(16.0 / (4.0 * pi / a)) * (4.0 * pi / a) : 9.0;
    for (double t = qper; t < w_hi; t += qper) knots.push_back(t);
    knots.push_back(w_hi);

    quad::Result head =
        quad::integrate_segments(f, knots, qs, quad::Rule::gauss_kronrod, q.exec);
    cplx integral = head.value;
    if (poly) {
        quad::Result tail = quad::integrate_periodic_tail(
            f, knots.back(), 4.0 * pi / a, qs, quad::Rule::gauss_kronrod);
        integral += tail.value;
    }

    const cplx i_over_a = cplx{0.0, 1.0} / a;
    return std::pow(i_over_a, m + 1) * std::sqrt(a) / (2.0 * pi) * integral;
}

std::vector<double> log_spaced_grid(double a_start, double a_stop, int points) {
    if (points < 2 || !(a_start > 0.0) || !(a_stop > a_start))
        throw std::invalid_argument("log grid: need a_stop > a_start > 0, >= 2 points");
    std::vector<double> g(points);
    const double l0 = std::log10(a_start), l1 = std::log10(a_stop);
    for (int i = 0; i < points; ++i)
        g[i] = std::pow(10.0, l0 + (l1 - l0) * i / (points - 1));
    return g;
}

ConvergenceReport convergence_study(const FreqProfile& profile,
                                    const WaveletSpec& wavelet, double b,
                                    int n_terms,
                                    const std::vector<double>& a_grid,
                                    const QuadratureSettings& q) {
    if (a_grid.size() < 4)
        throw std::invalid_argument("convergence_study: need >= 4 grid points");
    if (!std::is_sorted(a_grid.begin(), a_grid.end()) ||
        !(a_grid.front() > 0.0) || a_grid.front() >= a_grid.back())
        throw std::invalid_argument(
            "convergence_study: a_grid must be strictly increasing and positive");
    if (std::log10(a_grid.back() / a_grid.front()) < 1.5 - 1e-9)
        throw std::invalid_argument(
            "convergence_study: a_grid must span at least 1.5 decades");

    ConvergenceReport rep;
    rep.a_grid = a_grid;
    rep.n_terms = n_terms;
    rep.wavelet = wavelet.id();
    rep.profile = profile.name + ":" + std::to_string(profile.lambda);
    rep.b = b;

    ExpansionRequest probe{profile, wavelet, b, 1.0, n_terms};
    rep.first_omitted_s = first_nonvanishing_term(probe, n_terms);
    const bool zero_tail = rep.first_omitted_s < 0;
    if (zero_tail) {
        rep.first_omitted_s = n_terms;
        rep.warnings.push_back(
            "no nonvanishing omitted term found in scan range; using the naive "
            "exponent");
    }
    rep.predicted_slope = -(rep.first_omitted_s + profile.lambda) + 0.5;

    if (!zero_tail) {
        ExpansionRequest ext = probe;
        ext.n_terms = rep.first_omitted_s + 1;
        ExpansionResult at_one = evaluate_expansion(ext, q);
        const double coeff = std::abs(at_one.terms[rep.first_omitted_s]);
        const double expected_min =
            coeff * std::pow(a_grid.back(),
                             0.5 - (rep.first_omitted_s + profile.lambda));
        if (expected_min > 0.0 && q.abs_tol > 1e-3 * expected_min)
            throw std::invalid_argument(
                "convergence_study: oracle tolerance too loose for this grid "
                "(abs_tol must be <= " +
                std::to_string(1e-3 * expected_min) + ")");
    }

    // F(b) for Haar is a-independent; evaluate once.
    cplx F{};
    if (wavelet.kind() == WaveletSpec::Kind::haar)
        F = haar_F_integral(profile, b, q);

    for (double a : a_grid) {
        ExpansionRequest req{profile, wavelet, b, a, n_terms};
        ExpansionResult exp_r =
            wavelet.kind() == WaveletSpec::Kind::haar
                ? haar_expansion(req, F)
                : evaluate_expansion(req, q);
        const cplx oracle = cwt_oracle(profile, wavelet, b, a, q);
        rep.oracle_values.push_back(oracle);
        rep.expansion_values.push_back(exp_r.value());
        rep.errors.push_back(std::abs(oracle - exp_r.value()));
    }

    // least-squares slope on (log a, log err), skipping tolerance-floor points
    std::vector<double> xs, ys;
    int truncated = 0;
    for (size_t i = 0; i < a_grid.size(); ++i) {
        if (rep.errors[i] < 10.0 * q.abs_tol) {
            ++truncated;
            continue;
        }
        xs.push_back(std::log(a_grid[i]));
        ys.push_back(std::log(rep.errors[i]));
    }
    if (truncated > 0)
        rep.warnings.push_back(std::to_string(truncated) +
                               " grid point(s) below the oracle tolerance floor "
                               "were excluded from the fit");
    if (xs.size() < 2) {
        rep.degenerate = true;
        rep.fitted_slope = std::numeric_limits<double>::quiet_NaN();
        rep.pass = false;
        return rep;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double nn = static_cast<double>(xs.size());
    rep.fitted_slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    rep.pass = rep.fitted_slope <= rep.predicted_slope + 0.3;
    return rep;
}

} // namespace wasym
