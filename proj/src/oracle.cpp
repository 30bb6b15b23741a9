#include "wasym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wasym {

namespace {

constexpr double pi = std::numbers::pi;

// Smallest frequency beyond which the profile envelope is negligible.
double profile_cutoff(const FreqProfile& profile, double tol) {
    double w = 6.0;
    while (w < 64.0) {
        if (std::abs(profile.eval(w)) < 0.01 * tol &&
            std::abs(profile.eval(1.25 * w)) < 0.01 * tol)
            return w;
        w *= 1.5;
    }
    return w;
}

void append_uniform(std::vector<double>& knots, double from, double to,
                    double step) {
    for (double t = from + step; t < to - 0.5 * step; t += step)
        knots.push_back(t);
    knots.push_back(to);
}

// Segment list for the half-line u-integral of fhat(u/a) e^{+-ibu/a} h(+-u).
std::vector<double> half_line_knots(const FreqProfile& profile,
                                    const WaveletSpec& wavelet, double b,
                                    double a, const QuadratureSettings& q,
                                    bool& levin_tail, double& period) {
    levin_tail = false;
    period = wavelet.kernel_period();
    // cap from the e^{ibu/a} modulation, quarter period
    const double b_cap =
        (b != 0.0 && q.oscillation == quad::Settings::Oscillation::subdivide_per_period)
            ? 0.5 * pi * a / std::abs(b)
            : std::numeric_limits<double>::infinity();

    std::vector<double> knots{0.0};
    if (wavelet.kernel_localized()) {
        const double width = std::sqrt(2.0 * std::log(1.0 / q.envelope_tol)) + 2.0;
        double u_hi = wavelet.kernel_center() + width;
        if (q.cutoff_strategy == quad::Settings::Cutoff::fixed)
            u_hi = a * q.omega_max;
        const double step = std::min(2.0, b_cap);
        double t = std::min(0.5, step);
        while (t < u_hi) {
            knots.push_back(t);
            t = std::min(t * 2.0, knots.back() + step);
        }
        knots.push_back(u_hi);
        return knots;
    }

    // Haar kernel: quarter-period segments of the fastest component e^{iu}.
    const double qper =
        q.oscillation == quad::Settings::Oscillation::subdivide_per_period
            ? std::min(0.5 * pi, b_cap)
            : std::min(8.0, b_cap);
    double u_hi;
    if (q.cutoff_strategy == quad::Settings::Cutoff::fixed) {
        u_hi = a * q.omega_max;
    } else if (profile.decay_class == FreqProfile::Decay::polynomial) {
        levin_tail = true;
        u_hi = std::max(24.0 * pi, 8.0 * qper);
        u_hi = std::ceil(u_hi / period) * period;  // align tail blocks
    } else {
        u_hi = a * profile_cutoff(profile, q.envelope_tol);
    }
    append_uniform(knots, 0.0, u_hi, qper);
    return knots;
}

struct HalfLine {
    cplx value;
    double err = 0.0;
    long evals = 0;
};

template <class F>
HalfLine integrate_half_line(F&& f, const std::vector<double>& knots,
                             bool levin_tail, double period,
                             const quad::Settings& qs, quad::Rule rule,
                             quad::Exec exec) {
    HalfLine out;
    quad::Result head = quad::integrate_segments(f, knots, qs, rule, exec);
    out.value = head.value;
    out.err = head.err;
    out.evals = head.evals;
    if (levin_tail) {
        quad::Result tail =
            quad::integrate_periodic_tail(f, knots.back(), period, qs, rule);
        out.value += tail.value;
        out.err += tail.err;
        out.evals += tail.evals;
    }
    return out;
}

} // namespace

void QuadratureSettings::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("quadrature: tolerances must be positive");
    if (cutoff_strategy == quad::Settings::Cutoff::fixed && !(omega_max > 0.0))
        throw std::invalid_argument(
            "quadrature: fixed cutoff requires omega_max > 0");
    if (max_subdivisions < 16)
        throw std::invalid_argument("quadrature: max_subdivisions too small");
}

quad::Settings QuadratureSettings::to_quad() const {
    quad::Settings s;
    s.abs_tol = abs_tol;
    s.rel_tol = rel_tol;
    s.max_subdivisions = max_subdivisions;
    s.cutoff = cutoff_strategy;
    s.omega_max = omega_max;
    s.envelope_tol = envelope_tol;
    s.oscillation = oscillation;
    return s;
}

OracleDetail cwt_oracle_detail(const FreqProfile& profile,
                               const WaveletSpec& wavelet, double b, double a,
                               const QuadratureSettings& q, quad::Rule rule) {
    q.validate();
    if (!(a > 0.0)) throw std::invalid_argument("cwt_oracle: a > 0 required");

    // u = a w; W = (I1 + I2) / (2 pi sqrt(a)) with
    //   I1 = int_0^inf fhat(u/a) e^{+ibu/a} h(+u) du
    //   I2 = int_0^inf fhat(-u/a) e^{-ibu/a} h(-u) du
    quad::Settings qs = q.to_quad();
    qs.abs_tol = q.abs_tol * pi * std::sqrt(a);  // half-line budget in u space
    qs.rel_tol = 0.5 * q.rel_tol;

    bool levin_tail = false;
    double period = 0.0;
    const std::vector<double> knots =
        half_line_knots(profile, wavelet, b, a, q, levin_tail, period);

    const double binv = b / a;
    auto f1 = [&](double u) -> cplx {
        return profile.eval(u / a) * std::exp(cplx{0.0, binv * u}) *
               wavelet.psi_hat_conj(u);
    };
    auto f2 = [&](double u) -> cplx {
        return profile.eval(-u / a) * std::exp(cplx{0.0, -binv * u}) *
               wavelet.psi_hat_conj(-u);
    };

    HalfLine h1 =
        integrate_half_line(f1, knots, levin_tail, period, qs, rule, q.exec);
    HalfLine h2 =
        integrate_half_line(f2, knots, levin_tail, period, qs, rule, q.exec);

    OracleDetail out;
    out.i1 = h1.value / a;
    out.i2 = h2.value / a;
    out.value = (h1.value + h2.value) / (2.0 * pi * std::sqrt(a));
    out.err = (h1.err + h2.err) / (2.0 * pi * std::sqrt(a));
    out.evals = h1.evals + h2.evals;
    if (out.err > 4.0 * (q.abs_tol + q.rel_tol * std::abs(out.value)) + 1e-300)
        throw quad::non_convergence(
            "cwt_oracle: accumulated error estimate " + std::to_string(out.err) +
            " exceeds tolerance (evals " + std::to_string(out.evals) + ")");
    return out;
}

cplx cwt_oracle(const FreqProfile& profile, const WaveletSpec& wavelet, double b,
                double a, const QuadratureSettings& q) {
    return cwt_oracle_detail(profile, wavelet, b, a, q).value;
}

FHalves haar_F_halves(const FreqProfile& profile, double b,
                      const QuadratureSettings& q) {
    q.validate();
    const int s_min = profile.first_nonzero_coeff();
    if (s_min < 0) return {cplx{}, cplx{}};
    if (!(s_min + profile.lambda > 1.0))
        throw std::domain_error(
            "haar_F_integral: fhat(w)/w is not integrable at the origin "
            "(first nonzero coefficient s=" +
            std::to_string(s_min) + ", lambda=" + std::to_string(profile.lambda) +
            "); the d_0 = 0 requirement fails");

    quad::Settings qs = q.to_quad();
    qs.abs_tol = 0.5 * q.abs_tol;
    qs.rel_tol = 0.5 * q.rel_tol;

    const bool poly = profile.decay_class == FreqProfile::Decay::polynomial;
    const double period = b != 0.0 ? 2.0 * pi / std::abs(b) : 0.0;
    double w_hi = poly ? 64.0 : profile_cutoff(profile, q.envelope_tol);
    std::vector<double> knots{0.0, 0.0625, 0.25, 0.5};
    const double step = b != 0.0 ? std::min(1.0, 0.25 * period) : 1.0;
    append_uniform(knots, 0.5, w_hi, step);

    auto make = [&](double sign) {
        auto f = [&, sign](double w) -> cplx {
            return std::exp(cplx{0.0, sign * b * w}) * profile.eval(sign * w) / w;
        };
        quad::Result head = quad::integrate_segments(
            f, knots, qs, quad::Rule::gauss_kronrod, q.exec);
        cplx v = head.value;
        if (poly) {
            const double blk = b != 0.0 ? period : 32.0;
            quad::Result tail = quad::integrate_periodic_tail(
                f, knots.back(), blk, qs, quad::Rule::gauss_kronrod);
            v += tail.value;
        }
        return v;
    };

    FHalves out;
    out.pos = make(+1.0);
    out.neg = -make(-1.0);  // int_{-inf}^0 e^{ibw} fhat(w)/w dw
    return out;
}

cplx haar_F_integral(const FreqProfile& profile, double b,
                     const QuadratureSettings& q) {
    return haar_F_halves(profile, b, q).full();
}

cplx cwt_time_domain_oracle(const SampledFunction& f, const WaveletSpec& wavelet,
                            double b, double a) {
    if (wavelet.kind() != WaveletSpec::Kind::haar)
        throw std::invalid_argument(
            "cwt_time_domain_oracle: only the Haar wavelet has the closed-form "
            "time support");
    if (!(a > 0.0)) throw std::invalid_argument("time oracle: a > 0 required");
    if (f.values.size() < 8 || !(f.dt > 0.0))
        throw std::invalid_argument("time oracle: degenerate sample grid");
    if (b < f.t0 - 1e-12 || b + a > f.t_end() + 1e-12)
        throw std::invalid_argument(
            "time oracle: sample grid does not cover [b, b+a]");

    // cubic Lagrange interpolation on the uniform grid
    auto interp = [&](double t) -> double {
        const int n = static_cast<int>(f.values.size());
        double x = (t - f.t0) / f.dt;
        int i = static_cast<int>(std::floor(x)) - 1;
        i = std::clamp(i, 0, n - 4);
        const double s = x - i;
        const double w0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
        const double w1 = s * (s - 2) * (s - 3) / 2.0;
        const double w2 = -s * (s - 1) * (s - 3) / 2.0;
        const double w3 = s * (s - 1) * (s - 2) / 6.0;
        return w0 * f.values[i] + w1 * f.values[i + 1] + w2 * f.values[i + 2] +
               w3 * f.values[i + 3];
    };

    auto plateau = [&](double lo, double hi) -> double {
        const int panels =
            std::max<int>(16, static_cast<int>((hi - lo) / (4.0 * f.dt)) + 1);
        const double h = (hi - lo) / panels;
        double acc = 0.0;
        for (int k = 0; k < panels; ++k) {
            double err;
            acc += wasym::quad::detail::gk15_panel(
                       [&](double t) -> cplx { return {interp(t), 0.0}; },
                       lo + k * h, lo + (k + 1) * h, err)
                       .real();
        }
        return acc;
    };

    const double mid = b + 0.5 * a;
    return cplx{(plateau(b, mid) - plateau(mid, b + a)) / std::sqrt(a), 0.0};
}

} // namespace wasym
