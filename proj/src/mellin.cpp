#include "wasym/mellin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasym/special_functions.hpp"

namespace wasym {

namespace {

constexpr double sqrt_2pi = 2.5066282746310005;
constexpr double pi = std::numbers::pi;

// One eps-damped integral int_0^inf t^{z-1} h(t) e^{-eps t^p} dt.
cplx damped_integral(const MellinKernel& h, cplx z, double p, double eps,
                     const quad::Settings& s, double& err) {
    auto f = [&](double t) -> cplx {
        return std::pow(t, z - 1.0) * h.f(t) * std::exp(-eps * std::pow(t, p));
    };
    if (h.osc_freq <= 0.0) {
        // decaying envelope: geometric knots up to the kernel cutoff
        std::vector<double> knots{0.0, 0.25, 0.5, 1.0};
        double t = 2.0;
        while (t < h.cutoff) {
            knots.push_back(t);
            t *= 2.0;
        }
        knots.push_back(h.cutoff);
        quad::Result r = quad::integrate_segments(f, knots, s,
                                                  quad::Rule::gauss_kronrod,
                                                  quad::Exec::serial);
        err = r.err;
        return r.value;
    }
    // oscillatory kernel: resolve a head region, then accelerate the tail over
    // half-period blocks so the partial sums alternate instead of collapsing
    // onto the slow eps envelope.
    const double block = pi / h.osc_freq;
    std::vector<double> knots{0.0};
    const double head = 8.0 * block;
    for (double t = 0.5 * block; t <= head; t += 0.5 * block)
        knots.push_back(t);
    quad::Result headr = quad::integrate_segments(
        f, knots, s, quad::Rule::gauss_kronrod, quad::Exec::serial);
    quad::Result tail = quad::integrate_periodic_tail(f, knots.back(), block, s,
                                                      quad::Rule::gauss_kronrod);
    err = headr.err + tail.err;
    return headr.value + tail.value;
}

MellinValue closed(double z, cplx value) {
    return {cplx(z, 0.0), value, MellinValue::Method::closed_form, 0.0};
}

} // namespace

cplx unit_phase(double mu) {
    const double r = std::remainder(mu, 2.0);  // r in [-1, 1]
    if (r == 0.0) return {1.0, 0.0};
    if (r == 1.0 || r == -1.0) return {-1.0, 0.0};
    if (r == 0.5) return {0.0, 1.0};
    if (r == -0.5) return {0.0, -1.0};
    return {std::cos(pi * r), std::sin(pi * r)};
}

MellinValue mellin_regularized(const MellinKernel& h, cplx z, double p,
                               std::span<const double> eps_sequence,
                               const quad::Settings& settings) {
    if (!(z.real() + h.origin_power > 0.0))
        throw std::domain_error(
            "mellin_regularized: Re(z) + origin power must be > 0");
    if (eps_sequence.size() < 3 || eps_sequence.back() > 1e-6)
        throw std::invalid_argument(
            "mellin_regularized: need a decreasing eps sequence ending <= 1e-6");

    std::vector<cplx> vals;
    vals.reserve(eps_sequence.size());
    double quad_err = 0.0;
    for (double eps : eps_sequence) {
        double e = 0.0;
        vals.push_back(damped_integral(h, z, p, eps, settings, e));
        quad_err = std::max(quad_err, e);
    }

    // Cauchy check on successive differences before extrapolating.
    const size_t k = vals.size();
    const double d_last = std::abs(vals[k - 1] - vals[k - 2]);
    const double d_prev = std::abs(vals[k - 2] - vals[k - 3]);
    if (d_last > std::max(0.5 * d_prev, 50.0 * (settings.abs_tol + quad_err)))
        throw quad::non_convergence(
            "mellin_regularized: eps sequence not Cauchy (deltas " +
            std::to_string(d_prev) + " -> " + std::to_string(d_last) + ")");

    // Neville extrapolation of the last three (eps, value) points to eps = 0.
    const double x0 = eps_sequence[k - 3], x1 = eps_sequence[k - 2],
                 x2 = eps_sequence[k - 1];
    cplx p01 = (x0 * vals[k - 2] - x1 * vals[k - 3]) / (x0 - x1);
    cplx p12 = (x1 * vals[k - 1] - x2 * vals[k - 2]) / (x1 - x2);
    cplx p012 = (x0 * p12 - x2 * p01) / (x0 - x2);

    MellinValue out;
    out.z = z;
    out.value = p012;
    out.method = MellinValue::Method::regularized_quadrature;
    out.err_estimate = std::abs(p012 - p12) + quad_err;
    return out;
}

MellinValue morlet_mellin(double z, double omega0) {
    if (!(z > 0.0)) throw std::domain_error("morlet_mellin: z > 0 required");
    const double g = gamma(z);
    const double d = parabolic_cylinder_D(z, -omega0);
    return closed(z, sqrt_2pi * std::exp(-0.25 * omega0 * omega0) * g * d);
}

MellinValue morlet_mellin_reflected(double z, double omega0) {
    if (!(z > 0.0))
        throw std::domain_error("morlet_mellin_reflected: z > 0 required");
    const double g = gamma(z);
    const double d = parabolic_cylinder_D(z, omega0);
    return closed(z, sqrt_2pi * std::exp(-0.25 * omega0 * omega0) * g * d);
}

MellinValue mexican_mellin(double z) {
    if (!(z > 0.0)) throw std::domain_error("mexican_mellin: z > 0 required");
    return closed(z, std::sqrt(pi) * std::pow(2.0, 0.5 * (z + 1.0)) *
                         gamma(0.5 * (z + 2.0)));
}

MellinValue haar_mellin_component(double z, double c, bool combined_context) {
    if (c == 0.0)
        throw std::domain_error("haar_mellin_component: c must be nonzero");
    if (!(z > 0.0))
        throw std::domain_error("haar_mellin_component: z > 0 required");
    if (!combined_context && !(z < 1.0))
        throw std::domain_error(
            "haar_mellin_component: raw component only converges on 0 < z < 1; "
            "assert the combined-cancellation context to go outside the strip");
    const cplx phase = c > 0.0 ? unit_phase(0.5 * z) : unit_phase(-0.5 * z);
    return closed(z, std::pow(std::abs(c), -z) * phase * gamma(z));
}

MellinValue haar_mellin(double z) {
    if (!(z > 1.0))
        throw std::domain_error("haar_mellin: combined kernel value needs z > 1");
    // i [M[e^{it}; z-1] - 2 M[e^{it/2}; z-1]] = -(2^z - 1) Gamma(z-1) e^{i pi z/2}
    return closed(z, -(std::pow(2.0, z) - 1.0) * gamma(z - 1.0) *
                         unit_phase(0.5 * z));
}

MellinValue haar_mellin_reflected(double z) {
    if (!(z > 1.0))
        throw std::domain_error(
            "haar_mellin_reflected: combined kernel value needs z > 1");
    return closed(z, -(std::pow(2.0, z) - 1.0) * gamma(z - 1.0) *
                         unit_phase(-0.5 * z));
}

} // namespace wasym
