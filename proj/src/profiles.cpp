#include "wasym/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wasym/wavelets.hpp"

namespace wasym {

namespace {

constexpr int kCoeffCount = 25;

void require_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::invalid_argument("profile: lambda must lie in (0, 1]");
}

FreqProfile gauss_profile(double lambda) {
    require_lambda(lambda);
    FreqProfile p;
    p.name = "gauss";
    p.lambda = lambda;
    p.coeffs.assign(kCoeffCount, cplx{});
    double fact = 1.0;
    for (int k = 0; 2 * k < kCoeffCount; ++k) {
        p.coeffs[2 * k] = cplx{(k % 2 ? -1.0 : 1.0) / fact, 0.0};
        fact *= k + 1;
    }
    p.coeffs_neg = p.coeffs;
    p.eval = [lambda](double w) -> cplx {
        return {std::pow(std::abs(w), lambda - 1.0) * std::exp(-w * w), 0.0};
    };
    p.decay_class = FreqProfile::Decay::gaussian;
    p.sigma_bound = 0.0;
    return p;
}

FreqProfile rational_profile(double lambda) {
    require_lambda(lambda);
    FreqProfile p;
    p.name = "rational";
    p.lambda = lambda;
    p.coeffs.assign(kCoeffCount, cplx{});
    for (int k = 0; 2 * k < kCoeffCount; ++k)
        p.coeffs[2 * k] = cplx{k % 2 ? -1.0 : 1.0, 0.0};
    p.coeffs_neg = p.coeffs;
    p.eval = [lambda](double w) -> cplx {
        return {std::pow(std::abs(w), lambda - 1.0) / (1.0 + w * w), 0.0};
    };
    p.decay_class = FreqProfile::Decay::polynomial;
    p.poly_order = 3.0 - lambda;   // |fhat| ~ w^{lambda-3}
    p.sigma_bound = 0.0;
    return p;
}

// fhat(w) = |w|^lambda e^{-w^2}: base exponent lambda - 1 with c_0 = 0, so the
// shifted coefficients satisfy d_0 = 0 for every b.
FreqProfile haar_admissible_profile(double lambda) {
    require_lambda(lambda);
    FreqProfile p;
    p.name = "haar-admissible";
    p.lambda = lambda;
    p.coeffs.assign(kCoeffCount, cplx{});
    double fact = 1.0;
    for (int k = 0; 2 * k + 1 < kCoeffCount; ++k) {
        p.coeffs[2 * k + 1] = cplx{(k % 2 ? -1.0 : 1.0) / fact, 0.0};
        fact *= k + 1;
    }
    p.coeffs_neg = p.coeffs;
    p.eval = [lambda](double w) -> cplx {
        return {std::pow(std::abs(w), lambda) * std::exp(-w * w), 0.0};
    };
    p.decay_class = FreqProfile::Decay::gaussian;
    p.sigma_bound = 0.0;
    return p;
}

FreqProfile zero_profile() {
    FreqProfile p;
    p.name = "zero";
    p.lambda = 1.0;
    p.coeffs.assign(kCoeffCount, cplx{});
    p.coeffs_neg = p.coeffs;
    p.eval = [](double) -> cplx { return {0.0, 0.0}; };
    p.decay_class = FreqProfile::Decay::gaussian;
    p.sigma_bound = 0.0;
    return p;
}

// fhat = psi_hat of the Haar wavelet itself, so the time-domain f equals psi.
// Not even: fhat(-w) = conj(fhat(w)); coefficients are complex.
FreqProfile haar_self_profile() {
    FreqProfile p;
    p.name = "haar-self";
    p.lambda = 1.0;

    // psi_hat(w) = 4i e^{-iw/2} sin^2(w/4) / w; series via convolution of
    // e^{-iw/2} with sin^2(w/4) = sum_{j>=1} (-1)^{j+1} 2^{2j-1} (w/4)^{2j}/(2j)!.
    const int n = kCoeffCount + 1;
    std::vector<cplx> expc(n), sin2(n, cplx{});
    cplx pw{1.0, 0.0};
    double fact = 1.0;
    const cplx mihalf{0.0, -0.5};
    for (int m = 0; m < n; ++m) {
        expc[m] = pw / fact;
        pw *= mihalf;
        fact *= m + 1;
    }
    double f2j = 2.0;  // (2j)!
    for (int j = 1; 2 * j < n; ++j) {
        sin2[2 * j] = cplx{(j % 2 ? 1.0 : -1.0) * std::pow(2.0, 2 * j - 1) /
                               (std::pow(4.0, 2 * j) * f2j),
                           0.0};
        f2j *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    p.coeffs.assign(kCoeffCount, cplx{});
    for (int s = 0; s < kCoeffCount; ++s) {
        cplx c{};
        for (int m = 0; m <= s + 1; ++m) c += expc[m] * sin2[s + 1 - m];
        p.coeffs[s] = cplx{0.0, 4.0} * c;
    }
    p.coeffs_neg.resize(kCoeffCount);
    for (int s = 0; s < kCoeffCount; ++s) p.coeffs_neg[s] = std::conj(p.coeffs[s]);

    p.eval = [](double w) -> cplx {
        if (w == 0.0) return {0.0, 0.0};
        const cplx i{0.0, 1.0};
        return (-i / w) * (1.0 - 2.0 * std::exp(-i * (0.5 * w)) + std::exp(-i * w));
    };
    p.decay_class = FreqProfile::Decay::polynomial;
    p.poly_order = 1.0;
    p.sigma_bound = 0.0;
    return p;
}

ShiftedCoeffs shift_impl(const std::vector<cplx>& c, double lambda, double b,
                         int n) {
    (void)lambda;
    if (n < 0 || n > static_cast<int>(c.size()))
        throw std::invalid_argument(
            "shift_coeffs: insufficient coefficients (requested " +
            std::to_string(n) + ", have " + std::to_string(c.size()) + ")");
    ShiftedCoeffs out;
    out.b = b;
    out.d.resize(n);
    const cplx ib{0.0, b};
    for (int s = 0; s < n; ++s) {
        cplx acc{};
        cplx pw{1.0, 0.0};
        double fact = 1.0;
        for (int r = 0; r <= s; ++r) {
            acc += pw / fact * c[s - r];
            pw *= ib;
            fact *= r + 1;
        }
        out.d[s] = acc;
    }
    return out;
}

// j-th derivative of Re/Im parts by nested second-order central differences.
cplx fd_derivative(const std::function<cplx(double)>& f, double w, int j) {
    if (j == 0) return f(w);
    const double h = std::max(1e-4, 1e-4 * std::abs(w));
    std::function<cplx(double, int)> d = [&](double x, int k) -> cplx {
        if (k == 0) return f(x);
        return (d(x + h, k - 1) - d(x - h, k - 1)) / (2.0 * h);
    };
    return d(w, j);
}

} // namespace

int FreqProfile::first_nonzero_coeff() const {
    for (int s = 0; s < static_cast<int>(coeffs.size()); ++s)
        if (std::abs(coeffs[s]) > 0.0) return s;
    return -1;
}

bool HypothesisReport::all_passed() const {
    for (const auto& it : items)
        if (!it.passed) return false;
    return true;
}

std::vector<FreqProfile> builtin_profiles() {
    return {gauss_profile(1.0), rational_profile(1.0),
            haar_admissible_profile(0.5), zero_profile(), haar_self_profile()};
}

FreqProfile make_profile(const std::string& spec) {
    std::string name = spec;
    double lambda = -1.0;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        lambda = std::stod(spec.substr(pos + 1));
    }
    if (name == "gauss") return gauss_profile(lambda < 0 ? 1.0 : lambda);
    if (name == "rational") return rational_profile(lambda < 0 ? 1.0 : lambda);
    if (name == "haar-admissible")
        return haar_admissible_profile(lambda < 0 ? 0.5 : lambda);
    if (name == "zero") return zero_profile();
    if (name == "haar-self") return haar_self_profile();
    throw std::invalid_argument("unknown profile '" + spec + "'");
}

ShiftedCoeffs shift_coeffs(const FreqProfile& profile, double b, int n) {
    return shift_impl(profile.coeffs, profile.lambda, b, n);
}

ShiftedCoeffs shift_coeffs_reflected(const FreqProfile& profile, double b,
                                     int n) {
    return shift_impl(profile.coeffs_neg, profile.lambda, -b, n);
}

HypothesisReport check_hypotheses(const FreqProfile& profile,
                                  const WaveletSpec& wavelet, int m) {
    if (m < 0) throw std::invalid_argument("check_hypotheses: m >= 0 required");
    HypothesisReport rep;

    // (i) fhat^(m) continuous away from the origin: sampled finite derivatives.
    {
        HypothesisItem it{"i", "fhat^(m) continuous on the open half lines", true,
                          0.0, ""};
        for (double w : {0.05, 0.3, 1.0, 4.0, -0.5, -2.0}) {
            const cplx dj = fd_derivative(profile.eval, w, m);
            if (!std::isfinite(std::abs(dj))) it.passed = false;
            it.witness = std::max(it.witness, std::abs(dj));
        }
        rep.items.push_back(it);
    }

    // (ii) origin expansion order: the residual after n terms scales like the
    // first nonvanishing omitted power.
    {
        HypothesisItem it{"ii", "origin expansion holds to the claimed order",
                          true, 0.0, ""};
        const int n = std::min<int>(4, profile.coeffs.size());
        int s_next = -1;
        for (int s = n; s < static_cast<int>(profile.coeffs.size()); ++s)
            if (std::abs(profile.coeffs[s]) > 0.0) { s_next = s; break; }
        if (s_next < 0) {
            it.note = "expansion terminates (zero tail)";
        } else {
            double rmin = 1e300, rmax = 0.0;
            for (double w : {0.1, 0.03, 0.01}) {
                cplx partial{};
                for (int s = 0; s < n; ++s)
                    partial += profile.coeffs[s] *
                               std::pow(w, s + profile.lambda - 1.0);
                const double ratio = std::abs(profile.eval(w) - partial) /
                                     std::pow(w, s_next + profile.lambda - 1.0);
                rmin = std::min(rmin, ratio);
                rmax = std::max(rmax, ratio);
            }
            it.witness = rmax;
            it.passed = rmax < 10.0 * std::max(rmin, 1e-14);
        }
        rep.items.push_back(it);
    }

    // (iii) kernel conditions: origin order rho with rho + lambda > 0 and a
    // known tail class.
    {
        HypothesisItem it{"iii", "kernel origin/tail conditions", true, 0.0, ""};
        it.witness = wavelet.rho() + profile.lambda;
        it.passed = it.witness > 0.0;
        if (wavelet.tail().tau == 0.0)
            it.note = "kernel decays faster than any polynomial tail";
        rep.items.push_back(it);
    }

    // (iv) w^{-beta} fhat^(j)(w) = O(w^{-1-eps}) for j = 0..m: the witness
    // w^{-beta} |fhat^(j)(w)| w^{1+eps} must stay bounded and non-increasing
    // over the top decade.
    {
        HypothesisItem it{"iv", "decay of fhat^(j) against the kernel tail", true,
                          0.0, ""};
        const double beta = wavelet.tail().beta;
        const double eps = 0.5;
        for (int j = 0; j <= m && it.passed; ++j) {
            double first_top = -1.0, last = 0.0;
            for (int k = 0; k < 25; ++k) {
                const double w = 10.0 * std::pow(100.0, k / 24.0);
                const double q = std::pow(w, 1.0 + eps - beta) *
                                 std::abs(fd_derivative(profile.eval, w, j));
                if (!std::isfinite(q)) { it.passed = false; break; }
                it.witness = std::max(it.witness, q);
                if (w >= 100.0 && first_top < 0.0) first_top = q;
                last = q;
            }
            if (first_top > 0.0 && last > 1.5 * first_top + 1e-12)
                it.passed = false;
        }
        rep.items.push_back(it);
    }

    return rep;
}

} // namespace wasym
