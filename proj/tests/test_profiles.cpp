#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "wasym/profiles.hpp"
#include "wasym/wavelets.hpp"

using namespace wasym;

namespace {

FreqProfile custom_profile(std::vector<cplx> c, double lambda = 1.0) {
    FreqProfile p;
    p.name = "custom";
    p.lambda = lambda;
    p.coeffs = c;
    p.coeffs_neg = c;
    p.eval = [](double) -> cplx { return {0.0, 0.0}; };
    return p;
}

// Newton divided difference f[x_0..x_s] over scaled (s+1)-th roots of unity;
// for those nodes every elementary correction below order s+1 cancels, so the
// result equals the s-th Taylor coefficient up to O(r^{s+1}).
cplx divided_difference(const std::function<cplx(cplx)>& f, int s, double r) {
    const int m = s + 1;
    std::vector<cplx> x(m), v(m);
    for (int k = 0; k < m; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * k / m;
        x[k] = r * cplx{std::cos(th), std::sin(th)};
        v[k] = f(x[k]);
    }
    for (int level = 1; level < m; ++level)
        for (int k = 0; k < m - level; ++k)
            v[k] = (v[k + 1] - v[k]) / (x[k + level] - x[k]);
    return v[0];
}

} // namespace

TEST_CASE("builtins: names and anchor values") {
    auto all = builtin_profiles();
    CHECK(all.size() >= 3);

    FreqProfile p1 = make_profile("gauss:1");
    CHECK(std::abs(p1.eval(0.1) - cplx{std::exp(-0.01), 0.0}) < 1e-15);
    CHECK(p1.coeffs[0] == cplx{1.0, 0.0});
    CHECK(p1.coeffs[1] == cplx{0.0, 0.0});
    CHECK(p1.coeffs[2] == cplx{-1.0, 0.0});

    FreqProfile p2 = make_profile("rational:1");
    for (int s = 0; s <= 4; ++s)
        CHECK(p2.coeffs[s] == cplx{s % 2 ? 0.0 : (s % 4 ? -1.0 : 1.0), 0.0});

    FreqProfile p3 = make_profile("haar-admissible:0.5");
    CHECK(std::abs(p3.eval(1e-4) / std::pow(1e-4, 0.5) - 1.0) < 1e-7);
    CHECK(p3.coeffs[0] == cplx{0.0, 0.0});
    CHECK(p3.coeffs[1] == cplx{1.0, 0.0});
    CHECK(p3.first_nonzero_coeff() == 1);

    CHECK(make_profile("zero").first_nonzero_coeff() == -1);
    CHECK_THROWS_AS(make_profile("nope"), std::invalid_argument);
    CHECK_THROWS_AS(make_profile("gauss:1.5"), std::invalid_argument);
}

TEST_CASE("haar-self carries the wavelet's own spectrum") {
    FreqProfile p = make_profile("haar-self");
    WaveletSpec haar = WaveletSpec::haar();
    // fhat = psi_hat = conj(conj(psi_hat))
    for (double w : {0.3, 1.7, -2.2})
        CHECK(std::abs(p.eval(w) - std::conj(haar.psi_hat_conj(w))) < 1e-14);
    // leading series coefficients i/4 and 1/8
    CHECK(std::abs(p.coeffs[1] - cplx{0.0, 0.25}) < 1e-15);
    CHECK(std::abs(p.coeffs[2] - cplx{0.125, 0.0}) < 1e-15);
    CHECK(std::abs(p.coeffs_neg[1] - std::conj(p.coeffs[1])) < 1e-15);
    // series matches the evaluator near the origin
    for (double w : {0.05, 0.02}) {
        cplx series{};
        for (int s = 0; s < 12; ++s) series += p.coeffs[s] * std::pow(w, s);
        CHECK(std::abs(series - p.eval(w)) < 1e-14);
    }
}

TEST_CASE("origin expansion order: residual scales like the first omitted power") {
    for (const char* name : {"gauss:1", "gauss:0.5", "rational:1",
                             "haar-admissible:0.5", "haar-self"}) {
        FreqProfile p = make_profile(name);
        for (int n = 1; n <= 5; ++n) {
            int s_next = -1;
            for (int s = n; s < static_cast<int>(p.coeffs.size()); ++s)
                if (std::abs(p.coeffs[s]) > 0.0) { s_next = s; break; }
            REQUIRE(s_next > 0);
            double rmin = 1e300, rmax = 0.0;
            for (double w : {0.1, 0.03, 0.01}) {
                cplx partial{};
                for (int s = 0; s < n; ++s)
                    partial += p.coeffs[s] * std::pow(w, s + p.lambda - 1.0);
                const double ratio = std::abs(p.eval(w) - partial) /
                                     std::pow(w, s_next + p.lambda - 1.0);
                rmin = std::min(rmin, ratio);
                rmax = std::max(rmax, ratio);
            }
            INFO(name, " n=", n);
            CHECK(rmax < 10.0 * rmin);
        }
    }
}

TEST_CASE("decay metadata is truthful on [1, 1e4]") {
    for (const char* name : {"gauss:1", "gauss:0.5", "rational:0.5", "haar-self"}) {
        FreqProfile p = make_profile(name);
        for (int k = 0; k <= 16; ++k) {
            const double w = std::pow(10.0, 4.0 * k / 16.0);
            const double mag = std::abs(p.eval(w));
            if (p.decay_class == FreqProfile::Decay::gaussian)
                CHECK(mag <=
                      1.01 * std::pow(w, p.lambda - 1.0) * std::exp(-w * w));
            else
                CHECK(mag <= 4.0 * std::pow(w, -p.poly_order));
        }
    }
}

TEST_CASE("shift_coeffs: anchors") {
    FreqProfile p = make_profile("gauss:1");
    ShiftedCoeffs d0 = shift_coeffs(p, 0.0, 6);
    for (int s = 0; s < 6; ++s) CHECK(d0.d[s] == p.coeffs[s]);

    // c = (1,1,1), b = 1: d = (1, 1+i, 0.5+i)
    ShiftedCoeffs d1 =
        shift_coeffs(custom_profile({{1, 0}, {1, 0}, {1, 0}}), 1.0, 3);
    CHECK(std::abs(d1.d[0] - cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(d1.d[1] - cplx{1.0, 1.0}) < 1e-15);
    CHECK(std::abs(d1.d[2] - cplx{0.5, 1.0}) < 1e-15);

    // c = (0,1), b = 2: d = (0, 1)
    ShiftedCoeffs d2 = shift_coeffs(custom_profile({{0, 0}, {1, 0}}), 2.0, 2);
    CHECK(std::abs(d2.d[0]) == 0.0);
    CHECK(std::abs(d2.d[1] - cplx{1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(shift_coeffs(p, 1.0, 100), std::invalid_argument);
}

TEST_CASE("shift_coeffs equals the direct double sum on random inputs") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<cplx> c(8);
        for (auto& x : c) x = {u(rng), u(rng)};
        const double b = u(rng);
        ShiftedCoeffs got = shift_coeffs(custom_profile(c), b, 8);
        for (int s = 0; s < 8; ++s) {
            cplx want{};
            for (int r = 0; r <= s; ++r) {
                cplx pw{1.0, 0.0};
                double fact = 1.0;
                for (int q = 1; q <= r; ++q) {
                    pw *= cplx{0.0, b};
                    fact *= q;
                }
                want += pw / fact * c[s - r];
            }
            CHECK(std::abs(got.d[s] - want) < 1e-13);
        }
    }
}

TEST_CASE("d_s are the Taylor coefficients of e^{ibw} (series/w^{lambda-1})") {
    FreqProfile p = make_profile("gauss:1");
    // node radius per order, balancing the O(r^{s+1}) truncation against the
    // divided-difference rounding floor eps/r^s
    const double radius[5] = {1e-10, 1e-5, 1e-3, 8e-3, 2.5e-2};
    for (double b : {0.0, 1.0, -2.5}) {
        ShiftedCoeffs d = shift_coeffs(p, b, 5);
        auto fn = [&](cplx w) -> cplx {
            cplx poly{};
            cplx pw{1.0, 0.0};
            for (int s = 0; s < 12; ++s, pw *= w) poly += p.coeffs[s] * pw;
            return std::exp(cplx{0.0, 1.0} * b * w) * poly;
        };
        for (int s = 0; s < 5; ++s) {
            const cplx dd = divided_difference(fn, s, radius[s]);
            CHECK(std::abs(dd - d.d[s]) < 1e-8 * std::max(1.0, std::abs(d.d[s])));
        }
    }
}

TEST_CASE("reflected shift uses -b over the reflected coefficients") {
    FreqProfile p = make_profile("gauss:1");
    ShiftedCoeffs fwd = shift_coeffs(p, 1.5, 6);
    ShiftedCoeffs ref = shift_coeffs_reflected(p, 1.5, 6);
    for (int s = 0; s < 6; ++s)
        CHECK(std::abs(ref.d[s] - std::conj(fwd.d[s])) < 1e-14);
}

TEST_CASE("hypothesis checks: worked examples") {
    WaveletSpec mexhat = WaveletSpec::mexican_hat();
    WaveletSpec morlet = WaveletSpec::morlet(2.0);
    WaveletSpec haar = WaveletSpec::haar();

    CHECK(check_hypotheses(make_profile("gauss:1"), mexhat, 2).all_passed());
    CHECK(check_hypotheses(make_profile("rational:1"), morlet, 0).all_passed());
    CHECK(check_hypotheses(make_profile("zero"), haar, 1).all_passed());
    CHECK(check_hypotheses(make_profile("haar-admissible:0.5"), haar, 2)
              .all_passed());
    CHECK_THROWS_AS(check_hypotheses(make_profile("gauss:1"), mexhat, -1),
                    std::invalid_argument);
}
