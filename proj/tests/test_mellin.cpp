#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wasym/mellin.hpp"
#include "wasym/special_functions.hpp"

using namespace wasym;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt_2pi = 2.5066282746310005;

MellinKernel morlet_kernel(double w0, bool reflected = false) {
    MellinKernel k;
    k.f = [w0, reflected](double t) -> cplx {
        const double d = reflected ? t + w0 : t - w0;
        return {sqrt_2pi * std::exp(-0.5 * d * d), 0.0};
    };
    k.origin_power = 0.0;
    k.cutoff = w0 + 14.0;
    return k;
}

MellinKernel mexican_kernel() {
    MellinKernel k;
    k.f = [](double t) -> cplx {
        return {sqrt_2pi * t * t * std::exp(-0.5 * t * t), 0.0};
    };
    k.origin_power = 2.0;
    k.cutoff = 14.0;
    return k;
}

MellinKernel osc_kernel(double c) {
    MellinKernel k;
    k.f = [c](double t) -> cplx { return std::exp(cplx{0.0, c * t}); };
    k.origin_power = 0.0;
    k.osc_freq = std::abs(c);
    return k;
}

double relerr(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

} // namespace

TEST_CASE("unit_phase is exact at integer and half-integer arguments") {
    CHECK(unit_phase(0.0) == cplx{1.0, 0.0});
    CHECK(unit_phase(1.0) == cplx{-1.0, 0.0});
    CHECK(unit_phase(2.0) == cplx{1.0, 0.0});
    CHECK(unit_phase(17.0) == cplx{-1.0, 0.0});
    CHECK(unit_phase(0.5) == cplx{0.0, 1.0});
    CHECK(unit_phase(3.5) == cplx{0.0, -1.0});
    CHECK(std::abs(unit_phase(0.25) - cplx{std::cos(0.25 * pi), std::sin(0.25 * pi)}) < 1e-16);
}

TEST_CASE("mellin_regularized: absolutely convergent anchor h = e^{-t}") {
    MellinKernel k;
    k.f = [](double t) -> cplx { return {std::exp(-t), 0.0}; };
    k.cutoff = 45.0;
    MellinValue v = mellin_regularized(k, cplx{2.0, 0.0}, 1.0, kDefaultEps);
    CHECK(relerr(v.value, {1.0, 0.0}) < 1e-9);  // Gamma(2) = 1
    CHECK(v.method == MellinValue::Method::regularized_quadrature);
}

TEST_CASE("mellin_regularized: oscillatory anchors M[e^{it}; z]") {
    MellinValue v1 = mellin_regularized(osc_kernel(1.0), cplx{1.0, 0.0}, 1.0,
                                        kDefaultEps);
    CHECK(std::abs(v1.value - cplx{0.0, 1.0}) < 1e-7);

    // z = 0.7: e^{0.35 pi i} Gamma(0.7)
    MellinValue v2 = mellin_regularized(osc_kernel(1.0), cplx{0.7, 0.0}, 1.0,
                                        kDefaultEps);
    const cplx want{0.58930478915824840678, 1.15657577014647608794};
    CHECK(std::abs(v2.value - want) < 1e-6);
    CHECK(std::abs(v2.value - want) < 20.0 * std::max(v2.err_estimate, 1e-9));
}

TEST_CASE("mellin_regularized rejects bad inputs") {
    CHECK_THROWS_AS(mellin_regularized(osc_kernel(1.0), cplx{-0.5, 0.0}, 1.0,
                                       kDefaultEps),
                    std::domain_error);
    const double too_short[] = {1e-2, 1e-3};
    CHECK_THROWS_AS(mellin_regularized(osc_kernel(1.0), cplx{0.5, 0.0}, 1.0,
                                       too_short),
                    std::invalid_argument);
}

TEST_CASE("morlet closed forms: anchors") {
    // z=1, w0=0: sqrt(2pi) D_{-1}(0) = pi
    CHECK(relerr(morlet_mellin(1.0, 0.0).value, {pi, 0.0}) < 1e-11);
    // z=1, w0=2: pi (2 - erfc(sqrt 2)); reflected: pi erfc(sqrt 2)
    const double e2 = wasym::erfc(std::sqrt(2.0));
    CHECK(relerr(morlet_mellin(1.0, 2.0).value, {pi * (2.0 - e2), 0.0}) < 1e-10);
    CHECK(relerr(morlet_mellin_reflected(1.0, 2.0).value, {pi * e2, 0.0}) <
          1e-10);
    CHECK(relerr(morlet_mellin_reflected(1.0, 0.0).value, {pi, 0.0}) < 1e-11);
    // independent high-precision value for z=0.5, w0=1
    CHECK(relerr(morlet_mellin(0.5, 1.0).value, {6.33338216724606508458, 0.0}) <
          1e-10);
    CHECK_THROWS_AS(morlet_mellin(0.0, 1.0), std::domain_error);
}

TEST_CASE("mexican closed forms: anchors") {
    CHECK(relerr(mexican_mellin(1.0).value, {pi, 0.0}) < 1e-12);
    CHECK(relerr(mexican_mellin(2.0).value, {2.0 * sqrt_2pi, 0.0}) < 1e-12);
}

TEST_CASE("haar component values and strip guard") {
    // z=0.5, c=1: e^{i pi/4} Gamma(1/2) = (1+i) sqrt(pi/2)
    const double sp2 = std::sqrt(0.5 * pi);
    CHECK(std::abs(haar_mellin_component(0.5, 1.0).value - cplx{sp2, sp2}) <
          1e-12);
    // z=0.5, c=1/2: 2^{0.5} e^{i pi/4} Gamma(1/2)
    CHECK(std::abs(haar_mellin_component(0.5, 0.5).value -
                   std::sqrt(2.0) * cplx{sp2, sp2}) < 1e-12);
    // z=0.5, c=-1: conjugate
    CHECK(std::abs(haar_mellin_component(0.5, -1.0).value - cplx{sp2, -sp2}) <
          1e-12);

    CHECK_THROWS_AS(haar_mellin_component(1.2, 1.0), std::domain_error);
    CHECK_NOTHROW(haar_mellin_component(1.2, 1.0, true));
    CHECK_THROWS_AS(haar_mellin(0.8), std::domain_error);

    // combined kernel value assembles from the components:
    // M[h; z] = i (M[e^{it}; z-1] - 2 M[e^{it/2}; z-1])
    for (double z : {1.3, 1.5, 1.8}) {
        const cplx lhs = haar_mellin(z).value;
        const cplx rhs = cplx{0.0, 1.0} *
                         (haar_mellin_component(z - 1.0, 1.0).value -
                          2.0 * haar_mellin_component(z - 1.0, 0.5).value);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("closed forms agree with the regularized quadrature") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> zs(0.3, 6.0), zh(1.1, 5.5),
        zc(0.05, 0.95);

    for (int i = 0; i < 6; ++i) {
        const double z = zs(rng);
        MellinValue reg =
            mellin_regularized(morlet_kernel(2.0), cplx{z, 0.0}, 1.0, kDefaultEps);
        CHECK(relerr(morlet_mellin(z, 2.0).value, reg.value) < 1e-6);

        MellinValue regr = mellin_regularized(morlet_kernel(2.0, true),
                                              cplx{z, 0.0}, 1.0, kDefaultEps);
        CHECK(relerr(morlet_mellin_reflected(z, 2.0).value, regr.value) < 1e-6);

        MellinValue regm =
            mellin_regularized(mexican_kernel(), cplx{z, 0.0}, 1.0, kDefaultEps);
        CHECK(relerr(mexican_mellin(z).value, regm.value) < 1e-8);
    }
    // Haar components on their conditional-convergence strip 0 < z < 1; the
    // combined z > 1 closed forms are analytic continuations whose validation
    // is the oracle slope suite, not a damped-integral limit.
    for (int i = 0; i < 6; ++i) {
        const double z = zc(rng);
        for (double c : {1.0, 0.5, -1.0, -0.5}) {
            MellinValue reg = mellin_regularized(osc_kernel(c), cplx{z, 0.0},
                                                 1.0, kDefaultEps);
            CHECK(relerr(haar_mellin_component(z, c).value, reg.value) < 1e-6);
        }
    }
    (void)zh;
}

TEST_CASE("mellin_regularized is linear") {
    MellinKernel g1 = morlet_kernel(1.0), g2 = mexican_kernel();
    MellinKernel mix;
    const cplx alpha{1.7, -0.4};
    mix.f = [&, alpha](double t) { return alpha * g1.f(t) + g2.f(t); };
    mix.cutoff = 16.0;
    const cplx z{1.3, 0.0};
    MellinValue a = mellin_regularized(g1, z, 1.0, kDefaultEps);
    MellinValue b = mellin_regularized(g2, z, 1.0, kDefaultEps);
    MellinValue m = mellin_regularized(mix, z, 1.0, kDefaultEps);
    CHECK(std::abs(m.value - (alpha * a.value + b.value)) <
          1e-8 * std::abs(m.value));
}

TEST_CASE("scaling law M[h(c.); z] = c^{-z} M[h; z] for the Gaussian kernel") {
    const double c = 1.9;
    MellinKernel g, gc;
    g.f = [](double t) -> cplx { return {std::exp(-t * t), 0.0}; };
    g.cutoff = 10.0;
    gc.f = [c](double t) -> cplx { return {std::exp(-c * c * t * t), 0.0}; };
    gc.cutoff = 10.0;
    for (double z : {0.5, 1.0, 2.5}) {
        MellinValue a = mellin_regularized(g, cplx{z, 0.0}, 1.0, kDefaultEps);
        MellinValue b = mellin_regularized(gc, cplx{z, 0.0}, 1.0, kDefaultEps);
        CHECK(std::abs(b.value - std::pow(c, -z) * a.value) <
              1e-8 * std::abs(a.value));
    }
}
