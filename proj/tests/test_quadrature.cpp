#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wasym/quadrature.hpp"

using namespace wasym::quad;
using wasym::quad::cplx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("gauss-kronrod handles smooth integrands") {
    auto sq = [](double x) -> cplx { return {x * x, 0.0}; };
    Result r = gk_adaptive(sq, 0.0, 1.0, 1e-14, 1e-14, 1000);
    CHECK(r.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto s = [](double x) -> cplx { return {std::sin(x), 0.0}; };
    r = gk_adaptive(s, 0.0, pi, 1e-13, 1e-13, 1000);
    CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("gauss-kronrod integrates an endpoint singularity by bisection") {
    auto f = [](double x) -> cplx { return {1.0 / std::sqrt(x), 0.0}; };
    Result r = gk_adaptive(f, 0.0, 1.0, 1e-11, 1e-11, 200000);
    CHECK(std::abs(r.value.real() - 2.0) < 1e-9);
}

TEST_CASE("tanh-sinh nails endpoint singularities") {
    auto f = [](double x) -> cplx { return {1.0 / std::sqrt(x), 0.0}; };
    Result r = tanh_sinh(f, 0.0, 1.0, 1e-13, 1e-13);
    CHECK(std::abs(r.value.real() - 2.0) < 1e-12);

    auto g = [](double x) -> cplx { return {std::log(1.0 / x), 0.0}; };
    r = tanh_sinh(g, 0.0, 1.0, 1e-13, 1e-13);
    CHECK(std::abs(r.value.real() - 1.0) < 1e-12);
}

TEST_CASE("both rules agree on an oscillatory segment integral") {
    auto f = [](double x) -> cplx {
        return std::exp(cplx{0.0, 3.0 * x}) / (1.0 + x * x);
    };
    std::vector<double> knots;
    for (int i = 0; i <= 24; ++i) knots.push_back(i * 0.5);
    Settings s;
    Result a = integrate_segments(f, knots, s, Rule::gauss_kronrod, Exec::serial);
    Result b = integrate_segments(f, knots, s, Rule::double_exponential,
                                  Exec::serial);
    CHECK(std::abs(a.value - b.value) < 1e-11);
}

TEST_CASE("openmp segment loop reproduces the serial reference bitwise") {
    auto f = [](double x) -> cplx {
        return std::exp(cplx{0.0, 5.0 * x}) * std::exp(-0.01 * x);
    };
    std::vector<double> knots;
    for (int i = 0; i <= 400; ++i) knots.push_back(i * (0.5 * pi / 5.0));
    Settings s;
    Result ser = integrate_segments(f, knots, s, Rule::gauss_kronrod, Exec::serial);
    Result par = integrate_segments(f, knots, s, Rule::gauss_kronrod, Exec::openmp);
    CHECK(ser.value.real() == par.value.real());
    CHECK(ser.value.imag() == par.value.imag());

    Result again = integrate_segments(f, knots, s, Rule::gauss_kronrod,
                                      Exec::openmp);
    CHECK(par.value.real() == again.value.real());
    CHECK(par.value.imag() == again.value.imag());
}

TEST_CASE("levin u-transform accelerates alternating and power-law series") {
    // sum (-1)^{k+1}/k = ln 2
    LevinU alt(64);
    cplx s{};
    cplx est{};
    for (int k = 1; k <= 24; ++k) {
        const cplx a{(k % 2 ? 1.0 : -1.0) / k, 0.0};
        s += a;
        est = alt.add(s, a);
    }
    CHECK(std::abs(est.real() - std::log(2.0)) < 1e-12);

    // sum 1/k^2 = pi^2/6 (monotone power-law tail); estimates degrade in
    // floating point once rounding dominates, so take the stabilised value
    LevinU mono(64);
    s = {};
    for (int k = 1; k <= 12; ++k) {
        const cplx a{1.0 / (static_cast<double>(k) * k), 0.0};
        s += a;
        est = mono.add(s, a);
    }
    CHECK(std::abs(est.real() - pi * pi / 6.0) < 1e-8);
}

TEST_CASE("periodic tail acceleration reproduces int_0^inf sin(t)/t") {
    auto f = [](double t) -> cplx { return {std::sin(t) / t, 0.0}; };
    Settings s;
    s.abs_tol = 1e-12;
    Result head = gk_adaptive(f, 1e-12, 2.0 * pi, 1e-13, 1e-13, 10000);
    Result tail = integrate_periodic_tail(f, 2.0 * pi, 2.0 * pi, s,
                                          Rule::gauss_kronrod);
    CHECK(std::abs(head.value.real() + tail.value.real() - 0.5 * pi) < 5e-10);
    CHECK(std::abs(head.value.real() + tail.value.real() - 0.5 * pi) <
          10.0 * (head.err + tail.err));
}

TEST_CASE("subdivision limit raises a diagnostic error") {
    auto f = [](double x) -> cplx { return {1.0 / std::sqrt(x), 0.0}; };
    CHECK_THROWS_AS(gk_adaptive(f, 0.0, 1.0, 1e-13, 1e-13, 4), non_convergence);
}
