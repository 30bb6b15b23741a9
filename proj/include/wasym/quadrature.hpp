#pragma once

// Adaptive quadrature kernels shared by the oracle, the Mellin evaluator and
// the special-function integrals.  Two independent rule families are provided:
//   Rule::gauss_kronrod     7/15 Gauss-Kronrod pairs with bisection
//   Rule::double_exponential tanh-sinh with node doubling
// Segment lists are integrated independently and reduced in index order, so a
// run is bit-identical whether the segment loop executes serially or under
// OpenMP.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wasym::quad {

using cplx = std::complex<double>;

struct Settings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 200000;

    enum class Cutoff { fixed, decay_based } cutoff = Cutoff::decay_based;
    double omega_max = 0.0;        // Cutoff::fixed
    double envelope_tol = 1e-16;   // Cutoff::decay_based

    enum class Oscillation { subdivide_per_period, none } oscillation =
        Oscillation::subdivide_per_period;
};

enum class Rule { gauss_kronrod, double_exponential };
enum class Exec { serial, openmp };

struct Result {
    cplx value{0.0, 0.0};
    double err = 0.0;
    long evals = 0;
    int subdivisions = 0;
};

class non_convergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Kronrod-15 nodes with embedded Gauss-7 weights, {x, gauss w, kronrod w}.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
};

template <class F>
cplx gk15_panel(F&& f, double lo, double hi, double& err) {
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    cplx fc = f(mid);
    cplx k15 = gk15[0][2] * fc;
    cplx g7 = gk15[0][1] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * gk15[i][0];
        cplx fs = f(mid + dx) + f(mid - dx);
        k15 += gk15[i][2] * fs;
        g7 += gk15[i][1] * fs;
    }
    k15 *= h;
    g7 *= h;
    err = std::abs(k15 - g7);
    return k15;
}

} // namespace detail

// Adaptive Gauss-Kronrod bisection on one interval.
template <class F>
Result gk_adaptive(F&& f, double lo, double hi, double abs_tol, double rel_tol,
                   int max_subdiv) {
    Result out;
    struct Iv { double lo, hi; };
    std::vector<Iv> stack{{lo, hi}};
    stack.reserve(64);
    while (!stack.empty()) {
        const Iv iv = stack.back();
        stack.pop_back();
        double e;
        cplx v = detail::gk15_panel(f, iv.lo, iv.hi, e);
        out.evals += 15;
        if (e <= abs_tol + rel_tol * std::abs(v) ||
            (iv.hi - iv.lo) < 1e-15 * (std::abs(iv.lo) + std::abs(iv.hi))) {
            out.value += v;
            out.err += e;
            continue;
        }
        if (++out.subdivisions > max_subdiv)
            throw non_convergence(
                "gk_adaptive: subdivision limit " + std::to_string(max_subdiv) +
                " reached on [" + std::to_string(iv.lo) + ", " +
                std::to_string(iv.hi) + "], last panel error " + std::to_string(e));
        const double mid = 0.5 * (iv.lo + iv.hi);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return out;
}

// tanh-sinh rule on [lo, hi]; doubles the node density per level until two
// successive levels agree.  Node positions are computed as distances from the
// nearest endpoint so integrable endpoint singularities are resolved down to
// denormal range instead of collapsing onto the endpoint.
template <class F>
Result tanh_sinh(F&& f, double lo, double hi, double abs_tol, double rel_tol,
                 int max_level = 12) {
    constexpr double t_max = 6.0;
    const double half = 0.5 * (hi - lo);
    constexpr double piov2 = 1.5707963267948966;

    Result out;
    auto node = [&](double t, cplx& acc) {
        const double s = piov2 * std::sinh(t);
        const double as = std::abs(s);
        // w = (pi/2) cosh(t) / cosh^2(s), asymptotic form once cosh^2 overflows
        const double w = as > 300.0
                             ? 2.0 * piov2 * std::cosh(t) * std::exp(-2.0 * as)
                             : piov2 * std::cosh(t) /
                                   (std::cosh(s) * std::cosh(s));
        // distance of the node from its endpoint: half * (1 - |tanh(s)|)
        const double dist = 2.0 * half / (1.0 + std::exp(2.0 * as));
        const double xx = t >= 0.0 ? hi - dist : lo + dist;
        if (xx <= lo || xx >= hi) return;  // endpoint unreachable at this width
        acc += w * f(xx);
        ++out.evals;
    };

    double h = 1.0;
    cplx sum{0.0, 0.0};
    node(0.0, sum);
    for (double t = h; t <= t_max; t += h) {
        node(t, sum);
        node(-t, sum);
    }
    cplx prev = sum * (h * half);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            node(t, sum);
            node(-t, sum);
        }
        cplx cur = sum * (h * half);
        out.err = std::abs(cur - prev);
        out.subdivisions = level;
        prev = cur;
        if (level >= 3 && out.err <= abs_tol + rel_tol * std::abs(cur)) break;
    }
    out.value = prev;
    return out;
}

// Integrates f over consecutive segments given by `knots`, independently per
// segment, then reduces in index order.  Exec::openmp parallelises the segment
// loop; the reduction order (and hence the bits of the result) is unchanged.
template <class F>
Result integrate_segments(F&& f, const std::vector<double>& knots,
                          const Settings& s, Rule rule, Exec exec) {
    const int n = static_cast<int>(knots.size()) - 1;
    if (n < 1) return {};
    std::vector<Result> part(n);
    const double seg_abs = s.abs_tol / static_cast<double>(n);
    const int seg_subdiv = std::max(64, s.max_subdivisions / n);
    std::string failure;

#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::openmp)
    for (int i = 0; i < n; ++i) {
        try {
            if (rule == Rule::gauss_kronrod)
                part[i] = gk_adaptive(f, knots[i], knots[i + 1], seg_abs,
                                      0.5 * s.rel_tol, seg_subdiv);
            else
                part[i] = tanh_sinh(f, knots[i], knots[i + 1], seg_abs,
                                    0.5 * s.rel_tol);
        } catch (const std::exception& e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) throw non_convergence(failure);

    Result out;
    for (const Result& p : part) {
        out.value += p.value;
        out.err += p.err;
        out.evals += p.evals;
        out.subdivisions += p.subdivisions;
    }
    return out;
}

// Levin u-transform over a sequence of partial sums S_k with increments a_k.
// Remainder estimates are w_k = (beta + k) a_k.
class LevinU {
public:
    explicit LevinU(int capacity) { num_.reserve(capacity); den_.reserve(capacity); }

    cplx add(cplx partial_sum, cplx increment) {
        const double beta = 1.0;
        const int n = static_cast<int>(num_.size());
        const cplx omega = (beta + n) * increment;
        if (std::abs(omega) < 1e-300) return last_;  // sequence already flat
        double term = 1.0 / (beta + n);
        den_.push_back(term / omega);
        num_.push_back(partial_sum * den_.back());
        if (n > 0) {
            const double ratio = (beta + n - 1) * term;
            for (int j = 1; j <= n; ++j) {
                const double fact = (n - j + beta) * term;
                den_[n - j] = den_[n - j + 1] - fact * den_[n - j];
                num_[n - j] = num_[n - j + 1] - fact * num_[n - j];
                term *= ratio;
            }
        }
        last_ = std::abs(den_[0]) > 1e-300 ? num_[0] / den_[0] : last_;
        return last_;
    }

    cplx value() const { return last_; }

private:
    std::vector<cplx> num_, den_;
    cplx last_{0.0, 0.0};
};

// Sums int_{t0}^{inf} f by integrating period-length blocks and accelerating
// the sequence of partial sums with the Levin u-transform.  Handles both
// sign-rotating (oscillatory) and monotone power-law tails.  The transform's
// estimates degrade in floating point once rounding dominates, so the best
// estimate is tracked and returned with its stabilised delta as the error.
template <class F>
Result integrate_periodic_tail(F&& f, double t0, double period,
                               const Settings& s, Rule rule,
                               int max_periods = 400) {
    LevinU acc(max_periods + 1);
    Result out;
    cplx partial{0.0, 0.0};
    cplx est{0.0, 0.0}, best{0.0, 0.0};
    double delta = std::numeric_limits<double>::infinity();
    double best_delta = delta;
    int quiet = 0, worse = 0;
    for (int k = 0; k < max_periods; ++k) {
        const double lo = t0 + k * period;
        const double hi = lo + period;
        Result blk =
            rule == Rule::gauss_kronrod
                ? gk_adaptive(f, lo, hi, 0.05 * s.abs_tol, 0.1 * s.rel_tol, 4000)
                : tanh_sinh(f, lo, hi, 0.05 * s.abs_tol, 0.1 * s.rel_tol);
        out.evals += blk.evals;
        out.subdivisions += 1;
        partial += blk.value;
        cplx next = acc.add(partial, blk.value);
        delta = std::abs(next - est);
        est = next;
        if (k >= 5) {
            if (delta < best_delta) {
                best_delta = delta;
                best = est;
                worse = 0;
            } else if (++worse >= 8) {
                break;  // rounding has taken over; best will not improve
            }
            if (delta <= 0.5 * (s.abs_tol + s.rel_tol * std::abs(est))) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
    }
    if (!std::isfinite(std::abs(best)) ||
        best_delta > 0.1 * std::abs(best) + s.abs_tol)
        throw non_convergence(
            "integrate_periodic_tail: no significant digits after " +
            std::to_string(out.subdivisions) + " periods (best delta " +
            std::to_string(best_delta) + ")");
    out.value = best;
    out.err = best_delta;
    return out;
}

} // namespace wasym::quad
