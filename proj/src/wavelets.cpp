#include "wasym/wavelets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wasym {

namespace {
constexpr double sqrt_2pi = 2.5066282746310005;
}

WaveletSpec WaveletSpec::morlet(double omega0) {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("morlet: omega0 must be > 0");
    WaveletSpec w;
    w.kind_ = Kind::morlet;
    w.omega0_ = omega0;
    return w;
}

WaveletSpec WaveletSpec::mexican_hat() {
    WaveletSpec w;
    w.kind_ = Kind::mexican_hat;
    return w;
}

WaveletSpec WaveletSpec::haar() {
    WaveletSpec w;
    w.kind_ = Kind::haar;
    return w;
}

cplx WaveletSpec::psi_hat_conj(double w) const {
    switch (kind_) {
        case Kind::morlet: {
            const double d = w - omega0_;
            return {sqrt_2pi * std::exp(-0.5 * d * d), 0.0};
        }
        case Kind::mexican_hat:
            return {sqrt_2pi * w * w * std::exp(-0.5 * w * w), 0.0};
        case Kind::haar: {
            if (w == 0.0) return {0.0, 0.0};
            const cplx i{0.0, 1.0};
            return (i / w) * (1.0 - 2.0 * std::exp(i * (0.5 * w)) + std::exp(i * w));
        }
    }
    return {};
}

double WaveletSpec::rho() const {
    switch (kind_) {
        case Kind::morlet: return 0.0;
        case Kind::mexican_hat: return 2.0;
        case Kind::haar: return 1.0;
    }
    return 0.0;
}

TailSpec WaveletSpec::tail() const {
    if (kind_ == Kind::haar) return {1.0, 1.0, 1.0};
    return {0.0, 1.0, 1.0};  // Gaussian decay, no oscillatory tail
}

bool WaveletSpec::kernel_localized() const { return kind_ != Kind::haar; }

double WaveletSpec::kernel_center() const {
    return kind_ == Kind::morlet ? omega0_ : 0.0;
}

double WaveletSpec::kernel_period() const {
    return kind_ == Kind::haar ? 4.0 * std::numbers::pi : 0.0;
}

std::string WaveletSpec::id() const {
    switch (kind_) {
        case Kind::morlet: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "morlet:%g", omega0_);
            return buf;
        }
        case Kind::mexican_hat: return "mexican";
        case Kind::haar: return "haar";
    }
    return {};
}

WaveletSpec make_wavelet(const std::string& spec) {
    if (spec == "mexican") return WaveletSpec::mexican_hat();
    if (spec == "haar") return WaveletSpec::haar();
    if (spec.rfind("morlet:", 0) == 0) {
        const double w0 = std::stod(spec.substr(7));
        return WaveletSpec::morlet(w0);
    }
    throw std::invalid_argument("unknown wavelet spec '" + spec +
                                "' (expected morlet:OMEGA0 | mexican | haar)");
}

} // namespace wasym
