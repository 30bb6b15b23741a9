#pragma once

// The three mother wavelets, represented through conj(psi_hat) which is all
// the large-a machinery consumes.  Fourier convention:
// psi_hat(w) = int e^{-itw} psi(t) dt.

#include <complex>
#include <string>

namespace wasym {

using cplx = std::complex<double>;

struct TailSpec {
    double tau = 0.0;   // 0 marks super-exponential decay (no oscillatory tail)
    double p = 1.0;
    double beta = 1.0;
};

class WaveletSpec {
public:
    enum class Kind { morlet, mexican_hat, haar };

    static WaveletSpec morlet(double omega0);
    static WaveletSpec mexican_hat();
    static WaveletSpec haar();

    Kind kind() const { return kind_; }
    double omega0() const { return omega0_; }

    // conj(psi_hat)(w):
    //   morlet       sqrt(2pi) e^{-(w-w0)^2/2}
    //   mexican hat  sqrt(2pi) w^2 e^{-w^2/2}
    //   haar         (i/w)(1 - 2 e^{iw/2} + e^{iw}),  0 at w = 0
    cplx psi_hat_conj(double w) const;

    double rho() const;       // conj(psi_hat)(w) = O(w^rho) at the origin
    TailSpec tail() const;

    // Quadrature hints: Gaussian kernels localise at kernel_center() with O(1)
    // width; the Haar kernel oscillates with common period 4pi and decays 1/w.
    bool kernel_localized() const;
    double kernel_center() const;
    double kernel_period() const;

    std::string id() const;   // "morlet:2", "mexican", "haar"

private:
    Kind kind_;
    double omega0_ = 0.0;
};

// Parses "morlet:OMEGA0" | "mexican" | "haar".
WaveletSpec make_wavelet(const std::string& spec);

} // namespace wasym
