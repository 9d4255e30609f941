#pragma once

#include <complex>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace zipsim::dsp {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Real-to-complex FFT of a fixed size, with owned aligned buffers.
/// FFTW plan creation is not thread safe; executing distinct plans is.
/// Plans use FFTW_ESTIMATE so the chosen algorithm (and hence rounding)
/// is reproducible across runs.
class RealFft {
public:
    explicit RealFft(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("RealFft: zero size");
        real_ = fftw_alloc_real(n);
        spec_ = fftw_alloc_complex(n / 2 + 1);
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_, spec_, FFTW_ESTIMATE);
        inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec_, real_, FFTW_ESTIMATE);
        if (!fwd_ || !inv_) throw std::runtime_error("RealFft: planner failed");
    }

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    ~RealFft() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
        fftw_free(real_);
        fftw_free(spec_);
    }

    std::size_t size() const { return n_; }
    std::size_t bins() const { return n_ / 2 + 1; }

    /// in: n real samples (zero-padded by caller), out: n/2+1 complex bins.
    void forward(const double* in, std::complex<double>* out) {
        for (std::size_t i = 0; i < n_; ++i) real_[i] = in[i];
        fftw_execute(fwd_);
        for (std::size_t i = 0; i < bins(); ++i)
            out[i] = std::complex<double>(spec_[i][0], spec_[i][1]);
    }

    /// Inverse transform, normalized by 1/n (round trip is identity).
    void inverse(const std::complex<double>* in, double* out) {
        for (std::size_t i = 0; i < bins(); ++i) {
            spec_[i][0] = in[i].real();
            spec_[i][1] = in[i].imag();
        }
        fftw_execute(inv_);
        const double scale = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
    }

private:
    static std::mutex& planner_mutex() {
        static std::mutex m;
        return m;
    }

    std::size_t n_;
    double* real_;
    fftw_complex* spec_;
    fftw_plan fwd_;
    fftw_plan inv_;
};

/// Power spectrum (|bin|^2) of an arbitrary-length real signal, zero-padded
/// to the next power of two. Convenience for test oracles and inspection.
inline std::vector<double> power_spectrum(const std::vector<double>& x) {
    const std::size_t n = next_pow2(x.size());
    RealFft fft(n);
    std::vector<double> padded(n, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) padded[i] = x[i];
    std::vector<std::complex<double>> spec(fft.bins());
    fft.forward(padded.data(), spec.data());
    std::vector<double> power(fft.bins());
    for (std::size_t i = 0; i < spec.size(); ++i) power[i] = std::norm(spec[i]);
    return power;
}

} // namespace zipsim::dsp
