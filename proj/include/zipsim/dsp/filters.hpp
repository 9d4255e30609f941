#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zipsim::dsp {

/// Second-order IIR section, direct form II transposed.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
    double s1 = 0.0, s2 = 0.0;

    double process(double x) {
        const double y = b0 * x + s1;
        s1 = b1 * x - a1 * y + s2;
        s2 = b2 * x - a2 * y;
        return y;
    }

    void reset() { s1 = s2 = 0.0; }
};

using BiquadChain = std::vector<Biquad>;

inline void reset(BiquadChain& chain) {
    for (auto& s : chain) s.reset();
}

template <typename T>
void filter_inplace(BiquadChain& chain, std::vector<T>& x) {
    for (auto& v : x) {
        double y = static_cast<double>(v);
        for (auto& s : chain) y = s.process(y);
        v = static_cast<T>(y);
    }
}

inline double chain_gain_at(const BiquadChain& chain, double freq_hz, double fs) {
    const std::complex<double> j(0.0, 1.0);
    const double w = 2.0 * std::numbers::pi * freq_hz / fs;
    const std::complex<double> z1 = std::exp(-j * w);
    const std::complex<double> z2 = z1 * z1;
    std::complex<double> h(1.0, 0.0);
    for (const auto& s : chain) {
        h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
    }
    return std::abs(h);
}

namespace detail {

inline std::vector<std::complex<double>> butter_prototype_poles(int order) {
    std::vector<std::complex<double>> poles;
    for (int k = 0; k < order; ++k) {
        const double theta =
            std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        poles.emplace_back(std::cos(theta), std::sin(theta));
    }
    return poles;
}

inline std::complex<double> bilinear(std::complex<double> s, double fs2) {
    return (fs2 + s) / (fs2 - s);
}

/// Build one biquad from a conjugate digital pole pair and two real zeros.
inline Biquad section_from(const std::complex<double>& pole, double zero1, double zero2) {
    Biquad s;
    s.a1 = -2.0 * pole.real();
    s.a2 = std::norm(pole);
    s.b0 = 1.0;
    s.b1 = -(zero1 + zero2);
    s.b2 = zero1 * zero2;
    return s;
}

} // namespace detail

/// Butterworth low-pass of even order (order/2 biquads), bilinear transform
/// with cutoff pre-warping. Normalized to unit DC gain.
inline BiquadChain butter_lowpass(int order, double cutoff_hz, double fs) {
    if (order <= 0 || order % 2 != 0) throw std::invalid_argument("butter_lowpass: even order required");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= fs / 2.0)
        throw std::invalid_argument("butter_lowpass: cutoff out of range");
    const double fs2 = 2.0 * fs;
    const double wc = fs2 * std::tan(std::numbers::pi * cutoff_hz / fs);

    BiquadChain chain;
    const auto protos = detail::butter_prototype_poles(order);
    for (int k = 0; k < order / 2; ++k) {
        const auto pz = detail::bilinear(protos[k] * wc, fs2);
        chain.push_back(detail::section_from(pz, -1.0, -1.0));
    }
    const double g = chain_gain_at(chain, 0.0, fs);
    const double per = std::pow(1.0 / g, 1.0 / static_cast<double>(chain.size()));
    for (auto& s : chain) {
        s.b0 *= per;
        s.b1 *= per;
        s.b2 *= per;
    }
    return chain;
}

/// Butterworth band-pass built from a prototype of order `proto_order`
/// (total filter order 2 * proto_order; proto_order 2 gives a 4th-order
/// band-pass of two biquads). Normalized to unit gain at the geometric
/// center frequency.
inline BiquadChain butter_bandpass(int proto_order, double f1, double f2, double fs) {
    if (proto_order <= 0) throw std::invalid_argument("butter_bandpass: bad order");
    if (!(0.0 < f1 && f1 < f2 && f2 < fs / 2.0))
        throw std::invalid_argument("butter_bandpass: band out of range");
    const double fs2 = 2.0 * fs;
    const double w1 = fs2 * std::tan(std::numbers::pi * f1 / fs);
    const double w2 = fs2 * std::tan(std::numbers::pi * f2 / fs);
    const double w0sq = w1 * w2;
    const double bw = w2 - w1;

    // lp2bp: each prototype pole maps to a quadratic pair.
    std::vector<std::complex<double>> bp_poles;
    for (const auto& p : detail::butter_prototype_poles(proto_order)) {
        const std::complex<double> half = p * (bw / 2.0);
        const std::complex<double> disc = std::sqrt(half * half - w0sq);
        bp_poles.push_back(half + disc);
        bp_poles.push_back(half - disc);
    }

    // Pair each digital pole with numerator (z-1)(z+1); conjugates are implied
    // by using one pole of each conjugate pair per section.
    BiquadChain chain;
    for (const auto& sp : bp_poles) {
        if (sp.imag() <= 0.0) continue;  // keep upper-half-plane representative
        chain.push_back(detail::section_from(detail::bilinear(sp, fs2), 1.0, -1.0));
    }
    if (chain.size() * 2 != bp_poles.size())
        throw std::runtime_error("butter_bandpass: band too wide for conjugate pairing");

    const double fc = std::sqrt(f1 * f2);
    const double g = chain_gain_at(chain, fc, fs);
    if (!(g > 0.0)) throw std::runtime_error("butter_bandpass: degenerate design");
    const double per = std::pow(1.0 / g, 1.0 / static_cast<double>(chain.size()));
    for (auto& s : chain) {
        s.b0 *= per;
        s.b1 *= per;
        s.b2 *= per;
    }
    return chain;
}

/// One-pole low-pass, y += a (x - y) with a = 1 - exp(-2 pi fc / fs).
struct OnePoleLp {
    double a = 1.0;
    double y = 0.0;

    OnePoleLp() = default;
    OnePoleLp(double cutoff_hz, double fs)
        : a(1.0 - std::exp(-2.0 * std::numbers::pi * cutoff_hz / fs)) {}

    double process(double x) {
        y += a * (x - y);
        return y;
    }
};

} // namespace zipsim::dsp
