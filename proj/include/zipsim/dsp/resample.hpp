#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "zipsim/core/types.hpp"
#include "zipsim/dsp/filters.hpp"

namespace zipsim::dsp {

/// Integer-factor decimation with an 8th-order Butterworth anti-alias
/// low-pass at 0.45 of the output Nyquist.
inline std::vector<double> decimate(const std::vector<double>& x, int factor, double fs) {
    if (factor <= 1) return x;
    const double out_rate = fs / factor;
    BiquadChain lp = butter_lowpass(8, 0.45 * out_rate, fs);
    std::vector<double> out;
    out.reserve(x.size() / static_cast<std::size_t>(factor) + 1);
    std::size_t phase = 0;
    for (double v : x) {
        for (auto& s : lp) v = s.process(v);
        if (phase == 0) out.push_back(v);
        phase = (phase + 1) % static_cast<std::size_t>(factor);
    }
    return out;
}

/// Adds amp * sin(2 pi f (t + start_offset)) to out via a phasor recurrence
/// (two multiply-adds per sample instead of a libm call).
inline void add_sine(std::vector<float>& out, std::size_t start, std::size_t count, double fs,
                     double freq, double amp, double start_phase = 0.0) {
    const double w = 2.0 * std::numbers::pi * freq / fs;
    double c = std::cos(start_phase);
    double s = std::sin(start_phase);
    const double cw = std::cos(w);
    const double sw = std::sin(w);
    const std::size_t end = std::min(out.size(), start + count);
    std::size_t since_renorm = 0;
    for (std::size_t i = start; i < end; ++i) {
        out[i] += static_cast<float>(amp * s);
        const double c2 = c * cw - s * sw;
        s = c * sw + s * cw;
        c = c2;
        if (++since_renorm == 65536) {  // keep |phasor| from drifting
            const double norm = 1.0 / std::sqrt(c * c + s * s);
            c *= norm;
            s *= norm;
            since_renorm = 0;
        }
    }
}

} // namespace zipsim::dsp
