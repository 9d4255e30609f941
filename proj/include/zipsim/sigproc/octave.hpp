#pragma once

#include <cmath>
#include <vector>

#include "zipsim/dsp/filters.hpp"

namespace zipsim::sigproc {

struct OctaveBand {
    double fc = 0.0;  // geometric center, Hz
    double f1 = 0.0;  // lower edge
    double f2 = 0.0;  // upper edge
};

/// The 20 one-third-octave bands with centers from ~50 Hz to 4 kHz
/// (base-two series anchored at 1 kHz, edges at fc * 2^(+-1/6)).
inline std::vector<OctaveBand> third_octave_bands() {
    std::vector<OctaveBand> bands;
    bands.reserve(20);
    for (int n = -13; n <= 6; ++n) {
        OctaveBand b;
        b.fc = 1000.0 * std::pow(2.0, n / 3.0);
        b.f1 = b.fc * std::pow(2.0, -1.0 / 6.0);
        b.f2 = b.fc * std::pow(2.0, 1.0 / 6.0);
        bands.push_back(b);
    }
    return bands;
}

/// 4th-order Butterworth band-pass per band at the given sample rate.
inline std::vector<dsp::BiquadChain> third_octave_filter_bank(double fs) {
    std::vector<dsp::BiquadChain> bank;
    for (const auto& b : third_octave_bands())
        bank.push_back(dsp::butter_bandpass(2, b.f1, b.f2, fs));
    return bank;
}

} // namespace zipsim::sigproc
