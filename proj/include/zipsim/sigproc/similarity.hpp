#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/dsp/resample.hpp"
#include "zipsim/dsp/xcorr.hpp"
#include "zipsim/sigproc/octave.hpp"

namespace zipsim::sigproc {

struct SimilarityResult {
    double value = 0.0;       // in [0, 1]; bigger = more similar
    int silent_bands = 0;     // bands where one side had zero RMS (count as 0)
    double snippet_seconds = 0.0;
};

namespace detail {

inline std::vector<double> to_double(const AudioClip& clip) {
    return std::vector<double>(clip.samples.begin(), clip.samples.end());
}

/// Bring a clip to the band-analysis working rate (the metric's bands stop at
/// 4 kHz, so clips recorded at high rates are decimated first).
inline std::vector<double> to_work_rate(const AudioClip& clip, double work_rate,
                                        double* actual_rate) {
    auto x = to_double(clip);
    int factor = 1;
    if (clip.sample_rate > 1.5 * work_rate)
        factor = std::max(1, static_cast<int>(std::lround(clip.sample_rate / work_rate)));
    if (factor > 1) x = dsp::decimate(x, factor, clip.sample_rate);
    *actual_rate = clip.sample_rate / factor;
    return x;
}

} // namespace detail

/// Audio similarity score: each clip is split into the 20 one-third-octave
/// bands (50 Hz .. 4 kHz); per band the maximum normalized cross-correlation
/// within a +-150 ms lag window is taken; the result is the average over
/// bands. A band in which either clip is silent contributes 0.
inline SimilarityResult similarity_score(const AudioClip& a, const AudioClip& b,
                                         const Params& params = Params()) {
    if (a.sample_rate != b.sample_rate)
        throw std::invalid_argument("similarity_score: sample rates differ");
    if (a.samples.size() != b.samples.size())
        throw std::invalid_argument("similarity_score: clips must have equal length");
    const double min_len = params.get_d("sig.similarity.min_length_s");
    if (a.duration() < min_len)
        throw std::invalid_argument("similarity_score: clips shorter than " +
                                    std::to_string(min_len) + " s");

    const double work_rate = params.get_d("sig.similarity.work_rate_hz");
    double fs = 0.0;
    auto xa = detail::to_work_rate(a, work_rate, &fs);
    auto xb = detail::to_work_rate(b, work_rate, &fs);

    const double maxlag_s = params.get_d("sig.similarity.maxlag_ms") / 1000.0;
    const auto maxlag = static_cast<std::size_t>(std::lround(maxlag_s * fs));

    SimilarityResult res;
    res.snippet_seconds = a.duration();
    const auto bands = third_octave_bands();
    double sum = 0.0;
    std::vector<double> fa(xa.size()), fb(xb.size());
    for (const auto& band : bands) {
        auto chain_a = dsp::butter_bandpass(2, band.f1, band.f2, fs);
        auto chain_b = chain_a;
        for (std::size_t i = 0; i < xa.size(); ++i) {
            double v = xa[i];
            for (auto& s : chain_a) v = s.process(v);
            fa[i] = v;
        }
        for (std::size_t i = 0; i < xb.size(); ++i) {
            double v = xb[i];
            for (auto& s : chain_b) v = s.process(v);
            fb[i] = v;
        }
        double ea = 0.0, eb = 0.0;
        for (double v : fa) ea += v * v;
        for (double v : fb) eb += v * v;
        if (ea <= 1e-24 || eb <= 1e-24) {
            ++res.silent_bands;  // contributes 0
            continue;
        }
        const auto peak = dsp::max_xcorr(fa, fb, maxlag);
        sum += std::clamp(peak.value, 0.0, 1.0);
    }
    res.value = sum / static_cast<double>(bands.size());
    return res;
}

} // namespace zipsim::sigproc
