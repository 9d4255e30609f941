#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/rng.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/dsp/resample.hpp"
#include "zipsim/stimgen/speech.hpp"
#include "zipsim/stimgen/stimulus.hpp"

namespace zipsim::stimgen {

/// Pure sine burst with short raised-cosine fades (keeps the splice points
/// click-free; a sine has no harmonics, unlike square or sawtooth shapes).
inline AudioClip sine_burst(double freq_hz, double duration_s, double amplitude,
                            double sample_rate, double fade_s = 0.005) {
    AudioClip clip;
    clip.sample_rate = sample_rate;
    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
    clip.samples.assign(n, 0.0f);
    dsp::add_sine(clip.samples, 0, n, sample_rate, freq_hz, amplitude);
    const auto ramp = static_cast<std::size_t>(fade_s * sample_rate);
    if (ramp > 0 && 2 * ramp <= n) {
        for (std::size_t i = 0; i < ramp; ++i) {
            const double g =
                0.5 - 0.5 * std::cos(std::numbers::pi * static_cast<double>(i) / ramp);
            clip.samples[i] *= static_cast<float>(g);
            clip.samples[n - 1 - i] *= static_cast<float>(g);
        }
    }
    return clip;
}

/// Word count for an audio stimulus, mapped linearly from the sampled
/// duration range onto the corpus word-count range.
inline int words_for_duration(double duration_s, const Params& p) {
    const double dmin = p.get_d("stim.audio.duration_min_s");
    const double dmax = p.get_d("stim.audio.duration_max_s");
    const auto wmin = static_cast<double>(p.get_i("stim.audio.words_min"));
    const auto wmax = static_cast<double>(p.get_i("stim.audio.words_max"));
    const double t = std::clamp((duration_s - dmin) / (dmax - dmin), 0.0, 1.0);
    return static_cast<int>(std::lround(wmin + t * (wmax - wmin)));
}

inline int burst_count_for_words(int word_count) {
    return std::clamp((word_count + 9) / 10, 1, 3);
}

/// Audio stimulus: speech interleaved with 1-3 sine noise bursts at evenly
/// spaced positions, the whole clip scaled by the sampled loudness.
inline AudioClip synth_audio_stimulus(const StimulusParams& params, SpeechSource& speech,
                                      Rng& rng, const Params& p = Params(),
                                      double sample_rate = 44100.0) {
    if (params.modality != Modality::audio)
        throw std::invalid_argument("synth_audio_stimulus: params not audio");

    const int words = words_for_duration(params.duration_s, p);
    Rng speech_rng = rng.child("speech");
    const AudioClip voice = speech.next_utterance(words, speech_rng, sample_rate);

    const int bursts = burst_count_for_words(words);
    std::vector<AudioClip> noise;
    Rng burst_rng = rng.child("bursts");
    for (int i = 0; i < bursts; ++i) {
        const double dur = burst_rng.uniform(p.get_d("stim.audio.noise_dur_min_s"),
                                             p.get_d("stim.audio.noise_dur_max_s"));
        const double loud = burst_rng.uniform(p.get_d("stim.audio.noise_loud_min"),
                                              p.get_d("stim.audio.noise_loud_max"));
        double freq = burst_rng.uniform(p.get_d("stim.audio.noise_freq_min_hz"),
                                        p.get_d("stim.audio.noise_freq_max_hz"));
        if (i == 0 && params.spectrum_hz) freq = *params.spectrum_hz;
        noise.push_back(
            sine_burst(freq, dur, loud, sample_rate, p.get_d("stim.audio.burst_fade_s")));
    }

    AudioClip out;
    out.sample_rate = sample_rate;
    const std::size_t vn = voice.samples.size();
    std::size_t prev = 0;
    for (int i = 0; i < bursts; ++i) {
        const std::size_t cut = vn * static_cast<std::size_t>(i + 1) /
                                static_cast<std::size_t>(bursts + 1);
        out.samples.insert(out.samples.end(), voice.samples.begin() + static_cast<std::ptrdiff_t>(prev),
                           voice.samples.begin() + static_cast<std::ptrdiff_t>(cut));
        out.samples.insert(out.samples.end(), noise[static_cast<std::size_t>(i)].samples.begin(),
                           noise[static_cast<std::size_t>(i)].samples.end());
        prev = cut;
    }
    out.samples.insert(out.samples.end(), voice.samples.begin() + static_cast<std::ptrdiff_t>(prev),
                       voice.samples.end());

    for (float& s : out.samples) s = static_cast<float>(s * params.intensity);
    clip_to_unit(out);
    return out;
}

} // namespace zipsim::stimgen
