#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/rng.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/dsp/resample.hpp"

namespace zipsim::stimgen {

/// Source of speech-like utterances. The default below synthesizes word
/// proxies; recorded corpora can be plugged in behind the same interface.
class SpeechSource {
public:
    virtual ~SpeechSource() = default;

    /// Emits `word_count` words; clip duration is word_count * word_duration.
    virtual AudioClip next_utterance(int word_count, Rng& rng, double sample_rate) = 0;

    virtual double words_per_minute() const { return 120.0; }
    double word_duration() const { return 60.0 / words_per_minute(); }
};

/// Word proxies built from a small stack of tones in the speech formant
/// region, with attack/decay envelopes and inter-word silences. Occupies the
/// same spectral region as voiced speech without any external model.
class FormantSpeechSource : public SpeechSource {
public:
    explicit FormantSpeechSource(const Params& p = Params())
        : formant_min_(p.get_d("speech.formant_min_hz")),
          formant_max_(p.get_d("speech.formant_max_hz")),
          formant_count_(static_cast<int>(p.get_i("speech.formant_count"))),
          attack_decay_s_(p.get_d("speech.attack_decay_s")),
          gap_s_(p.get_d("speech.gap_s")),
          level_(p.get_d("speech.level")),
          wpm_(p.get_d("stim.audio.words_per_minute")) {}

    double words_per_minute() const override { return wpm_; }

    AudioClip next_utterance(int word_count, Rng& rng, double sample_rate) override {
        AudioClip clip;
        clip.sample_rate = sample_rate;
        if (word_count <= 0) return clip;

        const double slot = word_duration();                    // voiced part + gap
        const double voiced = std::max(slot - gap_s_, slot / 2); // keep some tone
        const auto slot_n = static_cast<std::size_t>(std::llround(slot * sample_rate));
        const auto voiced_n = static_cast<std::size_t>(std::llround(voiced * sample_rate));
        clip.samples.assign(slot_n * static_cast<std::size_t>(word_count), 0.0f);

        const double amp = level_ / static_cast<double>(formant_count_);
        for (int w = 0; w < word_count; ++w) {
            const std::size_t base = static_cast<std::size_t>(w) * slot_n;
            for (int f = 0; f < formant_count_; ++f) {
                const double freq = rng.uniform(formant_min_, formant_max_);
                dsp::add_sine(clip.samples, base, voiced_n, sample_rate, freq, amp);
            }
            apply_envelope(clip.samples, base, voiced_n, sample_rate);
        }
        return clip;
    }

private:
    void apply_envelope(std::vector<float>& s, std::size_t start, std::size_t len,
                        double fs) const {
        const auto ramp = static_cast<std::size_t>(attack_decay_s_ * fs);
        if (ramp == 0 || 2 * ramp > len) return;
        for (std::size_t i = 0; i < ramp; ++i) {
            const double g =
                0.5 - 0.5 * std::cos(std::numbers::pi * static_cast<double>(i) / ramp);
            s[start + i] *= static_cast<float>(g);
            s[start + len - 1 - i] *= static_cast<float>(g);
        }
    }

    double formant_min_, formant_max_;
    int formant_count_;
    double attack_decay_s_, gap_s_, level_, wpm_;
};

} // namespace zipsim::stimgen
