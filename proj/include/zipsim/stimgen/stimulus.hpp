#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/rng.hpp"
#include "zipsim/core/types.hpp"

namespace zipsim::stimgen {

enum class LightPattern { constant, blink };
enum class MistLevel { low, high };

/// One PRNG-shaped stimulus. Which optional fields are present depends on the
/// modality: color only for light, spectrum only for audio.
struct StimulusParams {
    Modality modality = Modality::audio;
    double occurrence_interval_s = 0.0;
    double duration_s = 0.0;
    double intensity = 0.0;  // audio loudness 0.1-1 | light brightness 1-254
    LightPattern pattern = LightPattern::constant;
    double blink_hz = 0.0;  // set when pattern == blink
    std::optional<std::array<int, 3>> color;
    std::optional<double> spectrum_hz;
    MistLevel mist = MistLevel::low;
};

/// Draws one stimulus uniformly within the per-modality parameter ranges.
/// The draw order is fixed, so a given rng state always yields the same params.
inline StimulusParams sample_params(Modality modality, Rng& rng, const Params& p = Params()) {
    StimulusParams out;
    out.modality = modality;
    switch (modality) {
        case Modality::audio:
            out.occurrence_interval_s =
                rng.uniform(p.get_d("stim.audio.interval_min_s"), p.get_d("stim.audio.interval_max_s"));
            out.duration_s =
                rng.uniform(p.get_d("stim.audio.duration_min_s"), p.get_d("stim.audio.duration_max_s"));
            out.intensity =
                rng.uniform(p.get_d("stim.audio.loudness_min"), p.get_d("stim.audio.loudness_max"));
            out.spectrum_hz = rng.uniform(p.get_d("stim.audio.noise_freq_min_hz"),
                                          p.get_d("stim.audio.noise_freq_max_hz"));
            break;
        case Modality::light: {
            out.occurrence_interval_s =
                rng.uniform(p.get_d("stim.light.interval_min_s"), p.get_d("stim.light.interval_max_s"));
            out.duration_s =
                rng.uniform(p.get_d("stim.light.duration_min_s"), p.get_d("stim.light.duration_max_s"));
            out.intensity = rng.uniform(p.get_d("stim.light.brightness_min"),
                                        p.get_d("stim.light.brightness_max"));
            out.pattern = rng.bernoulli(p.get_d("stim.light.blink_probability"))
                              ? LightPattern::blink
                              : LightPattern::constant;
            out.blink_hz =
                rng.uniform(p.get_d("stim.light.blink_min_hz"), p.get_d("stim.light.blink_max_hz"));
            if (out.pattern == LightPattern::constant) out.blink_hz = 0.0;
            std::array<int, 3> c{};
            for (auto& ch : c) ch = static_cast<int>(rng.uniform_int(0, 255));
            out.color = c;
            break;
        }
        case Modality::co2:
            out.occurrence_interval_s =
                rng.uniform(p.get_d("stim.co2.interval_min_s"), p.get_d("stim.co2.interval_max_s"));
            out.duration_s =
                rng.uniform(p.get_d("stim.co2.duration_min_s"), p.get_d("stim.co2.duration_max_s"));
            out.mist = rng.bernoulli(0.5) ? MistLevel::high : MistLevel::low;
            out.intensity = out.mist == MistLevel::high ? 1.0 : 0.0;
            break;
    }
    return out;
}

struct ScheduledEvent {
    double start_s = 0.0;
    StimulusParams params;
};

struct StimulusSchedule {
    Modality modality = Modality::audio;
    double total_duration_s = 0.0;
    std::uint64_t seed = 0;
    std::vector<ScheduledEvent> events;

    /// A new command to the same actuator preempts the previous one, so the
    /// rendered duration of event k never reaches past the next start.
    double effective_duration(std::size_t k) const {
        const double d = events[k].params.duration_s;
        if (k + 1 < events.size())
            return std::min(d, events[k + 1].start_s - events[k].start_s);
        return std::min(d, total_duration_s - events[k].start_s);
    }
};

inline double min_interval_for(Modality m, const Params& p) {
    switch (m) {
        case Modality::audio: return p.get_d("stim.audio.interval_min_s");
        case Modality::light: return p.get_d("stim.light.interval_min_s");
        case Modality::co2: return p.get_d("stim.co2.interval_min_s");
    }
    return 0.0;
}

/// Builds the full injection schedule for one actuator: the first stimulus
/// starts at t = 0 and consecutive starts are separated by the occurrence
/// interval sampled with each event. Event k draws from its own child stream,
/// so schedules are stable under changes elsewhere.
inline StimulusSchedule build_schedule(Modality modality, double total_duration_s,
                                       const Rng& base, const Params& p = Params()) {
    if (!(total_duration_s > 0.0))
        throw std::invalid_argument("build_schedule: total_duration must be positive");
    if (total_duration_s < min_interval_for(modality, p))
        throw std::invalid_argument("build_schedule: duration shorter than one minimum interval");

    StimulusSchedule sched;
    sched.modality = modality;
    sched.total_duration_s = total_duration_s;
    sched.seed = base.base_seed();

    double start = 0.0;
    for (std::uint64_t k = 0; start < total_duration_s; ++k) {
        Rng stream = base.child("event", k);
        StimulusParams params = sample_params(modality, stream, p);
        sched.events.push_back({start, params});
        start += params.occurrence_interval_s;
    }
    return sched;
}

inline std::string to_string(LightPattern p) {
    return p == LightPattern::blink ? "blink" : "constant";
}
inline std::string to_string(MistLevel m) { return m == MistLevel::high ? "high" : "low"; }

} // namespace zipsim::stimgen
