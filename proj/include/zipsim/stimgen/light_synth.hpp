#pragma once

#include <cmath>
#include <stdexcept>

#include "zipsim/core/types.hpp"
#include "zipsim/stimgen/cie.hpp"
#include "zipsim/stimgen/stimulus.hpp"

namespace zipsim::stimgen {

struct LightProfile {
    TimeSeries brightness;  // scalar, bulb brightness units (1-254 scale)
    TimeSeries rgb;         // 3 channels, emitted color scaled by brightness
};

/// Renders one light stimulus at the simulation tick rate. Blinking is an
/// ideal on/off square wave at the sampled frequency; the RGB channels carry
/// the sampled color after the bulb's CIE 1931 round trip.
inline LightProfile synth_light_profile(const StimulusParams& params, double tick_rate,
                                        double duration_override_s = -1.0) {
    if (params.modality != Modality::light)
        throw std::invalid_argument("synth_light_profile: params not light");
    if (!params.color) throw std::invalid_argument("synth_light_profile: missing color");

    const double duration =
        duration_override_s > 0.0 ? duration_override_s : params.duration_s;
    const auto n = static_cast<std::size_t>(std::llround(duration * tick_rate));

    LightProfile out;
    out.brightness.rate = tick_rate;
    out.brightness.kind = SensorKind::illuminance;
    out.brightness.values.assign(n, 0.0);
    out.rgb.rate = tick_rate;
    out.rgb.channels = 3;
    out.rgb.kind = SensorKind::rgb;
    out.rgb.values.assign(n * 3, 0.0);

    const auto emitted = bulb_color(*params.color);
    const double color_scale = params.intensity / 254.0;
    for (std::size_t i = 0; i < n; ++i) {
        double level = params.intensity;
        if (params.pattern == LightPattern::blink && params.blink_hz > 0.0) {
            const double phase = std::fmod(static_cast<double>(i) / tick_rate * params.blink_hz, 1.0);
            level = phase < 0.5 ? params.intensity : 0.0;
        }
        out.brightness.values[i] = level;
        const double on = level > 0.0 ? 1.0 : 0.0;
        out.rgb.values[i * 3 + 0] = emitted[0] * color_scale * on;
        out.rgb.values[i * 3 + 1] = emitted[1] * color_scale * on;
        out.rgb.values[i * 3 + 2] = emitted[2] * color_scale * on;
    }
    return out;
}

} // namespace zipsim::stimgen
