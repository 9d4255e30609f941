#pragma once

#include <cmath>
#include <stdexcept>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/stimgen/stimulus.hpp"

namespace zipsim::stimgen {

/// Rectangular emission-rate profile for one humidifier stimulus, in source
/// strength units (ppm * m^3 / s). Low and high mist levels map to the two
/// configured rates.
inline TimeSeries synth_co2_emission(const StimulusParams& params, const Params& p = Params(),
                                     double tick_rate = 1.0,
                                     double duration_override_s = -1.0) {
    if (params.modality != Modality::co2)
        throw std::invalid_argument("synth_co2_emission: params not co2");

    const double rate = params.mist == MistLevel::high ? p.get_d("stim.co2.rate_high")
                                                       : p.get_d("stim.co2.rate_low");
    const double duration =
        duration_override_s > 0.0 ? duration_override_s : params.duration_s;

    TimeSeries out;
    out.rate = tick_rate;
    out.kind = SensorKind::co2;
    out.values.assign(static_cast<std::size_t>(std::llround(duration * tick_rate)), rate);
    return out;
}

} // namespace zipsim::stimgen
