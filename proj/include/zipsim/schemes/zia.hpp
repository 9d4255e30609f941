#pragma once

#include <cmath>
#include <stdexcept>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/sigproc/similarity.hpp"

namespace zipsim::schemes {

enum class ZiaOutcome { accept, reject, insufficient_power };

struct ZiaResult {
    ZiaOutcome outcome = ZiaOutcome::reject;
    double power_a_db = -300.0;
    double power_b_db = -300.0;
    double score = 0.0;  // similarity score; only meaningful past the power gate
};

/// Snippet power on a pseudo-SPL scale: full-scale RMS (1.0) maps to the
/// calibration offset (default 120 dB).
inline double snippet_power_db(const AudioClip& clip, double full_scale_db = 120.0) {
    if (clip.samples.empty()) return -300.0;
    double e = 0.0;
    for (float v : clip.samples) e += static_cast<double>(v) * v;
    const double rms = std::sqrt(e / static_cast<double>(clip.samples.size()));
    if (rms <= 0.0) return -300.0;
    return full_scale_db + 20.0 * std::log10(rms);
}

/// Proximity authentication on one pair of synchronized snippets: both sides
/// must clear the 40 dB power gate, then accept iff the similarity score
/// reaches the decision threshold.
inline ZiaResult zia_authenticate(const AudioClip& a, const AudioClip& b,
                                  double decision_threshold,
                                  const Params& params = Params()) {
    if (a.samples.size() != b.samples.size())
        throw std::invalid_argument("zia_authenticate: mismatched snippet lengths");

    const double gate = params.get_d("zia.power_gate_db");
    const double full_scale = params.get_d("zia.full_scale_db");

    ZiaResult res;
    res.power_a_db = snippet_power_db(a, full_scale);
    res.power_b_db = snippet_power_db(b, full_scale);
    if (res.power_a_db < gate || res.power_b_db < gate) {
        res.outcome = ZiaOutcome::insufficient_power;
        return res;
    }
    res.score = sigproc::similarity_score(a, b, params).value;
    res.outcome = res.score >= decision_threshold ? ZiaOutcome::accept : ZiaOutcome::reject;
    return res;
}

} // namespace zipsim::schemes
