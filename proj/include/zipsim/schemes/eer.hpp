#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace zipsim::schemes {

struct EerResult {
    double eer = 0.0;        // in [0, 0.5]
    double threshold = 0.0;  // operating threshold attaining it
    std::vector<double> thresholds;
    std::vector<double> far;  // fraction of non-colocated accepted (score >= t)
    std::vector<double> frr;  // fraction of colocated rejected (score < t)
};

/// Equal error rate from colocated and non-colocated score populations.
/// The threshold axis is swept over all observed scores plus midpoints; at
/// each point FAR and FRR are evaluated and the balanced error (FAR+FRR)/2
/// is minimized, which lands on the FAR/FRR crossing of the interpolated
/// curves. Rank-based, hence invariant under monotone score transforms.
inline EerResult compute_eer(std::vector<double> colocated, std::vector<double> noncolocated) {
    if (colocated.empty() || noncolocated.empty())
        throw std::invalid_argument("compute_eer: empty score list");

    std::vector<double> candidates;
    candidates.reserve(colocated.size() + noncolocated.size() + 2);
    candidates.insert(candidates.end(), colocated.begin(), colocated.end());
    candidates.insert(candidates.end(), noncolocated.begin(), noncolocated.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<double> sweep;
    sweep.push_back(candidates.front() - 1.0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        sweep.push_back(candidates[i]);
        if (i + 1 < candidates.size()) sweep.push_back(0.5 * (candidates[i] + candidates[i + 1]));
    }
    sweep.push_back(candidates.back() + 1.0);

    const double nc = static_cast<double>(colocated.size());
    const double nn = static_cast<double>(noncolocated.size());

    EerResult res;
    res.eer = 1.0;
    for (double t : sweep) {
        std::size_t fa = 0, fr = 0;
        for (double s : noncolocated)
            if (s >= t) ++fa;
        for (double s : colocated)
            if (s < t) ++fr;
        const double far = static_cast<double>(fa) / nn;
        const double frr = static_cast<double>(fr) / nc;
        res.thresholds.push_back(t);
        res.far.push_back(far);
        res.frr.push_back(frr);
        const double hter = 0.5 * (far + frr);
        if (hter < res.eer) {
            res.eer = hter;
            res.threshold = t;
        }
    }
    return res;
}

} // namespace zipsim::schemes
