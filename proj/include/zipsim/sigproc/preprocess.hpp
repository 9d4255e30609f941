#pragma once

#include <stdexcept>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/dsp/smoothing.hpp"

namespace zipsim::sigproc {

/// Scalar-sensor preprocessing: mean subtraction, Savitzky-Golay smoothing
/// (window 3, degree 2), then Gaussian smoothing (sigma 1.4). Length is
/// preserved via mirror padding; multi-channel series are processed
/// per channel.
inline TimeSeries preprocess_scalar(const TimeSeries& ts, const Params& params = Params()) {
    if (ts.size() < 3) throw std::invalid_argument("preprocess_scalar: need at least 3 samples");

    const int window = static_cast<int>(params.get_i("sig.preprocess.savgol_window"));
    const int degree = static_cast<int>(params.get_i("sig.preprocess.savgol_degree"));
    const double sigma = params.get_d("sig.preprocess.gaussian_sigma");
    const double truncate = params.get_d("sig.preprocess.gaussian_truncate");

    const auto sg = dsp::savgol_kernel(window, degree);
    const auto gauss = dsp::gaussian_kernel(sigma, truncate);

    TimeSeries out = ts;
    const std::size_t n = ts.size();
    std::vector<double> channel(n);
    for (int c = 0; c < ts.channels; ++c) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += ts.at(i, c);
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) channel[i] = ts.at(i, c) - mean;

        channel = dsp::convolve_reflect(channel, sg);
        channel = dsp::convolve_reflect(channel, gauss);
        for (std::size_t i = 0; i < n; ++i) out.at(i, c) = channel[i];
    }
    return out;
}

} // namespace zipsim::sigproc
