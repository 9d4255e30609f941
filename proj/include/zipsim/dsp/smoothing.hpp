#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zipsim::dsp {

/// Edge-inclusive mirror index (… c b a | a b c d | d c b …).
inline std::size_t reflect_index(long long i, std::size_t n) {
    const long long nn = static_cast<long long>(n);
    while (i < 0 || i >= nn) {
        if (i < 0) i = -i - 1;
        if (i >= nn) i = 2 * nn - 1 - i;
    }
    return static_cast<std::size_t>(i);
}

/// Correlate a series with a symmetric-support kernel using mirror padding;
/// output length equals input length. kernel.size() must be odd.
inline std::vector<double> convolve_reflect(const std::vector<double>& x,
                                            const std::vector<double>& kernel) {
    if (kernel.size() % 2 == 0) throw std::invalid_argument("kernel size must be odd");
    const long long h = static_cast<long long>(kernel.size() / 2);
    std::vector<double> out(x.size(), 0.0);
    for (long long i = 0; i < static_cast<long long>(x.size()); ++i) {
        double acc = 0.0;
        for (long long k = -h; k <= h; ++k)
            acc += kernel[static_cast<std::size_t>(k + h)] * x[reflect_index(i + k, x.size())];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// Savitzky-Golay smoothing kernel: least-squares fit of a degree-p polynomial
/// over a window of odd length w, evaluated at the window center.
inline std::vector<double> savgol_kernel(int window, int degree) {
    if (window < 1 || window % 2 == 0) throw std::invalid_argument("savgol: window must be odd");
    if (degree < 0 || degree >= window) throw std::invalid_argument("savgol: bad degree");
    const int h = window / 2;
    const int m = degree + 1;

    // Normal equations G c = e0 with G_{jk} = sum_t t^(j+k).
    std::vector<double> g(static_cast<std::size_t>(m) * m, 0.0);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            double s = 0.0;
            for (int t = -h; t <= h; ++t) s += std::pow(static_cast<double>(t), j + k);
            g[static_cast<std::size_t>(j) * m + k] = s;
        }
    std::vector<double> rhs(m, 0.0);
    rhs[0] = 1.0;

    // Gaussian elimination with partial pivoting (m is tiny).
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(g[static_cast<std::size_t>(r) * m + col]) >
                std::abs(g[static_cast<std::size_t>(pivot) * m + col]))
                pivot = r;
        if (pivot != col) {
            for (int c = 0; c < m; ++c)
                std::swap(g[static_cast<std::size_t>(col) * m + c],
                          g[static_cast<std::size_t>(pivot) * m + c]);
            std::swap(rhs[col], rhs[pivot]);
        }
        const double d = g[static_cast<std::size_t>(col) * m + col];
        if (std::abs(d) < 1e-300) throw std::runtime_error("savgol: singular system");
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = g[static_cast<std::size_t>(r) * m + col] / d;
            for (int c = 0; c < m; ++c)
                g[static_cast<std::size_t>(r) * m + c] -=
                    f * g[static_cast<std::size_t>(col) * m + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> coeff(m);
    for (int r = 0; r < m; ++r) coeff[r] = rhs[r] / g[static_cast<std::size_t>(r) * m + r];

    // Kernel weight at offset t is the fitted polynomial's response to e_t.
    std::vector<double> kernel(static_cast<std::size_t>(window));
    for (int t = -h; t <= h; ++t) {
        double w = 0.0;
        double tp = 1.0;
        for (int j = 0; j < m; ++j) {
            w += coeff[j] * tp;
            tp *= static_cast<double>(t);
        }
        kernel[static_cast<std::size_t>(t + h)] = w;
    }
    return kernel;
}

/// Discrete Gaussian kernel, radius = round(truncate * sigma), normalized.
inline std::vector<double> gaussian_kernel(double sigma, double truncate = 4.0) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive");
    const int radius = static_cast<int>(truncate * sigma + 0.5);
    std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        const double v = std::exp(-0.5 * (k / sigma) * (k / sigma));
        kernel[static_cast<std::size_t>(k + radius)] = v;
        sum += v;
    }
    for (double& v : kernel) v /= sum;
    return kernel;
}

} // namespace zipsim::dsp
