#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace zipsim::stimgen {

/// CIE 1931 xyY chromaticity, the color space smart bulbs are driven in.
struct CieXyY {
    double x = 0.0, y = 0.0, Y = 0.0;
};

namespace detail {

inline double srgb_to_linear(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

inline double linear_to_srgb(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

} // namespace detail

/// sRGB (0-255) to CIE 1931 xyY, D65 white point.
inline CieXyY rgb_to_xy(const std::array<int, 3>& rgb) {
    const double r = detail::srgb_to_linear(rgb[0] / 255.0);
    const double g = detail::srgb_to_linear(rgb[1] / 255.0);
    const double b = detail::srgb_to_linear(rgb[2] / 255.0);
    const double X = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    const double Y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    const double Z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
    const double sum = X + Y + Z;
    CieXyY out;
    if (sum > 0.0) {
        out.x = X / sum;
        out.y = Y / sum;
    } else {
        out.x = 0.3127;  // D65 white, for pure black
        out.y = 0.3290;
    }
    out.Y = Y;
    return out;
}

/// CIE 1931 xyY back to sRGB (0-255). Exact inverse for in-gamut colors.
inline std::array<int, 3> xy_to_rgb(const CieXyY& c) {
    if (c.Y <= 0.0 || c.y <= 0.0) return {0, 0, 0};
    const double X = c.x * c.Y / c.y;
    const double Z = (1.0 - c.x - c.y) * c.Y / c.y;
    double r = 3.2404542 * X - 1.5371385 * c.Y - 0.4985314 * Z;
    double g = -0.9692660 * X + 1.8760108 * c.Y + 0.0415560 * Z;
    double b = 0.0556434 * X - 0.2040259 * c.Y + 1.0572252 * Z;
    r = detail::linear_to_srgb(std::max(r, 0.0));
    g = detail::linear_to_srgb(std::max(g, 0.0));
    b = detail::linear_to_srgb(std::max(b, 0.0));
    return {static_cast<int>(std::lround(r * 255.0)), static_cast<int>(std::lround(g * 255.0)),
            static_cast<int>(std::lround(b * 255.0))};
}

/// The color a bulb actually emits for a requested RGB: mapped onto the CIE
/// 1931 space and back, i.e. what survives the bulb's color pipeline.
inline std::array<int, 3> bulb_color(const std::array<int, 3>& requested) {
    return xy_to_rgb(rgb_to_xy(requested));
}

} // namespace zipsim::stimgen
