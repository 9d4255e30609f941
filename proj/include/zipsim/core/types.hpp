#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zipsim {

/// Context a stimulus actuator can perturb.
enum class Modality { audio, light, co2 };

/// Sensor data stream kinds (light splits into illuminance and RGB sensors).
enum class SensorKind { microphone, illuminance, rgb, co2 };

inline std::string to_string(Modality m) {
    switch (m) {
        case Modality::audio: return "audio";
        case Modality::light: return "light";
        case Modality::co2: return "co2";
    }
    return "?";
}

inline std::string to_string(SensorKind k) {
    switch (k) {
        case SensorKind::microphone: return "audio";
        case SensorKind::illuminance: return "illuminance";
        case SensorKind::rgb: return "rgb";
        case SensorKind::co2: return "co2";
    }
    return "?";
}

inline Modality modality_from_string(const std::string& s) {
    if (s == "audio") return Modality::audio;
    if (s == "light") return Modality::light;
    if (s == "co2") return Modality::co2;
    throw std::invalid_argument("unknown modality: " + s);
}

/// Uniformly sampled sensor series. Timestamps are implicit: t0 + i / rate.
/// `channels` is 1 for scalar series and 3 for RGB; samples are interleaved.
struct TimeSeries {
    double rate = 1.0;  // Hz
    double t0 = 0.0;    // seconds
    int channels = 1;
    SensorKind kind = SensorKind::illuminance;
    std::vector<double> values;

    std::size_t size() const {
        return channels > 0 ? values.size() / static_cast<std::size_t>(channels) : 0;
    }
    double duration() const { return static_cast<double>(size()) / rate; }
    double timestamp(std::size_t i) const { return t0 + static_cast<double>(i) / rate; }

    double& at(std::size_t i, int c = 0) { return values[i * channels + c]; }
    double at(std::size_t i, int c = 0) const { return values[i * channels + c]; }
};

/// Mono PCM audio buffer, amplitudes nominally within [-1, 1].
struct AudioClip {
    double sample_rate = 44100.0;
    std::vector<float> samples;

    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

inline void clip_to_unit(AudioClip& clip) {
    for (float& s : clip.samples) {
        if (s > 1.0f) s = 1.0f;
        if (s < -1.0f) s = -1.0f;
    }
}

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

} // namespace zipsim
