#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace zipsim {

/// Flat registry of every tunable constant. All defaults live here so that
/// any of them can be overridden from the CLI with `--set key=value`.
/// Overriding a key that does not exist throws (fail fast on typos).
class Params {
public:
    using Value = std::variant<double, std::int64_t, bool, std::string>;

    Params() { install_defaults(); }

    double get_d(const std::string& key) const { return std::get<double>(find(key)); }
    std::int64_t get_i(const std::string& key) const { return std::get<std::int64_t>(find(key)); }
    bool get_b(const std::string& key) const { return std::get<bool>(find(key)); }
    const std::string& get_s(const std::string& key) const {
        return std::get<std::string>(find(key));
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    void set(const std::string& key, Value v) {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument("unknown config key: " + key);
        if (it->second.index() != v.index())
            throw std::invalid_argument("type mismatch for config key: " + key);
        it->second = std::move(v);
    }

    /// Parse "key=value" with the type taken from the existing default.
    void set_override(const std::string& assignment) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("override must be key=value: " + assignment);
        const std::string key = assignment.substr(0, eq);
        const std::string raw = assignment.substr(eq + 1);
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument("unknown config key: " + key);
        it->second = parse_as(it->second, key, raw);
    }

    /// Deterministic (sorted) iteration, used for config echoes in manifests.
    const std::map<std::string, Value>& all() const { return values_; }

    static std::string to_string(const Value& v) {
        std::ostringstream os;
        if (std::holds_alternative<double>(v)) {
            os.precision(17);
            os << std::get<double>(v);
        } else if (std::holds_alternative<std::int64_t>(v)) {
            os << std::get<std::int64_t>(v);
        } else if (std::holds_alternative<bool>(v)) {
            os << (std::get<bool>(v) ? "true" : "false");
        } else {
            os << std::get<std::string>(v);
        }
        return os.str();
    }

private:
    const Value& find(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument("unknown config key: " + key);
        return it->second;
    }

    static Value parse_as(const Value& like, const std::string& key, const std::string& raw) {
        try {
            if (std::holds_alternative<double>(like)) return std::stod(raw);
            if (std::holds_alternative<std::int64_t>(like))
                return static_cast<std::int64_t>(std::stoll(raw));
            if (std::holds_alternative<bool>(like)) {
                if (raw == "true" || raw == "1") return true;
                if (raw == "false" || raw == "0") return false;
                throw std::invalid_argument("bool");
            }
            return raw;
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse value '" + raw + "' for config key: " + key);
        }
    }

    void d(const char* k, double v) { values_.emplace(k, v); }
    void i(const char* k, std::int64_t v) { values_.emplace(k, v); }
    void b(const char* k, bool v) { values_.emplace(k, v); }
    void s(const char* k, const char* v) { values_.emplace(k, std::string(v)); }

    void install_defaults() {
        // --- simulation clocks and durations ---
        d("sim.audio_rate_hz", 44100.0);
        d("sim.light_rate_hz", 5.0);
        d("sim.co2_rate_hz", 1.0);
        d("sim.co2_step_s", 1.0);
        d("sim.audio_duration_s", 600.0);
        d("sim.light_duration_s", 1800.0);
        d("sim.co2_duration_s", 3600.0);

        // --- stimulus parameter ranges (audio / light / co2) ---
        d("stim.audio.interval_min_s", 60.0);
        d("stim.audio.interval_max_s", 180.0);
        d("stim.audio.duration_min_s", 4.5);
        d("stim.audio.duration_max_s", 75.0);
        d("stim.audio.loudness_min", 0.1);
        d("stim.audio.loudness_max", 1.0);
        d("stim.audio.noise_freq_min_hz", 50.0);
        d("stim.audio.noise_freq_max_hz", 22100.0);
        d("stim.audio.noise_dur_min_s", 0.5);
        d("stim.audio.noise_dur_max_s", 5.0);
        d("stim.audio.noise_loud_min", 0.1);
        d("stim.audio.noise_loud_max", 1.0);
        i("stim.audio.words_min", 2);
        i("stim.audio.words_max", 30);
        d("stim.audio.words_per_minute", 120.0);
        d("stim.audio.burst_fade_s", 0.005);
        d("stim.light.interval_min_s", 30.0);
        d("stim.light.interval_max_s", 90.0);
        d("stim.light.duration_min_s", 5.0);
        d("stim.light.duration_max_s", 60.0);
        d("stim.light.brightness_min", 1.0);
        d("stim.light.brightness_max", 254.0);
        d("stim.light.blink_min_hz", 0.2);
        d("stim.light.blink_max_hz", 1.0);
        d("stim.light.blink_probability", 0.5);
        d("stim.co2.interval_min_s", 300.0);
        d("stim.co2.interval_max_s", 600.0);
        d("stim.co2.duration_min_s", 600.0);
        d("stim.co2.duration_max_s", 900.0);
        d("stim.co2.rate_low", 0.5);   // ppm * m^3 / s source strength
        d("stim.co2.rate_high", 1.5);

        // --- synthetic speech source ---
        d("speech.formant_min_hz", 300.0);
        d("speech.formant_max_hz", 3000.0);
        i("speech.formant_count", 3);
        d("speech.attack_decay_s", 0.05);
        d("speech.gap_s", 0.1);
        d("speech.level", 0.3);

        // --- room propagation ---
        d("env.speed_of_sound_mps", 343.0);
        d("env.min_distance_m", 0.3);
        d("env.door.loss_closed_db", 25.0);
        d("env.door.loss_half_open_db", 8.0);
        d("env.door.lowpass_closed_hz", 2000.0);
        d("env.door.scatter_frac", 0.6);  // power fraction diffused on door paths
        i("env.door.scatter_taps", 24);
        d("env.door.scatter_spread_s", 0.12);
        d("env.obstruction_lowpass_hz", 4000.0);
        d("env.light.leak_half_open", 0.05);
        d("env.light.attack_gain_half_open", 1.0);
        d("env.co2.decay_per_s", 1.25e-4);
        d("env.co2.exchange_half_open_per_s", 1.0e-3);
        d("env.co2.fan_factor", 4.0);
        d("env.co2.lag_s_per_m", 60.0);

        // --- ambient conditions ---
        d("ambient.audio.noise_floor_db", 43.0);
        d("ambient.audio.corridor_noise_floor_db", 52.0);
        d("ambient.audio.shared_frac", 0.02);  // power fraction shared within a zone
        d("ambient.daylight.room_lux", 120.0);
        d("ambient.daylight.corridor_lux", 60.0);
        d("ambient.daylight.wander_lux", 2.5);
        d("ambient.daylight.knot_interval_s", 300.0);
        d("ambient.daylight.steps_per_hour", 4.0);
        d("ambient.daylight.step_min_lux", 60.0);
        d("ambient.daylight.step_max_lux", 150.0);
        d("ambient.light.sensor_noise_lux", 0.3);
        d("ambient.rgb.sensor_noise", 1.0);
        d("ambient.co2.room_ppm", 420.0);
        d("ambient.co2.corridor_offset_ppm", 40.0);
        d("ambient.co2.wander_ppm", 2.0);
        d("ambient.co2.knot_interval_s", 600.0);
        d("ambient.co2.drafts_per_hour", 4.0);
        d("ambient.co2.draft_min_ppm", 8.0);
        d("ambient.co2.draft_max_ppm", 20.0);
        d("ambient.co2.draft_duration_s", 120.0);
        d("ambient.co2.sensor_noise_ppm", 1.0);
        s("ambient.human_activity", "preset");  // preset | none | office_two_persons
        d("ambient.human.speech_per_min", 6.0);
        i("ambient.human.words_min", 2);
        i("ambient.human.words_max", 8);
        d("ambient.human.loudness_min", 0.15);
        d("ambient.human.loudness_max", 0.6);
        d("ambient.human.co2_emission", 0.3);
        d("ambient.human.light_wander_lux", 8.0);
        d("ambient.human.light_knot_interval_s", 60.0);

        // --- adversarial stimuli ---
        s("attack.audio.kind", "constant_sine");  // none | constant_sine | staircase
        d("attack.audio.sine_hz", 150.0);
        d("attack.audio.level", 0.5);
        d("attack.audio.stair_low_hz", 40.0);
        d("attack.audio.stair_high_hz", 20000.0);
        d("attack.audio.stair_dwell_s", 10.0);
        s("attack.light.kind", "colored_lamp");  // none | colored_lamp | flashlight
        d("attack.light.brightness", 240.0);
        i("attack.light.color_r", 255);
        i("attack.light.color_g", 160);
        i("attack.light.color_b", 64);
        d("attack.light.dwell_min_s", 20.0);
        d("attack.light.dwell_max_s", 60.0);
        s("attack.co2.kind", "fan");  // none | fan
        d("attack.offset_m", 0.0);

        // --- signal processing ---
        d("sig.similarity.maxlag_ms", 150.0);
        d("sig.similarity.work_rate_hz", 11025.0);
        d("sig.similarity.min_length_s", 10.0);
        d("sig.sync.min_overlap_s", 1.0);
        i("sig.preprocess.savgol_window", 3);
        i("sig.preprocess.savgol_degree", 2);
        d("sig.preprocess.gaussian_sigma", 1.4);
        d("sig.preprocess.gaussian_truncate", 4.0);
        i("entropy.bins.audio", 19);
        i("entropy.bins.illuminance", 20);
        i("entropy.bins.rgb", 100);
        i("entropy.bins.co2", 20);

        // --- schemes ---
        d("zip.window_s", 30.0);
        d("zip.t_abs", 8.0);
        d("zip.t_rel", 0.01);
        i("zip.key_bits", 20);
        i("zip.step_bits", 4);
        d("zia.snippet_s", 60.0);
        d("zia.power_gate_db", 40.0);
        d("zia.full_scale_db", 120.0);

        // --- analysis defaults ---
        d("analysis.audio_snippet_s", 60.0);
        d("analysis.light_snippet_s", 60.0);
        d("analysis.co2_snippet_s", 300.0);
        b("analysis.full_dtw", true);

        // --- scenario presets ---
        d("preset.home.room_volume_m3", 36.0);
        d("preset.office.room_volume_m3", 50.0);
        d("preset.corridor_volume_m3", 30.0);
    }

    std::map<std::string, Value> values_;
};

} // namespace zipsim
