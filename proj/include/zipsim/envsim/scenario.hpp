#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/params.hpp"
#include "zipsim/core/types.hpp"
#include "zipsim/stimgen/stimulus.hpp"

namespace zipsim::envsim {

/// The four experimental settings: passive/active attack, with or without
/// stimulus injection running.
enum class Setting { PA, AA, PAH, AAH };

inline bool attack_active(Setting s) { return s == Setting::AA || s == Setting::AAH; }
inline bool injection_active(Setting s) { return s == Setting::PAH || s == Setting::AAH; }

enum class DoorState { closed, half_open };

/// The door is closed for passive attacks and half-open for active ones.
inline DoorState door_state_for(Setting s) {
    return attack_active(s) ? DoorState::half_open : DoorState::closed;
}

inline std::string to_string(Setting s) {
    switch (s) {
        case Setting::PA: return "PA";
        case Setting::AA: return "AA";
        case Setting::PAH: return "PA+H";
        case Setting::AAH: return "AA+H";
    }
    return "?";
}

inline Setting setting_from_string(const std::string& s) {
    if (s == "PA") return Setting::PA;
    if (s == "AA") return Setting::AA;
    if (s == "PA+H" || s == "PAH") return Setting::PAH;
    if (s == "AA+H" || s == "AAH") return Setting::AAH;
    throw std::invalid_argument("unknown setting: " + s + " (want PA, AA, PA+H or AA+H)");
}

enum class Zone { room, corridor };

struct SensorSet {
    bool microphone = true;
    bool illuminance = true;
    bool rgb = true;
    bool co2 = true;
};

struct DeviceSpec {
    std::string id;
    Vec3 position;
    bool obstructed = false;
    bool colocated = true;  // false: the adversarial device outside the room
    SensorSet sensors;

    Zone zone() const { return colocated ? Zone::room : Zone::corridor; }
};

struct ActuatorSpec {
    std::string id;
    Modality modality = Modality::audio;
    Vec3 position;
    std::optional<stimgen::StimulusSchedule> schedule;  // present only when injecting
};

enum class AudioAttackKind { none, constant_sine, staircase };
enum class LightAttackKind { none, colored_lamp, flashlight };
enum class Co2AttackKind { none, fan };

struct AttackSpec {
    AudioAttackKind audio = AudioAttackKind::none;
    double audio_sine_hz = 150.0;
    double audio_level = 0.5;
    double stair_low_hz = 40.0;
    double stair_high_hz = 20000.0;
    double stair_dwell_s = 10.0;

    LightAttackKind light = LightAttackKind::none;
    double light_brightness = 240.0;
    std::array<int, 3> light_color{255, 160, 64};
    double light_dwell_min_s = 20.0;
    double light_dwell_max_s = 60.0;

    Co2AttackKind co2 = Co2AttackKind::none;
    double fan_factor = 4.0;

    double attacker_offset_m = 0.0;
};

inline AttackSpec attack_from_params(const Params& p) {
    AttackSpec a;
    const std::string audio = p.get_s("attack.audio.kind");
    if (audio == "constant_sine") a.audio = AudioAttackKind::constant_sine;
    else if (audio == "staircase") a.audio = AudioAttackKind::staircase;
    else if (audio != "none") throw std::invalid_argument("bad attack.audio.kind: " + audio);
    a.audio_sine_hz = p.get_d("attack.audio.sine_hz");
    a.audio_level = p.get_d("attack.audio.level");
    a.stair_low_hz = p.get_d("attack.audio.stair_low_hz");
    a.stair_high_hz = p.get_d("attack.audio.stair_high_hz");
    a.stair_dwell_s = p.get_d("attack.audio.stair_dwell_s");

    const std::string light = p.get_s("attack.light.kind");
    if (light == "colored_lamp") a.light = LightAttackKind::colored_lamp;
    else if (light == "flashlight") a.light = LightAttackKind::flashlight;
    else if (light != "none") throw std::invalid_argument("bad attack.light.kind: " + light);
    a.light_brightness = p.get_d("attack.light.brightness");
    a.light_color = {static_cast<int>(p.get_i("attack.light.color_r")),
                     static_cast<int>(p.get_i("attack.light.color_g")),
                     static_cast<int>(p.get_i("attack.light.color_b"))};
    if (a.light == LightAttackKind::flashlight) {
        a.light_color = {255, 255, 255};
        a.light_brightness = 254.0;
    }
    a.light_dwell_min_s = p.get_d("attack.light.dwell_min_s");
    a.light_dwell_max_s = p.get_d("attack.light.dwell_max_s");

    const std::string co2 = p.get_s("attack.co2.kind");
    if (co2 == "fan") a.co2 = Co2AttackKind::fan;
    else if (co2 != "none") throw std::invalid_argument("bad attack.co2.kind: " + co2);
    a.fan_factor = p.get_d("env.co2.fan_factor");
    a.attacker_offset_m = p.get_d("attack.offset_m");
    return a;
}

/// A complete simulated experiment: room, devices, actuators, attack and
/// ambient configuration, plus the seed everything is derived from.
struct Scenario {
    std::string name;
    Setting setting = Setting::PA;
    std::uint64_t seed = 0;

    double room_volume_m3 = 40.0;
    double corridor_volume_m3 = 30.0;
    Vec3 door_position;

    std::vector<DeviceSpec> devices;
    std::vector<ActuatorSpec> actuators;
    AttackSpec attack;
    bool humans_present = false;

    std::set<Modality> modalities{Modality::audio, Modality::light, Modality::co2};
    Params params;

    DoorState door() const { return door_state_for(setting); }

    double duration_for(Modality m) const {
        switch (m) {
            case Modality::audio: return params.get_d("sim.audio_duration_s");
            case Modality::light: return params.get_d("sim.light_duration_s");
            case Modality::co2: return params.get_d("sim.co2_duration_s");
        }
        return 0.0;
    }

    const DeviceSpec& adversary() const {
        for (const auto& d : devices)
            if (!d.colocated) return d;
        throw std::logic_error("scenario has no adversarial device");
    }
};

/// Checks the structural invariants before any simulation starts.
inline void validate_scenario(const Scenario& sc) {
    int adversaries = 0;
    for (const auto& d : sc.devices)
        if (!d.colocated) ++adversaries;
    if (adversaries != 1)
        throw std::invalid_argument("scenario must have exactly one adversarial device");

    const bool inject = injection_active(sc.setting);
    for (const auto& a : sc.actuators) {
        if (sc.modalities.count(a.modality) == 0) continue;
        if (!inject && a.schedule.has_value())
            throw std::invalid_argument("setting " + to_string(sc.setting) +
                                        " must not carry injection schedules (actuator " + a.id + ")");
        if (inject && !a.schedule.has_value())
            throw std::invalid_argument("setting " + to_string(sc.setting) +
                                        " requires a schedule on actuator " + a.id);
    }

    if (attack_active(sc.setting)) {
        bool any = false;
        for (Modality m : sc.modalities) {
            if (m == Modality::audio && sc.attack.audio != AudioAttackKind::none) any = true;
            if (m == Modality::light && sc.attack.light != LightAttackKind::none) any = true;
            if (m == Modality::co2 && sc.attack.co2 != Co2AttackKind::none) any = true;
        }
        if (!any)
            throw std::invalid_argument("active-attack setting needs an attack for a simulated modality");
    }
}

} // namespace zipsim::envsim
