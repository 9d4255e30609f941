#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim {

// 16-bit PCM mono WAV, little-endian RIFF. Covers exactly what the recording
// bundle needs; anything else is rejected with a descriptive error on read.

namespace detail {

inline void put_u32(std::vector<unsigned char>& b, std::uint32_t v) {
    b.push_back(static_cast<unsigned char>(v & 0xff));
    b.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    b.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
    b.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

inline void put_u16(std::vector<unsigned char>& b, std::uint16_t v) {
    b.push_back(static_cast<unsigned char>(v & 0xff));
    b.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

inline std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

} // namespace detail

inline std::int16_t float_to_pcm16(float v) {
    if (v > 1.0f) v = 1.0f;
    if (v < -1.0f) v = -1.0f;
    const double scaled = static_cast<double>(v) * 32767.0;
    return static_cast<std::int16_t>(scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
}

inline void write_wav(const std::string& path, const AudioClip& clip) {
    const std::uint32_t rate = static_cast<std::uint32_t>(clip.sample_rate);
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);

    std::vector<unsigned char> header;
    header.reserve(44);
    const char* riff = "RIFF";
    header.insert(header.end(), riff, riff + 4);
    detail::put_u32(header, 36 + data_bytes);
    const char* wavefmt = "WAVEfmt ";
    header.insert(header.end(), wavefmt, wavefmt + 8);
    detail::put_u32(header, 16);       // fmt chunk size
    detail::put_u16(header, 1);        // PCM
    detail::put_u16(header, 1);        // mono
    detail::put_u32(header, rate);
    detail::put_u32(header, rate * 2); // byte rate
    detail::put_u16(header, 2);        // block align
    detail::put_u16(header, 16);       // bits per sample
    const char* data = "data";
    header.insert(header.end(), data, data + 4);
    detail::put_u32(header, data_bytes);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(header.data()),
              static_cast<std::streamsize>(header.size()));

    std::vector<char> buf;
    buf.resize(clip.samples.size() * 2);
    for (std::size_t i = 0; i < clip.samples.size(); ++i) {
        const std::int16_t s = float_to_pcm16(clip.samples[i]);
        buf[2 * i] = static_cast<char>(s & 0xff);
        buf[2 * i + 1] = static_cast<char>((s >> 8) & 0xff);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("short write: " + path);
}

inline AudioClip read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open WAV: " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw std::runtime_error("not a RIFF/WAVE file: " + path);

    AudioClip clip;
    std::size_t pos = 12;
    bool have_fmt = false;
    while (pos + 8 <= bytes.size()) {
        const std::string id(reinterpret_cast<const char*>(bytes.data() + pos), 4);
        const std::uint32_t size = detail::get_u32(bytes.data() + pos + 4);
        pos += 8;
        if (pos + size > bytes.size())
            throw std::runtime_error("truncated WAV chunk '" + id + "': " + path);
        if (id == "fmt ") {
            if (size < 16) throw std::runtime_error("bad fmt chunk: " + path);
            const std::uint16_t format = detail::get_u16(bytes.data() + pos);
            const std::uint16_t channels = detail::get_u16(bytes.data() + pos + 2);
            const std::uint32_t rate = detail::get_u32(bytes.data() + pos + 4);
            const std::uint16_t bits = detail::get_u16(bytes.data() + pos + 14);
            if (format != 1 || channels != 1 || bits != 16)
                throw std::runtime_error("unsupported WAV (need PCM16 mono): " + path);
            clip.sample_rate = rate;
            have_fmt = true;
        } else if (id == "data") {
            if (!have_fmt) throw std::runtime_error("WAV data before fmt: " + path);
            clip.samples.resize(size / 2);
            for (std::size_t i = 0; i < clip.samples.size(); ++i) {
                const std::int16_t s = static_cast<std::int16_t>(
                    bytes[pos + 2 * i] | (bytes[pos + 2 * i + 1] << 8));
                clip.samples[i] = static_cast<float>(s) / 32767.0f;
            }
            return clip;
        }
        pos += size + (size & 1);
    }
    throw std::runtime_error("WAV has no data chunk: " + path);
}

} // namespace zipsim
