#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipsim/core/types.hpp"

namespace zipsim {

/// Sensor CSV layout: header "timestamp,value" (scalar) or "timestamp,r,g,b".
/// Timestamps are seconds from recording start, strictly increasing.
inline void write_sensor_csv(const std::string& path, const TimeSeries& ts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << (ts.channels == 3 ? "timestamp,r,g,b\n" : "timestamp,value\n");
    char line[160];
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.channels == 3) {
            std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%.6f\n", ts.timestamp(i),
                          ts.at(i, 0), ts.at(i, 1), ts.at(i, 2));
        } else {
            std::snprintf(line, sizeof(line), "%.6f,%.6f\n", ts.timestamp(i), ts.at(i, 0));
        }
        out << line;
    }
    if (!out) throw std::runtime_error("short write: " + path);
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

/// Reads a sensor CSV back, validating the schema. Errors name the offending
/// file and 1-based line number.
inline TimeSeries read_sensor_csv(const std::string& path, SensorKind kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);

    const auto header = detail::split_csv_line(line);
    int channels = 0;
    if (header.size() == 2 && header[0] == "timestamp" && header[1] == "value") {
        channels = 1;
    } else if (header.size() == 4 && header[0] == "timestamp" && header[1] == "r" &&
               header[2] == "g" && header[3] == "b") {
        channels = 3;
    } else {
        throw std::runtime_error(path + ":1: bad header (want timestamp,value or timestamp,r,g,b)");
    }

    TimeSeries ts;
    ts.channels = channels;
    ts.kind = kind;
    std::vector<double> stamps;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != static_cast<std::size_t>(channels) + 1)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": wrong column count");
        double t = 0.0;
        try {
            t = std::stod(cells[0]);
            for (int c = 0; c < channels; ++c)
                ts.values.push_back(std::stod(cells[static_cast<std::size_t>(c) + 1]));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unparsable number");
        }
        if (!stamps.empty() && t <= stamps.back())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": timestamps not strictly increasing");
        stamps.push_back(t);
    }
    if (stamps.empty()) throw std::runtime_error(path + ": no data rows");

    if (stamps.size() >= 2) {
        const double dt = stamps[1] - stamps[0];
        for (std::size_t i = 1; i < stamps.size(); ++i) {
            const double gap = stamps[i] - stamps[i - 1];
            if (std::abs(gap - dt) > dt + 1e-9)
                throw std::runtime_error(path + ":" + std::to_string(i + 2) +
                                         ": sampling not uniform within one tick");
        }
        ts.rate = 1.0 / dt;
    }
    ts.t0 = stamps[0];
    return ts;
}

} // namespace zipsim
