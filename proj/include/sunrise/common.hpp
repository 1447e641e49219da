/*
 * Copyright 2026 The sunrise-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sunrise {

// Thrown when a config or model violates a documented invariant. The message
// names the offending field or layer.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on unreadable/missing/malformed files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unit conventions used throughout:
//   bandwidth   - stored in bits/s (interconnect) or bytes/s (architecture)
//   1 TB        - 1e12 bytes = 8e12 bits (decimal, not binary)
//   energy      - picojoules at the model level, joules in reports
//   frequency   - GHz in configs, Hz internally where noted
inline constexpr double kBitsPerTb = 8e12;
inline constexpr double kBytesPerTb = 1e12;
inline constexpr double kBytesPerGb = 1e9;   // 1 GB = 1e9 bytes
inline constexpr double kBitsPerByte = 8.0;

inline std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0 : (num + den - 1) / den;
}

// Cycle count for moving `bytes` at `bytes_per_cycle`; 0 bytes cost 0 cycles.
inline std::uint64_t cycles_for(double bytes, double bytes_per_cycle) {
    if (bytes <= 0.0) return 0;
    if (bytes_per_cycle <= 0.0)
        throw ValidationError("cycles_for: bandwidth must be positive");
    return static_cast<std::uint64_t>(std::ceil(bytes / bytes_per_cycle));
}

// Fixed formatting for reports: 3 significant digits, no locale, no
// scientific notation below 1e6. Deterministic across runs.
inline std::string format_sig3(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    const double av = std::abs(v);
    std::ostringstream os;
    if (av >= 1e6 || av < 1e-3) {
        os.precision(2);
        os << std::scientific << v;
    } else {
        const int exponent = static_cast<int>(std::floor(std::log10(av)));
        const int decimals = 2 - exponent;
        os.precision(decimals < 0 ? 0 : decimals);
        os << std::fixed << v;
    }
    return os.str();
}

}  // namespace sunrise
