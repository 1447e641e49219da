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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "sunrise/common.hpp"

namespace sunrise::unimem {

// Pooled-DRAM bandwidth math. Many slow arrays served round-robin behave like
// one fast memory: each array delivers word_bytes every array_latency cycles,
// so a pool of k arrays sustains k*W/L bytes/cycle until the shared bus caps
// it. Bank conflicts are not modeled; weight-stationary access is streaming
// by construction, so ideal interleaving is the documented idealization.

struct DramArrayPool {
    std::string name;
    std::uint32_t array_count = 1;
    std::uint32_t array_latency = 64;       // cycles, access round-trip of one array
    std::uint32_t word_bytes = 64;          // bytes delivered per array access
    std::uint64_t array_capacity = 0;       // bytes per array
    double bus_limit = 1e18;                // bytes/cycle ceiling of the pool's link
    double refresh_derate = 1.0;            // multiplicative, 1.0 = refresh ignored

    void validate() const {
        auto fail = [this](const std::string& what) {
            throw ValidationError("pool '" + name + "': " + what);
        };
        if (array_count < 1) fail("array_count must be >= 1");
        if (array_latency < 1) fail("array_latency must be >= 1");
        if (word_bytes < 1) fail("word_bytes must be >= 1");
        if (bus_limit <= 0.0) fail("bus_limit must be > 0");
        if (refresh_derate <= 0.0 || refresh_derate > 1.0)
            fail("refresh_derate must be in (0,1]");
    }
};

// Bytes/cycle the pool sustains under perfect round-robin interleaving.
inline double sustained_bandwidth(const DramArrayPool& pool) {
    pool.validate();
    const double raw = static_cast<double>(pool.array_count) * pool.word_bytes /
                       pool.array_latency * pool.refresh_derate;
    return std::min(raw, pool.bus_limit);
}

// Smallest array count whose pooled rate meets `demand` bytes/cycle.
inline std::uint64_t arrays_to_saturate(double demand, std::uint32_t array_latency,
                                        std::uint32_t word_bytes) {
    if (demand < 0.0) throw ValidationError("arrays_to_saturate: demand must be >= 0");
    if (array_latency < 1 || word_bytes < 1)
        throw ValidationError("arrays_to_saturate: latency and word_bytes must be >= 1");
    if (demand == 0.0) return 0;
    return static_cast<std::uint64_t>(
        std::ceil(demand * array_latency / word_bytes));
}

inline std::uint64_t pool_capacity(const DramArrayPool& pool) {
    pool.validate();
    return static_cast<std::uint64_t>(pool.array_count) * pool.array_capacity;
}

// Pool bandwidth in bytes/s at a given clock.
inline double pool_bandwidth_at_clock(const DramArrayPool& pool, double clock_ghz) {
    if (clock_ghz <= 0.0)
        throw ValidationError("pool_bandwidth_at_clock: clock must be > 0");
    return sustained_bandwidth(pool) * clock_ghz * 1e9;
}

}  // namespace sunrise::unimem
