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

// Test-side reference implementations, written independently of the library
// so the two sides can disagree. Brute force where possible.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sunrise/workload.hpp"

namespace oracles {

// Walks every output position and kernel tap of a conv layer. Channel pairs
// are added per tap instead of looped so ResNet-scale layers stay fast;
// sparsity scales the total uniformly at the end.
inline std::uint64_t conv_macs(const sunrise::workload::LayerSpec& l) {
    const std::int64_t ih = l.in_h + 2 * static_cast<std::int64_t>(l.padding);
    std::uint64_t taps = 0;
    for (std::int64_t oy = 0; oy * static_cast<std::int64_t>(l.stride) + l.kernel_h <= ih;
         ++oy) {
        const std::int64_t iw = l.in_w + 2 * static_cast<std::int64_t>(l.padding);
        for (std::int64_t ox = 0;
             ox * static_cast<std::int64_t>(l.stride) + l.kernel_w <= iw; ++ox) {
            for (std::uint32_t ky = 0; ky < l.kernel_h; ++ky)
                for (std::uint32_t kx = 0; kx < l.kernel_w; ++kx) ++taps;
        }
    }
    const double exact = static_cast<double>(taps) * l.in_c * l.out_c * l.density;
    return static_cast<std::uint64_t>(std::llround(exact));
}

// Literal double loop over the weight matrix.
inline std::uint64_t fc_macs(const sunrise::workload::LayerSpec& l) {
    std::uint64_t n = 0;
    for (std::uint32_t i = 0; i < l.in_c; ++i)
        for (std::uint32_t o = 0; o < l.out_c; ++o) ++n;
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * l.density));
}

inline std::uint64_t layer_macs(const sunrise::workload::LayerSpec& l) {
    using sunrise::workload::LayerKind;
    if (l.kind == LayerKind::Conv2D) return conv_macs(l);
    if (l.kind == LayerKind::FullyConnected) return fc_macs(l);
    return 0;
}

// Cycle-accurate round-robin DRAM pool: each array delivers one word of W
// bytes every L cycles, all arrays staggered by their own countdown. Returns
// bytes delivered in the first `cycles` cycles.
inline std::uint64_t pool_bytes_delivered(std::uint64_t arrays, std::uint64_t latency,
                                          std::uint64_t word_bytes, std::uint64_t cycles) {
    std::uint64_t bytes = 0;
    std::vector<std::uint64_t> timer(arrays, latency);
    for (std::uint64_t c = 0; c < cycles; ++c) {
        for (auto& t : timer) {
            if (--t == 0) {
                bytes += word_bytes;
                t = latency;
            }
        }
    }
    return bytes;
}

// Smallest array count whose aggregate rate covers the demand, by scan.
inline std::uint64_t arrays_to_cover(double demand_bytes_per_cycle, std::uint64_t latency,
                                     std::uint64_t word_bytes) {
    if (demand_bytes_per_cycle <= 0.0) return 0;
    for (std::uint64_t n = 1;; ++n) {
        if (static_cast<double>(n) * static_cast<double>(word_bytes) >=
            demand_bytes_per_cycle * static_cast<double>(latency))
            return n;
    }
}

// Closed-form tile phases recomputed from scratch in raw doubles. Mirrors the
// weight-stationary contract: rounds from output channels over the VPU pool,
// broadcast counted once per input byte, weight load once per layer, ingress
// over the host link.
struct RawPhases {
    double rounds;
    double compute;
    double broadcast;
    double weight_load;
    double writeback;
    double ingress;
};

struct RawLayer {
    double macs;
    double in_bytes;
    double weight_bytes;
    double out_bytes;
    double out_channels;
    double ingress_bytes;
};

struct RawArch {
    double vpu_count;
    double macs_per_vpu;
    double fabric_bpc;
    double weight_bpc;
    double writeback_bpc;
    double ingress_bpc;
};

inline double ceil_cycles(double work, double rate) {
    if (work <= 0.0) return 0.0;
    return std::ceil(work / rate);
}

inline RawPhases phases(const RawLayer& l, const RawArch& a, double batch) {
    RawPhases p{};
    p.rounds = std::max(1.0, std::ceil(l.out_channels / a.vpu_count));
    const double per_vpu = l.macs * p.rounds / l.out_channels;
    p.compute = ceil_cycles(per_vpu * batch, a.macs_per_vpu);
    p.broadcast = ceil_cycles(l.in_bytes * batch, a.fabric_bpc);
    p.weight_load = ceil_cycles(l.weight_bytes, a.weight_bpc);
    p.writeback = ceil_cycles(l.out_bytes * batch, a.fabric_bpc) +
                  ceil_cycles(l.out_bytes * batch, a.writeback_bpc);
    p.ingress = ceil_cycles(l.ingress_bytes * batch, a.ingress_bpc);
    return p;
}

// Counts whole grid cells of side sqrt(area) fully inside the wafer circle.
// Coarse placement bound; agrees with the row-sum formula to a few percent
// for mid-size dies.
inline std::uint64_t grid_dies(double area_mm2, double diameter_mm) {
    const double side = std::sqrt(area_mm2);
    const double r = diameter_mm / 2.0;
    const auto n = static_cast<std::int64_t>(std::ceil(r / side)) + 1;
    std::uint64_t count = 0;
    for (std::int64_t ix = -n; ix < n; ++ix) {
        for (std::int64_t iy = -n; iy < n; ++iy) {
            const double x0 = static_cast<double>(ix) * side;
            const double y0 = static_cast<double>(iy) * side;
            const double x = std::max(std::abs(x0), std::abs(x0 + side));
            const double y = std::max(std::abs(y0), std::abs(y0 + side));
            if (x * x + y * y <= r * r) ++count;
        }
    }
    return count;
}

}  // namespace oracles
